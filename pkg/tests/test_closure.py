"""Closure operations checked against their word-level definitions."""

from hypothesis import given, settings
from hypothesis import strategies as st

from cone_automata.automata import Alphabet, closure

ALPHABET = Alphabet.paired("t")
LETTERS = ALPHABET.ids
MAX_LEN = 6

words = st.lists(st.sampled_from(LETTERS), max_size=MAX_LEN).map(tuple)
languages = st.sets(words, max_size=5)
images = st.lists(st.sampled_from(LETTERS), max_size=2).map(tuple)


def _all_words(max_len):
    found = [()]
    layer = [()]
    for _ in range(max_len):
        layer = [word + (letter,) for word in layer for letter in LETTERS]
        found.extend(layer)
    return set(found)


def _in_star(word, language):
    # word splits into members of language
    reachable = {0}
    for end in range(1, len(word) + 1):
        if any(start in reachable and word[start:end] in language for start in range(end)):
            reachable.add(end)
    return len(word) in reachable


def _apply(mapping, word):
    return tuple(letter for symbol in word for letter in mapping[symbol])


def _short(language):
    return {word for word in language if len(word) <= MAX_LEN}


# --- randomized pairs ---


@settings(max_examples=20, deadline=None)
@given(languages, languages)
def test_union_concat_intersect(left, right):
    a = closure.word_language(ALPHABET, left)
    b = closure.word_language(ALPHABET, right)
    assert closure.union(a, b).accepted_words(MAX_LEN) == left | right
    assert closure.concat(a, b).accepted_words(MAX_LEN) == _short({u + v for u in left for v in right})
    assert closure.intersect(a, b).accepted_words(MAX_LEN) == left & right


@settings(max_examples=20, deadline=None)
@given(languages)
def test_star_complement_reverse(language):
    m = closure.word_language(ALPHABET, language)
    nonempty = {word for word in language if word}
    star = closure.kleene_star(m).accepted_words(MAX_LEN)
    assert star == {word for word in _all_words(MAX_LEN) if _in_star(word, nonempty)}
    assert closure.complement(m).accepted_words(MAX_LEN) == _all_words(MAX_LEN) - language
    assert closure.reverse(m).accepted_words(MAX_LEN) == {word[::-1] for word in language}


@settings(max_examples=20, deadline=None)
@given(languages)
def test_determinize_and_remove_epsilon_keep_the_language(language):
    m = closure.union(closure.word_language(ALPHABET, language), closure.letter_plus(ALPHABET, "t"))
    expected = language | {("t",) * n for n in range(1, MAX_LEN + 1)}
    assert m.accepted_words(MAX_LEN) == expected
    deterministic = closure.determinize(m)
    assert closure.is_deterministic(deterministic)
    assert deterministic.accepted_words(MAX_LEN) == expected
    assert not closure.remove_epsilon(m).has_epsilon
    assert closure.remove_epsilon(m).accepted_words(MAX_LEN) == expected
    assert closure.trim(m).accepted_words(MAX_LEN) == expected


@settings(max_examples=20, deadline=None)
@given(languages)
def test_formal_inverse(language):
    m = closure.word_language(ALPHABET, language)
    inverted = closure.formal_inverse(m)
    assert inverted.accepted_words(MAX_LEN) == {ALPHABET.inverse_word(word) for word in language}
    assert closure.formal_inverse(inverted).accepted_words(MAX_LEN) == language


@settings(max_examples=20, deadline=None)
@given(languages, images, images)
def test_hom_image_matches_the_mapped_words(language, t_image, t_inverse_image):
    mapping = {"t": t_image, "t'": t_inverse_image}
    image = closure.hom_image(closure.word_language(ALPHABET, language), mapping, ALPHABET)
    assert image.accepted_words(MAX_LEN) == _short({_apply(mapping, word) for word in language})


@settings(max_examples=20, deadline=None)
@given(languages, images, images)
def test_inverse_hom_matches_the_preimage(language, t_image, t_inverse_image):
    mapping = {"t": t_image, "t'": t_inverse_image}
    nonempty = {word for word in language if word}
    starred = closure.kleene_star(closure.word_language(ALPHABET, language))
    pulled = closure.inverse_hom(starred, mapping, ALPHABET)
    expected = {word for word in _all_words(MAX_LEN) if _in_star(_apply(mapping, word), nonempty)}
    assert pulled.accepted_words(MAX_LEN) == expected
    finite = closure.inverse_hom(closure.word_language(ALPHABET, language), mapping, ALPHABET)
    assert finite.accepted_words(MAX_LEN) == {word for word in _all_words(MAX_LEN) if _apply(mapping, word) in language}


# --- literals and homomorphisms ---


def test_literals():
    assert closure.letter_plus(ALPHABET, "t").accepted_words(3) == {("t",), ("t", "t"), ("t", "t", "t")}
    assert closure.word_star(ALPHABET, ("t", "t'")).accepted_words(4) == {(), ("t", "t'"), ("t", "t'", "t", "t'")}
    assert closure.letters_star(ALPHABET, ["t'"]).accepted_words(2) == {(), ("t'",), ("t'", "t'")}
    assert closure.empty_language(ALPHABET).accepted_words(3) == set()


def test_inverse_hom_under_deletion():
    full = Alphabet.paired("x", "t")
    pulled = closure.inverse_hom(
        closure.letter_plus(ALPHABET, "t"),
        closure.deletion_map(full, ["x", "x'"]),
        full,
    )
    assert pulled.accepts(("x", "t", "x", "t"))
    assert pulled.accepts(("x'", "t"))
    assert not pulled.accepts(("x", "t", "t'"))
    assert not pulled.accepts(("x",))


def test_hom_image_projects_out_letters():
    full = Alphabet.paired("x", "t")
    m = closure.word_language(full, [("x", "t"), ("x", "x")])
    image = closure.hom_image(m, closure.deletion_map(full, ["x", "x'"]), ALPHABET)
    assert image.accepted_words(3) == {("t",), ()}
