"""Closure operations on regular languages and a few language literals.

Every operation returns a fresh :class:`Nfa`; sign partitions are dropped
except by :func:`remove_epsilon` and :func:`trim`, which preserve them.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping

from cone_automata.automata.letters import Alphabet, Word
from cone_automata.automata.nfa import Edge, Nfa, NfaBuilder, SignPartition
from cone_automata.errors import AlphabetError, ConstructionError

# =============================================================================
# Literals
# =============================================================================


def empty_language(alphabet: Alphabet) -> Nfa:
    builder = NfaBuilder(alphabet)
    return builder.build(builder.add_state())


def word_language(alphabet: Alphabet, words: Iterable[Word]) -> Nfa:
    """A trie accepting exactly ``words``."""
    builder = NfaBuilder(alphabet)
    root = builder.add_state()
    children: dict[tuple[int, str], int] = {}
    for word in words:
        alphabet.check_word(word)
        state = root
        for letter in word:
            key = (state, letter)
            if key not in children:
                children[key] = builder.add_state()
                builder.add_edge(state, letter, children[key])
            state = children[key]
        builder.set_accepting(state)
    return builder.build(root)


def letter_plus(alphabet: Alphabet, letter: str) -> Nfa:
    """``{x}+``."""
    alphabet.check_word((letter,))
    builder = NfaBuilder(alphabet)
    start = builder.add_state()
    run = builder.add_state(accepting=True)
    builder.add_edge(start, letter, run)
    builder.add_edge(run, letter, run)
    return builder.build(start)


def letters_star(alphabet: Alphabet, letters: Iterable[str]) -> Nfa:
    """``S*`` for a set of letters ``S``."""
    builder = NfaBuilder(alphabet)
    state = builder.add_state(accepting=True)
    builder.add_loop(state, alphabet.check_word(letters))
    return builder.build(state)


def word_star(alphabet: Alphabet, word: Word) -> Nfa:
    """``{w}*`` for a single word ``w``."""
    builder = NfaBuilder(alphabet)
    state = builder.add_state(accepting=True)
    builder.add_word_edge(state, alphabet.check_word(word), state)
    return builder.build(state)


def word_plus(alphabet: Alphabet, word: Word) -> Nfa:
    return concat(word_language(alphabet, [word]), word_star(alphabet, word))


# =============================================================================
# Structural helpers
# =============================================================================


def remove_epsilon(m: Nfa) -> Nfa:
    """Equivalent machine without ε-moves over the same states."""
    if not m.has_epsilon:
        return m
    closures = [m.epsilon_closure((state,)) for state in m.states]
    outgoing: dict[int, list[tuple[str, int]]] = {}
    for src, letter, dst in m.edges:
        if letter is not None:
            outgoing.setdefault(src, []).append((letter, dst))
    edges: list[Edge] = []
    accepting: set[int] = set()
    plus: set[int] = set()
    minus: set[int] = set()
    for state in m.states:
        closure = closures[state]
        if closure & m.accepting:
            accepting.add(state)
        if m.sign is not None:
            in_plus = bool(closure & m.sign.plus)
            in_minus = bool(closure & m.sign.minus)
            if in_plus and in_minus:
                raise ConstructionError(f"state {state} reaches both plus and minus acceptance by ε-moves")
            if in_plus:
                plus.add(state)
            elif in_minus:
                minus.add(state)
        for inner in closure:
            edges.extend((state, letter, dst) for letter, dst in outgoing.get(inner, ()))
    sign = SignPartition(frozenset(plus), frozenset(minus)) if m.sign is not None else None
    return Nfa(m.alphabet, m.num_states, m.initial, frozenset(accepting), tuple(edges), sign)


def trim(m: Nfa) -> Nfa:
    """Keep reachable and co-reachable states, renumbered in breadth-first order."""
    live = m.coreachable
    if m.initial not in live:
        return empty_language(m.alphabet)
    forward: dict[int, list[int]] = {}
    for src, _, dst in m.edges:
        forward.setdefault(src, []).append(dst)
    order: dict[int, int] = {m.initial: 0}
    queue = deque([m.initial])
    while queue:
        state = queue.popleft()
        for dst in forward.get(state, ()):
            if dst in live and dst not in order:
                order[dst] = len(order)
                queue.append(dst)
    edges = tuple(
        (order[src], letter, order[dst]) for src, letter, dst in m.edges if src in order and dst in order
    )
    accepting = frozenset(order[state] for state in m.accepting if state in order)
    sign = None
    if m.sign is not None:
        sign = SignPartition(
            frozenset(order[s] for s in m.sign.plus if s in order),
            frozenset(order[s] for s in m.sign.minus if s in order),
        )
    return Nfa(m.alphabet, len(order), 0, accepting, edges, sign)


def determinize(m: Nfa, *, complete: bool = False) -> Nfa:
    """Subset construction; states are numbered in discovery order."""
    start = m.start()
    index: dict[frozenset[int], int] = {start: 0}
    queue = deque([start])
    edges: list[Edge] = []
    while queue:
        subset = queue.popleft()
        for letter in m.alphabet.ids:
            target = m.step(subset, letter)
            if not target and not complete:
                continue
            if target not in index:
                index[target] = len(index)
                queue.append(target)
            edges.append((index[subset], letter, index[target]))
    accepting = frozenset(i for subset, i in index.items() if subset & m.accepting)
    return Nfa(m.alphabet, len(index), 0, accepting, tuple(edges))


def is_deterministic(m: Nfa) -> bool:
    if m.has_epsilon:
        return False
    seen: set[tuple[int, str | None]] = set()
    for src, letter, _ in m.edges:
        if (src, letter) in seen:
            return False
        seen.add((src, letter))
    return True


# =============================================================================
# Closure operations
# =============================================================================


def union(*machines: Nfa) -> Nfa:
    if not machines:
        raise ConstructionError("union of no machines")
    alphabet = machines[0].alphabet
    for m in machines[1:]:
        alphabet = alphabet.union(m.alphabet)
    builder = NfaBuilder(alphabet)
    start = builder.add_state()
    for m in machines:
        offset = builder.copy_machine(m)
        builder.add_edge(start, None, m.initial + offset)
        for state in m.accepting:
            builder.set_accepting(state + offset)
    return builder.build(start)


def concat(*machines: Nfa) -> Nfa:
    if not machines:
        raise ConstructionError("concatenation of no machines")
    alphabet = machines[0].alphabet
    for m in machines[1:]:
        alphabet = alphabet.union(m.alphabet)
    builder = NfaBuilder(alphabet)
    offsets = [builder.copy_machine(m) for m in machines]
    for i in range(len(machines) - 1):
        for state in machines[i].accepting:
            builder.add_edge(state + offsets[i], None, machines[i + 1].initial + offsets[i + 1])
    last, last_offset = machines[-1], offsets[-1]
    for state in last.accepting:
        builder.set_accepting(state + last_offset)
    return builder.build(machines[0].initial + offsets[0])


def kleene_star(m: Nfa) -> Nfa:
    builder = NfaBuilder(m.alphabet)
    start = builder.add_state(accepting=True)
    offset = builder.copy_machine(m)
    builder.add_edge(start, None, m.initial + offset)
    for state in m.accepting:
        builder.set_accepting(state + offset)
        builder.add_edge(state + offset, None, start)
    return builder.build(start)


def intersect(left: Nfa, right: Nfa) -> Nfa:
    """Product construction on the ε-free versions of both operands."""
    alphabet = left.alphabet.union(right.alphabet)
    a, b = remove_epsilon(left), remove_epsilon(right)
    shared = [letter for letter in a.alphabet.ids if letter in b.alphabet]
    start = (a.initial, b.initial)
    index = {start: 0}
    queue = deque([start])
    edges: list[Edge] = []
    while queue:
        pair = queue.popleft()
        p, q = pair
        for letter in shared:
            for p2 in a.targets(p, letter):
                for q2 in b.targets(q, letter):
                    nxt = (p2, q2)
                    if nxt not in index:
                        index[nxt] = len(index)
                        queue.append(nxt)
                    edges.append((index[pair], letter, index[nxt]))
    accepting = frozenset(i for (p, q), i in index.items() if p in a.accepting and q in b.accepting)
    return trim(Nfa(alphabet, len(index), 0, accepting, tuple(edges)))


def reverse(m: Nfa) -> Nfa:
    builder = NfaBuilder(m.alphabet)
    start = builder.add_state()
    offset = builder.num_states
    builder.num_states += m.num_states
    for src, letter, dst in m.edges:
        builder.add_edge(dst + offset, letter, src + offset)
    for state in m.accepting:
        builder.add_edge(start, None, state + offset)
    builder.set_accepting(m.initial + offset)
    return builder.build(start)


def complement(m: Nfa) -> Nfa:
    """Complement relative to ``m.alphabet*``."""
    complete = determinize(m, complete=True)
    accepting = frozenset(complete.states) - complete.accepting
    return Nfa(complete.alphabet, complete.num_states, complete.initial, accepting, complete.edges)


def hom_image(m: Nfa, mapping: Mapping[str, Word], target: Alphabet) -> Nfa:
    """Image of ``L(m)`` under the monoid homomorphism ``x -> mapping[x]``."""
    missing = [letter for letter in m.alphabet.ids if letter not in mapping]
    if missing:
        raise AlphabetError(f"homomorphism undefined on {missing}")
    builder = NfaBuilder(target)
    builder.num_states = m.num_states
    for src, letter, dst in m.edges:
        builder.add_word_edge(src, () if letter is None else target.check_word(mapping[letter]), dst)
    for state in m.accepting:
        builder.set_accepting(state)
    return builder.build(m.initial)


def inverse_hom(m: Nfa, mapping: Mapping[str, Word], source: Alphabet) -> Nfa:
    """``{w over source : mapping(w) in L(m)}``."""
    missing = [letter for letter in source.ids if letter not in mapping]
    if missing:
        raise AlphabetError(f"homomorphism undefined on {missing}")
    images = {letter: m.alphabet.check_word(mapping[letter]) for letter in source.ids}
    base = remove_epsilon(m)
    edges: list[Edge] = []
    for state in base.states:
        for letter, image in images.items():
            current = {state}
            for symbol in image:
                current = {dst for s in current for dst in base.targets(s, symbol)}
                if not current:
                    break
            edges.extend((state, letter, dst) for dst in current)
    return trim(Nfa(source, base.num_states, base.initial, base.accepting, tuple(edges)))


def deletion_map(source: Alphabet, deleted: Iterable[str]) -> dict[str, Word]:
    """The homomorphism erasing ``deleted`` and fixing every other letter."""
    erased = set(deleted)
    return {letter: () if letter in erased else (letter,) for letter in source.ids}


def rename_letters(m: Nfa, mapping: Mapping[str, str], target: Alphabet | None = None) -> Nfa:
    """Apply a letter-to-letter map, keeping states and the sign partition."""
    alphabet = target or m.alphabet
    edges = tuple(
        (src, None if letter is None else mapping.get(letter, letter), dst) for src, letter, dst in m.edges
    )
    return Nfa(alphabet, m.num_states, m.initial, m.accepting, edges, m.sign)


def formal_inverse(m: Nfa) -> Nfa:
    """``{xn^-1 ... x1^-1 : x1 ... xn accepted}``."""
    m.alphabet.require_paired()
    inverted = rename_letters(m, {letter: m.alphabet.inverse(letter) for letter in m.alphabet.ids})
    return reverse(Nfa(inverted.alphabet, inverted.num_states, inverted.initial, inverted.accepting, inverted.edges))
