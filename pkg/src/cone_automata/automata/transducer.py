"""Rational transducers and inverse images of languages under them."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from cone_automata.automata.closure import remove_epsilon, trim
from cone_automata.automata.letters import Alphabet, Word
from cone_automata.automata.nfa import Edge, Nfa
from cone_automata.automata.onecounter import BOTH_FLAGS, CounterEdge, OneCounterAutomaton, ZeroFlag
from cone_automata.automata.onecounter import trim as trim_counter
from cone_automata.errors import AlphabetError, ConstructionError

# (source, input letter or None, target, output word)
TransducerEdge = tuple[int, str | None, int, Word]


def _edge_key(edge: TransducerEdge) -> tuple[int, bool, str, int, Word]:
    src, letter, dst, output = edge
    return (src, letter is not None, letter or "", dst, output)


@dataclass(frozen=True)
class Transducer:
    input_alphabet: Alphabet
    output_alphabet: Alphabet
    num_states: int
    initial: int
    accepting: frozenset[int]
    edges: tuple[TransducerEdge, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.initial < self.num_states:
            raise ConstructionError(f"initial state {self.initial} outside 0..{self.num_states - 1}")
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if any(not 0 <= state < self.num_states for state in self.accepting):
            raise ConstructionError("accepting state outside the state range")
        normalized = []
        for src, letter, dst, output in self.edges:
            if not (0 <= src < self.num_states and 0 <= dst < self.num_states):
                raise ConstructionError(f"edge endpoint outside the state range: {(src, letter, dst)}")
            if letter is not None and letter not in self.input_alphabet:
                raise ConstructionError(f"input letter {letter!r} outside the input alphabet")
            normalized.append((src, letter, dst, self.output_alphabet.check_word(output)))
        object.__setattr__(self, "edges", tuple(sorted(set(normalized), key=_edge_key)))

    @property
    def states(self) -> range:
        return range(self.num_states)

    @cached_property
    def _out(self) -> dict[tuple[int, str | None], tuple[tuple[int, Word], ...]]:
        table: dict[tuple[int, str | None], list[tuple[int, Word]]] = {}
        for src, letter, dst, output in self.edges:
            table.setdefault((src, letter), []).append((dst, output))
        return {key: tuple(moves) for key, moves in table.items()}

    @cached_property
    def max_output(self) -> int:
        return max((len(output) for *_, output in self.edges), default=0)

    def moves(self, state: int, letter: str | None) -> tuple[tuple[int, Word], ...]:
        return self._out.get((state, letter), ())

    def _closure(self, configs: Iterable[tuple[int, Word]], cap: int) -> set[tuple[int, Word]]:
        seen = set(configs)
        stack = list(seen)
        while stack:
            state, produced = stack.pop()
            for dst, output in self.moves(state, None):
                nxt = (dst, produced + output)
                if len(nxt[1]) <= cap and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    def outputs(self, word: Iterable[str]) -> set[Word]:
        """Outputs of all accepting runs on ``word``.

        Output words longer than ``(|word| + 1) * states * max_output`` are not
        explored, which only matters for machines with output-producing ε-cycles.
        """
        word = self.input_alphabet.check_word(word)
        cap = (len(word) + 1) * self.num_states * max(1, self.max_output)
        current = self._closure({(self.initial, ())}, cap)
        for letter in word:
            moved = {
                (dst, produced + output)
                for state, produced in current
                for dst, output in self.moves(state, letter)
                if len(produced) + len(output) <= cap
            }
            if not moved:
                return set()
            current = self._closure(moved, cap)
        return {produced for state, produced in current if state in self.accepting}

    def accepts(self, word: Iterable[str]) -> bool:
        return bool(self.outputs(word))


def transducer_outputs(t: Transducer, w: Iterable[str]) -> set[Word]:
    return t.outputs(w)


class TransducerBuilder:
    def __init__(self, input_alphabet: Alphabet, output_alphabet: Alphabet) -> None:
        self.input_alphabet = input_alphabet
        self.output_alphabet = output_alphabet
        self.num_states = 0
        self._accepting: set[int] = set()
        self._edges: list[TransducerEdge] = []

    def add_state(self, *, accepting: bool = False) -> int:
        state = self.num_states
        self.num_states += 1
        if accepting:
            self._accepting.add(state)
        return state

    def add_edge(self, src: int, letter: str | None, dst: int, output: Word = ()) -> None:
        self._edges.append((src, letter, dst, tuple(output)))

    def build(self, initial: int = 0) -> Transducer:
        return Transducer(
            input_alphabet=self.input_alphabet,
            output_alphabet=self.output_alphabet,
            num_states=self.num_states,
            initial=initial,
            accepting=frozenset(self._accepting),
            edges=tuple(self._edges),
        )


def identity_transducer(alphabet: Alphabet) -> Transducer:
    builder = TransducerBuilder(alphabet, alphabet)
    state = builder.add_state(accepting=True)
    for letter in alphabet.ids:
        builder.add_edge(state, letter, state, (letter,))
    return builder.build(state)


def _check_output_alphabet(t: Transducer, target: Alphabet) -> None:
    if not target.issubset(t.output_alphabet):
        raise AlphabetError(
            f"language alphabet {list(target.ids)} is not contained in the transducer output alphabet "
            f"{list(t.output_alphabet.ids)}"
        )


def transducer_inverse_image(t: Transducer, language: Nfa) -> Nfa:
    """``{u : some accepting run of t on u outputs a word of L}``.

    Each transducer edge consumes its whole output word on the ε-free form of
    ``L`` at once, so the product needs no intermediate states.
    """
    _check_output_alphabet(t, language.alphabet)
    target = remove_epsilon(language)

    def read(state: int, output: Word) -> set[int]:
        current = {state}
        for symbol in output:
            current = {dst for s in current for dst in target.targets(s, symbol)}
            if not current:
                break
        return current

    by_source: dict[int, list[TransducerEdge]] = {}
    for edge in t.edges:
        by_source.setdefault(edge[0], []).append(edge)
    start = (t.initial, target.initial)
    index = {start: 0}
    queue = deque([start])
    edges: list[Edge] = []
    while queue:
        pair = queue.popleft()
        p, q = pair
        for _, letter, dst, output in by_source.get(p, ()):
            for q2 in sorted(read(q, output)):
                nxt = (dst, q2)
                if nxt not in index:
                    index[nxt] = len(index)
                    queue.append(nxt)
                edges.append((index[pair], letter, index[nxt]))
    accepting = frozenset(i for (p, q), i in index.items() if p in t.accepting and q in target.accepting)
    return trim(Nfa(t.input_alphabet, len(index), 0, accepting, tuple(edges)))


def transducer_inverse_image_oc(t: Transducer, language: OneCounterAutomaton) -> OneCounterAutomaton:
    """One-counter version of :func:`transducer_inverse_image`.

    Output words are fed to ``L`` one letter at a time through in-flight states,
    so every counter move and zero test of ``L`` is replayed; ``L``'s own
    ε-moves may interleave anywhere.
    """
    _check_output_alphabet(t, language.alphabet)
    counter_moves: dict[tuple[int, str | None], list[tuple[ZeroFlag, int, int]]] = {}
    for src, letter, flag, dst, delta in language.edges:
        counter_moves.setdefault((src, letter), []).append((flag, dst, delta))
    t_edges = list(t.edges)
    by_source: dict[int, list[int]] = {}
    for i, edge in enumerate(t_edges):
        by_source.setdefault(edge[0], []).append(i)

    # key (edge, consumed, p, q): edge == -1 means T rests in state p;
    # otherwise T is inside t_edges[edge] with `consumed` output letters fed to L.
    Key = tuple[int, int, int, int]
    start: Key = (-1, 0, t.initial, language.initial)
    index: dict[Key, int] = {start: 0}
    queue = deque([start])
    edges: list[CounterEdge] = []

    def visit(key: Key) -> int:
        if key not in index:
            index[key] = len(index)
            queue.append(key)
        return index[key]

    def after(edge_index: int, consumed: int, q: int) -> Key:
        _, _, dst, output = t_edges[edge_index]
        if consumed == len(output):
            return (-1, 0, dst, q)
        return (edge_index, consumed, 0, q)

    while queue:
        key = queue.popleft()
        here = index[key]
        edge_index, consumed, p, q = key
        for flag, dst, delta in counter_moves.get((q, None), ()):
            edges.append((here, None, flag, visit((edge_index, consumed, p, dst)), delta))
        if edge_index < 0:
            for i in by_source.get(p, ()):
                _, letter, dst_t, output = t_edges[i]
                if not output:
                    target = visit((-1, 0, dst_t, q))
                    edges.extend((here, letter, flag, target, 0) for flag in BOTH_FLAGS)
                    continue
                for flag, dst, delta in counter_moves.get((q, output[0]), ()):
                    edges.append((here, letter, flag, visit(after(i, 1, dst)), delta))
        else:
            symbol = t_edges[edge_index][3][consumed]
            for flag, dst, delta in counter_moves.get((q, symbol), ()):
                edges.append((here, None, flag, visit(after(edge_index, consumed + 1, dst)), delta))

    accepting = frozenset(
        i for (e, _, p, q), i in index.items() if e < 0 and p in t.accepting and q in language.accepting
    )
    product = OneCounterAutomaton(t.input_alphabet, len(index), 0, accepting, tuple(edges), language.initial_counter)
    return trim_counter(product)
