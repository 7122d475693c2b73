"""Non-deterministic finite automata with ε-moves."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from cone_automata.automata.letters import Alphabet, Word
from cone_automata.errors import ConstructionError

# (source, letter or None for ε, target)
Edge = tuple[int, str | None, int]


def _edge_key(edge: Edge) -> tuple[int, bool, str, int]:
    src, letter, dst = edge
    return (src, letter is not None, letter or "", dst)


@dataclass(frozen=True)
class SignPartition:
    """Accepting states split into a plus part and a minus part."""

    plus: frozenset[int]
    minus: frozenset[int]


@dataclass(frozen=True)
class Nfa:
    """An ε-NFA with dense integer states ``0..num_states-1``.

    Edges are stored deduplicated and sorted, which makes serialization canonical.
    """

    alphabet: Alphabet
    num_states: int
    initial: int
    accepting: frozenset[int]
    edges: tuple[Edge, ...]
    sign: SignPartition | None = field(default=None)

    def __post_init__(self) -> None:
        if not 0 <= self.initial < self.num_states:
            raise ConstructionError(f"initial state {self.initial} outside 0..{self.num_states - 1}")
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if any(not 0 <= state < self.num_states for state in self.accepting):
            raise ConstructionError("accepting state outside the state range")
        for src, letter, dst in self.edges:
            if not (0 <= src < self.num_states and 0 <= dst < self.num_states):
                raise ConstructionError(f"edge endpoint outside the state range: {(src, letter, dst)}")
            if letter is not None and letter not in self.alphabet:
                raise ConstructionError(f"edge letter {letter!r} outside the alphabet")
        object.__setattr__(self, "edges", tuple(sorted(set(self.edges), key=_edge_key)))
        if self.sign is not None:
            if self.sign.plus & self.sign.minus or (self.sign.plus | self.sign.minus) != self.accepting:
                raise ConstructionError("sign partition must split the accepting states")

    @property
    def states(self) -> range:
        return range(self.num_states)

    @cached_property
    def _out(self) -> dict[tuple[int, str | None], tuple[int, ...]]:
        table: dict[tuple[int, str | None], list[int]] = {}
        for src, letter, dst in self.edges:
            table.setdefault((src, letter), []).append(dst)
        return {key: tuple(targets) for key, targets in table.items()}

    @cached_property
    def has_epsilon(self) -> bool:
        return any(letter is None for _, letter, _ in self.edges)

    def targets(self, state: int, letter: str | None) -> tuple[int, ...]:
        return self._out.get((state, letter), ())

    def epsilon_closure(self, states: Iterable[int]) -> frozenset[int]:
        seen = set(states)
        stack = list(seen)
        while stack:
            state = stack.pop()
            for nxt in self.targets(state, None):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return frozenset(seen)

    def start(self) -> frozenset[int]:
        return self.epsilon_closure((self.initial,))

    def step(self, states: Iterable[int], letter: str) -> frozenset[int]:
        moved = {dst for state in states for dst in self.targets(state, letter)}
        return self.epsilon_closure(moved) if moved else frozenset()

    def run(self, word: Word) -> frozenset[int]:
        current = self.start()
        for letter in word:
            if not current:
                break
            current = self.step(current, letter)
        return current

    def accepts(self, word: Iterable[str]) -> bool:
        return bool(self.run(self.alphabet.check_word(word)) & self.accepting)

    def sign_of(self, word: Iterable[str]) -> int:
        """``+1`` if plus-accepted, ``-1`` if minus-accepted, ``0`` otherwise."""
        if self.sign is None:
            raise ConstructionError("machine has no sign partition")
        reached = self.run(self.alphabet.check_word(word))
        plus = bool(reached & self.sign.plus)
        minus = bool(reached & self.sign.minus)
        if plus and minus:
            raise ConstructionError(f"word {word} is both plus- and minus-accepted")
        return 1 if plus else -1 if minus else 0

    @cached_property
    def coreachable(self) -> frozenset[int]:
        """States from which an accepting state can be reached."""
        backward: dict[int, list[int]] = {}
        for src, _, dst in self.edges:
            backward.setdefault(dst, []).append(src)
        seen = set(self.accepting)
        queue = deque(seen)
        while queue:
            state = queue.popleft()
            for prev in backward.get(state, ()):
                if prev not in seen:
                    seen.add(prev)
                    queue.append(prev)
        return frozenset(seen)

    def accepted_words(self, max_len: int) -> set[Word]:
        """All accepted words of length at most ``max_len``."""
        live = self.coreachable
        results: set[Word] = set()
        frontier: dict[Word, frozenset[int]] = {(): self.start() & live}
        for length in range(max_len + 1):
            upcoming: dict[Word, frozenset[int]] = {}
            for word, states in frontier.items():
                if states & self.accepting:
                    results.add(word)
                if length == max_len:
                    continue
                for letter in self.alphabet.ids:
                    reached = self.step(states, letter) & live
                    if reached:
                        upcoming[word + (letter,)] = reached
            frontier = upcoming
        return results


def nfa_accepts(m: Nfa, w: Iterable[str]) -> bool:
    return m.accepts(w)


def nfa_accepted_words(m: Nfa, max_len: int) -> set[Word]:
    return m.accepted_words(max_len)


class NfaBuilder:
    """Incremental construction with word-labelled edges expanded into chains."""

    def __init__(self, alphabet: Alphabet) -> None:
        self.alphabet = alphabet
        self.num_states = 0
        self._accepting: set[int] = set()
        self._plus: set[int] = set()
        self._minus: set[int] = set()
        self._edges: list[Edge] = []

    def add_state(self, *, accepting: bool = False, sign: int = 0) -> int:
        state = self.num_states
        self.num_states += 1
        if accepting or sign:
            self.set_accepting(state, sign=sign)
        return state

    def add_states(self, count: int) -> list[int]:
        return [self.add_state() for _ in range(count)]

    def set_accepting(self, state: int, *, sign: int = 0) -> None:
        self._accepting.add(state)
        if sign > 0:
            self._plus.add(state)
        elif sign < 0:
            self._minus.add(state)

    def add_edge(self, src: int, letter: str | None, dst: int) -> None:
        self._edges.append((src, letter, dst))

    def add_word_edge(self, src: int, word: Word, dst: int) -> None:
        if not word:
            self.add_edge(src, None, dst)
            return
        current = src
        for letter in word[:-1]:
            nxt = self.add_state()
            self.add_edge(current, letter, nxt)
            current = nxt
        self.add_edge(current, word[-1], dst)

    def add_loop(self, state: int, letters: Iterable[str]) -> None:
        for letter in letters:
            self.add_edge(state, letter, state)

    def copy_machine(self, m: Nfa) -> int:
        """Add ``m``'s states and edges; returns the offset of its state 0."""
        offset = self.num_states
        self.num_states += m.num_states
        self._edges.extend((src + offset, letter, dst + offset) for src, letter, dst in m.edges)
        return offset

    def build(self, initial: int = 0, *, signed: bool = False) -> Nfa:
        sign = SignPartition(frozenset(self._plus), frozenset(self._minus)) if signed else None
        return Nfa(
            alphabet=self.alphabet,
            num_states=self.num_states,
            initial=initial,
            accepting=frozenset(self._accepting),
            edges=tuple(self._edges),
            sign=sign,
        )
