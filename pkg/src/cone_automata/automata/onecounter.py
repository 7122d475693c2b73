"""One-counter automata: pushdown automata whose stack alphabet has a single symbol.

The stack is a counter ``c >= 0``. A move is enabled by the current state,
the input letter (or ε) and whether ``c`` is zero; it sets ``c += delta``.
Moves that would drive the counter below zero are blocked.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from cone_automata.automata.closure import remove_epsilon
from cone_automata.automata.letters import Alphabet, Word
from cone_automata.automata.nfa import Nfa
from cone_automata.errors import ConstructionError

MAX_DELTA = 2


class ZeroFlag(str, Enum):
    ZERO = "zero"
    POSITIVE = "positive"


BOTH_FLAGS = (ZeroFlag.ZERO, ZeroFlag.POSITIVE)

# (source, letter or None, zero flag, target, counter delta)
CounterEdge = tuple[int, str | None, ZeroFlag, int, int]
Config = tuple[int, int]


def _edge_key(edge: CounterEdge) -> tuple[int, bool, str, str, int, int]:
    src, letter, flag, dst, delta = edge
    return (src, letter is not None, letter or "", flag.value, dst, delta)


def flag_of(counter: int) -> ZeroFlag:
    return ZeroFlag.ZERO if counter == 0 else ZeroFlag.POSITIVE


@dataclass(frozen=True)
class OneCounterAutomaton:
    alphabet: Alphabet
    num_states: int
    initial: int
    accepting: frozenset[int]
    edges: tuple[CounterEdge, ...]
    initial_counter: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.initial < self.num_states:
            raise ConstructionError(f"initial state {self.initial} outside 0..{self.num_states - 1}")
        if self.initial_counter < 0:
            raise ConstructionError("initial counter must be non-negative")
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        if any(not 0 <= state < self.num_states for state in self.accepting):
            raise ConstructionError("accepting state outside the state range")
        for src, letter, flag, dst, delta in self.edges:
            if not (0 <= src < self.num_states and 0 <= dst < self.num_states):
                raise ConstructionError(f"edge endpoint outside the state range: {(src, letter, dst)}")
            if letter is not None and letter not in self.alphabet:
                raise ConstructionError(f"edge letter {letter!r} outside the alphabet")
            if abs(delta) > MAX_DELTA:
                raise ConstructionError(f"counter delta {delta} outside [-{MAX_DELTA}, {MAX_DELTA}]")
            if flag is ZeroFlag.ZERO and delta < 0:
                raise ConstructionError("a zero-tested move cannot decrement the counter")
        object.__setattr__(self, "edges", tuple(sorted(set(self.edges), key=_edge_key)))

    @property
    def states(self) -> range:
        return range(self.num_states)

    @cached_property
    def _out(self) -> dict[tuple[int, str | None, ZeroFlag], tuple[tuple[int, int], ...]]:
        table: dict[tuple[int, str | None, ZeroFlag], list[tuple[int, int]]] = {}
        for src, letter, flag, dst, delta in self.edges:
            table.setdefault((src, letter, flag), []).append((dst, delta))
        return {key: tuple(moves) for key, moves in table.items()}

    @cached_property
    def max_delta(self) -> int:
        return max((abs(delta) for *_, delta in self.edges), default=0)

    @cached_property
    def coreachable(self) -> frozenset[int]:
        """States with a path to acceptance in the underlying graph (counter ignored)."""
        backward: dict[int, list[int]] = {}
        for src, _, _, dst, _ in self.edges:
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

    def counter_bound(self, word_len: int) -> int:
        """Largest counter value explored when simulating a word of ``word_len`` letters."""
        return self.initial_counter + max(1, self.max_delta) * (word_len + self.num_states)

    def moves(self, config: Config, letter: str | None, bound: int) -> Iterable[Config]:
        state, counter = config
        for dst, delta in self._out.get((state, letter, flag_of(counter)), ()):
            value = counter + delta
            if 0 <= value <= bound:
                yield dst, value

    def closure(self, configs: Iterable[Config], bound: int) -> frozenset[Config]:
        seen = set(configs)
        stack = list(seen)
        while stack:
            config = stack.pop()
            for nxt in self.moves(config, None, bound):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return frozenset(seen)

    def start(self, bound: int) -> frozenset[Config]:
        return self.closure(((self.initial, self.initial_counter),), bound)

    def step(self, configs: Iterable[Config], letter: str, bound: int) -> frozenset[Config]:
        moved = {nxt for config in configs for nxt in self.moves(config, letter, bound)}
        return self.closure(moved, bound) if moved else frozenset()

    def is_accepting(self, configs: Iterable[Config]) -> bool:
        return any(state in self.accepting for state, _ in configs)

    def accepts(self, word: Iterable[str]) -> bool:
        word = self.alphabet.check_word(word)
        bound = self.counter_bound(len(word))
        current = self.start(bound)
        for letter in word:
            if not current:
                return False
            current = self.step(current, letter, bound)
        return self.is_accepting(current)

    def accepted_words(self, max_len: int) -> set[Word]:
        bound = self.counter_bound(max_len)
        live = self.coreachable
        results: set[Word] = set()
        frontier: dict[Word, frozenset[Config]] = {(): self.start(bound)}
        for length in range(max_len + 1):
            upcoming: dict[Word, frozenset[Config]] = {}
            for word, configs in frontier.items():
                if self.is_accepting(configs):
                    results.add(word)
                if length == max_len:
                    continue
                for letter in self.alphabet.ids:
                    reached = frozenset(c for c in self.step(configs, letter, bound) if c[0] in live)
                    if reached:
                        upcoming[word + (letter,)] = reached
            frontier = upcoming
        return results


def oc_accepts(m: OneCounterAutomaton, w: Iterable[str]) -> bool:
    return m.accepts(w)


def oc_accepted_words(m: OneCounterAutomaton, max_len: int) -> set[Word]:
    return m.accepted_words(max_len)


class CounterBuilder:
    """Incremental construction of a :class:`OneCounterAutomaton`."""

    def __init__(self, alphabet: Alphabet) -> None:
        self.alphabet = alphabet
        self.num_states = 0
        self._accepting: set[int] = set()
        self._edges: list[CounterEdge] = []

    def add_state(self, *, accepting: bool = False) -> int:
        state = self.num_states
        self.num_states += 1
        if accepting:
            self._accepting.add(state)
        return state

    def set_accepting(self, state: int) -> None:
        self._accepting.add(state)

    def add_edge(
        self,
        src: int,
        letter: str | None,
        dst: int,
        delta: int = 0,
        flag: ZeroFlag | None = None,
    ) -> None:
        """Add a move; ``flag=None`` adds it for both zero and positive counters."""
        for each in (flag,) if flag is not None else BOTH_FLAGS:
            if each is ZeroFlag.ZERO and delta < 0:
                continue
            self._edges.append((src, letter, each, dst, delta))

    def copy_nfa(self, m: Nfa) -> int:
        offset = self.num_states
        self.num_states += m.num_states
        for src, letter, dst in m.edges:
            self.add_edge(src + offset, letter, dst + offset)
        return offset

    def copy_counter(self, m: OneCounterAutomaton) -> int:
        offset = self.num_states
        self.num_states += m.num_states
        self._edges.extend((src + offset, letter, flag, dst + offset, delta) for src, letter, flag, dst, delta in m.edges)
        return offset

    def build(self, initial: int = 0, *, initial_counter: int = 0) -> OneCounterAutomaton:
        return OneCounterAutomaton(
            alphabet=self.alphabet,
            num_states=self.num_states,
            initial=initial,
            accepting=frozenset(self._accepting),
            edges=tuple(self._edges),
            initial_counter=initial_counter,
        )


# =============================================================================
# Operations
# =============================================================================


def from_nfa(m: Nfa) -> OneCounterAutomaton:
    """View a regular machine as a one-counter machine that never touches its counter."""
    builder = CounterBuilder(m.alphabet)
    builder.copy_nfa(m)
    for state in m.accepting:
        builder.set_accepting(state)
    return builder.build(m.initial)


def as_counter(m: Nfa | OneCounterAutomaton) -> OneCounterAutomaton:
    return m if isinstance(m, OneCounterAutomaton) else from_nfa(m)


def trim(m: OneCounterAutomaton) -> OneCounterAutomaton:
    """Drop states unreachable or not co-reachable in the underlying graph."""
    live = m.coreachable
    if m.initial not in live:
        builder = CounterBuilder(m.alphabet)
        return builder.build(builder.add_state(), initial_counter=m.initial_counter)
    forward: dict[int, list[int]] = {}
    for src, _, _, dst, _ in m.edges:
        forward.setdefault(src, []).append(dst)
    order = {m.initial: 0}
    queue = deque([m.initial])
    while queue:
        state = queue.popleft()
        for dst in forward.get(state, ()):
            if dst in live and dst not in order:
                order[dst] = len(order)
                queue.append(dst)
    edges = tuple(
        (order[src], letter, flag, order[dst], delta)
        for src, letter, flag, dst, delta in m.edges
        if src in order and dst in order
    )
    accepting = frozenset(order[s] for s in m.accepting if s in order)
    return OneCounterAutomaton(m.alphabet, len(order), 0, accepting, edges, m.initial_counter)


def union(*machines: Nfa | OneCounterAutomaton) -> OneCounterAutomaton:
    counters = [as_counter(m) for m in machines]
    if not counters:
        raise ConstructionError("union of no machines")
    initial_counter = counters[0].initial_counter
    if any(m.initial_counter != initial_counter for m in counters):
        raise ConstructionError("union operands must share the initial counter value")
    alphabet = counters[0].alphabet
    for m in counters[1:]:
        alphabet = alphabet.union(m.alphabet)
    builder = CounterBuilder(alphabet)
    start = builder.add_state()
    for m in counters:
        offset = builder.copy_counter(m)
        builder.add_edge(start, None, m.initial + offset)
        for state in m.accepting:
            builder.set_accepting(state + offset)
    return builder.build(start, initial_counter=initial_counter)


def prefix_with(prefix: Nfa, m: OneCounterAutomaton) -> OneCounterAutomaton:
    """``L(prefix) . L(m)``; the regular part leaves the counter untouched."""
    builder = CounterBuilder(prefix.alphabet.union(m.alphabet))
    left = builder.copy_nfa(prefix)
    right = builder.copy_counter(m)
    for state in prefix.accepting:
        builder.add_edge(state + left, None, m.initial + right)
    for state in m.accepting:
        builder.set_accepting(state + right)
    return builder.build(prefix.initial + left, initial_counter=m.initial_counter)


def suffix_with(m: OneCounterAutomaton, suffix: Nfa) -> OneCounterAutomaton:
    """``L(m) . L(suffix)``."""
    builder = CounterBuilder(m.alphabet.union(suffix.alphabet))
    left = builder.copy_counter(m)
    right = builder.copy_nfa(suffix)
    for state in m.accepting:
        builder.add_edge(state + left, None, suffix.initial + right)
    for state in suffix.accepting:
        builder.set_accepting(state + right)
    return builder.build(m.initial + left, initial_counter=m.initial_counter)


def intersect_regular(m: OneCounterAutomaton, regular: Nfa) -> OneCounterAutomaton:
    """Product of a one-counter machine with a regular one."""
    alphabet = m.alphabet.union(regular.alphabet)
    r = remove_epsilon(regular)
    by_source: dict[int, list[CounterEdge]] = {}
    for edge in m.edges:
        by_source.setdefault(edge[0], []).append(edge)
    start = (m.initial, r.initial)
    index = {start: 0}
    queue = deque([start])
    edges: list[CounterEdge] = []

    def visit(pair: tuple[int, int]) -> int:
        if pair not in index:
            index[pair] = len(index)
            queue.append(pair)
        return index[pair]

    while queue:
        pair = queue.popleft()
        p, q = pair
        for _, letter, flag, dst, delta in by_source.get(p, ()):
            if letter is None:
                edges.append((index[pair], None, flag, visit((dst, q)), delta))
                continue
            for q2 in r.targets(q, letter):
                edges.append((index[pair], letter, flag, visit((dst, q2)), delta))
    accepting = frozenset(i for (p, q), i in index.items() if p in m.accepting and q in r.accepting)
    return trim(OneCounterAutomaton(alphabet, len(index), 0, accepting, tuple(edges), m.initial_counter))


def zero_acceptance(m: OneCounterAutomaton) -> OneCounterAutomaton:
    """Equivalent machine that accepts only in a single state with the counter at zero."""
    builder = CounterBuilder(m.alphabet)
    builder.copy_counter(m)
    drain = builder.add_state()
    done = builder.add_state(accepting=True)
    for state in m.accepting:
        builder.add_edge(state, None, drain)
    builder.add_edge(drain, None, drain, delta=-1, flag=ZeroFlag.POSITIVE)
    builder.add_edge(drain, None, done, flag=ZeroFlag.ZERO)
    return builder.build(m.initial, initial_counter=m.initial_counter)


def reverse(m: OneCounterAutomaton) -> OneCounterAutomaton:
    """Machine accepting the mirror images of the words accepted by ``m``.

    Runs are replayed backwards from a zero counter: every move ``c -> c + d``
    becomes ``c + d -> c`` and its zero test is re-checked after the move.
    """
    source = zero_acceptance(m)
    builder = CounterBuilder(m.alphabet)
    start = builder.add_state()
    offset = builder.num_states
    builder.num_states += source.num_states
    for state in source.accepting:
        builder.add_edge(start, None, state + offset, flag=ZeroFlag.ZERO)
    for src, letter, flag, dst, delta in source.edges:
        new_src, new_dst = dst + offset, src + offset
        if delta == 0 or (flag is ZeroFlag.POSITIVE and delta < 0):
            builder.add_edge(new_src, letter, new_dst, delta=-delta, flag=flag if delta == 0 else None)
            continue
        check = builder.add_state()
        builder.add_edge(new_src, letter, check, delta=-delta)
        builder.add_edge(check, None, new_dst, flag=flag)
    # replay ends at the old initial state holding the old initial counter
    current = source.initial + offset
    for _ in range(source.initial_counter):
        nxt = builder.add_state()
        builder.add_edge(current, None, nxt, delta=-1, flag=ZeroFlag.POSITIVE)
        current = nxt
    done = builder.add_state(accepting=True)
    builder.add_edge(current, None, done, flag=ZeroFlag.ZERO)
    return trim(builder.build(start))


def formal_inverse(m: OneCounterAutomaton) -> OneCounterAutomaton:
    """``{xn^-1 ... x1^-1 : x1 ... xn accepted}`` for one-counter machines."""
    m.alphabet.require_paired()
    edges = tuple(
        (src, None if letter is None else m.alphabet.inverse(letter), flag, dst, delta)
        for src, letter, flag, dst, delta in m.edges
    )
    return reverse(OneCounterAutomaton(m.alphabet, m.num_states, m.initial, m.accepting, edges, m.initial_counter))
