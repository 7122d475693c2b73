"""Regular cones on ``G x Z`` from a quasi-morphism transducer on ``G``.

The machine has the states ``{f} u S x {0, 1}``. A core state ``(s, d)``
carries the parity bit ``d`` of ``tau + 2 * (z-balance)`` and every output
``2k + eta`` of the transducer is paid back by ``z^-k`` (or ``z^-k-1``), so
the running value stays in ``{0, 1}``.
"""

from __future__ import annotations

import logging
from typing import Any

from cone_automata.automata.letters import Alphabet, Word
from cone_automata.automata.nfa import NfaBuilder
from cone_automata.automata.transducer import Transducer
from cone_automata.cones.language import TRIVIAL, ConeLanguage, Provenance, RelativeSubgroup, StateLabel
from cone_automata.cones.quasimorphism import COUNTER_ALPHABET, COUNTER_LETTER
from cone_automata.errors import ConstructionError
from cone_automata.groups.descriptors import CrossZ
from cone_automata.utils import ODD_CODOMAIN_SEARCH_DEPTH

logger = logging.getLogger("cone-automata.cones")

FINAL_LABEL = "f"


def output_value(output: Word) -> int:
    """Exponent sum of an output word over ``{t, t^-1}``."""
    return sum(1 if letter == COUNTER_LETTER else -1 for letter in output)


def _z_power(alphabet: Alphabet, z: str, exponent: int) -> Word:
    letter = z if exponent > 0 else alphabet.inverse(z)
    return (letter,) * abs(exponent)


def check_odd_codomain(t: Transducer, depth: int = ODD_CODOMAIN_SEARCH_DEPTH) -> None:
    """Raise when an accepting run on an input of length ``<= depth`` outputs an even nonzero value."""
    bound = (depth + 1) * max(1, t.max_output) * t.num_states
    values = {edge: output_value(edge[3]) for edge in t.edges}
    by_source: dict[tuple[int, str | None], list[tuple[int, int]]] = {}
    for edge in t.edges:
        by_source.setdefault((edge[0], edge[1]), []).append((edge[2], values[edge]))

    def close(configs: set[tuple[int, int]]) -> set[tuple[int, int]]:
        stack = list(configs)
        while stack:
            state, value = stack.pop()
            for dst, delta in by_source.get((state, None), ()):
                nxt = (dst, value + delta)
                if abs(nxt[1]) <= bound and nxt not in configs:
                    configs.add(nxt)
                    stack.append(nxt)
        return configs

    current = close({(t.initial, 0)})
    for step in range(depth + 1):
        for state, value in current:
            if state in t.accepting and value != 0 and value % 2 == 0:
                raise ConstructionError(
                    f"transducer outputs the even value {value} on an accepting run of length {step}"
                )
        if step == depth:
            break
        current = close(
            {
                (dst, value + delta)
                for state, value in current
                for letter in t.input_alphabet.ids
                for dst, delta in by_source.get((state, letter), ())
            }
        )


def embed_cross_z(
    t: Transducer,
    *,
    group: CrossZ,
    relative_to: RelativeSubgroup = TRIVIAL,
    name: str = "embed_cross_z",
    params: dict[str, Any] | None = None,
) -> ConeLanguage:
    """Regular cone ``{(g, n) : tau(g) + 2n > 0}`` on ``G x Z``."""
    if t.output_alphabet != COUNTER_ALPHABET:
        raise ConstructionError(f"expected outputs over {list(COUNTER_ALPHABET.ids)}, got {list(t.output_alphabet.ids)}")
    check_odd_codomain(t)
    z = group.letter
    alphabet = t.input_alphabet.union(Alphabet.paired(z))
    builder = NfaBuilder(alphabet)
    labels: dict[int, StateLabel] = {}

    final = builder.add_state(accepting=True)
    labels[final] = FINAL_LABEL
    core: dict[tuple[int, int], int] = {}
    for state in t.states:
        for dagger in (0, 1):
            core[(state, dagger)] = builder.add_state(accepting=dagger == 1 and state in t.accepting)
            labels[core[(state, dagger)]] = (state, dagger)

    for src, letter, dst, output in t.edges:
        k, eta = divmod(output_value(output), 2)
        read: Word = () if letter is None else (letter,)
        for dagger in (0, 1):
            if dagger == 0:
                target, pay = eta, -k
            elif eta == 0:
                target, pay = 1, -k
            else:
                target, pay = 0, -k - 1
            builder.add_word_edge(core[(src, dagger)], read + _z_power(alphabet, z, pay), core[(dst, target)])

    builder.add_edge(final, z, final)
    builder.add_edge(core[(t.initial, 0)], z, final)
    for state in sorted(t.accepting):
        for dagger in (0, 1):
            builder.add_edge(core[(state, dagger)], z, final)

    machine = builder.build(core[(t.initial, 0)])
    state_labels = tuple(labels.get(state) for state in machine.states)
    logger.debug("embedded cone %s: %d states", name, machine.num_states)
    return ConeLanguage(
        machine,
        group,
        Provenance(construction=name, params=params or {}),
        relative_to,
        state_labels=state_labels,
    )
