"""Property checks beyond the cone axioms."""

from __future__ import annotations

import logging
from collections.abc import Callable

from pydantic import BaseModel, Field

from cone_automata.automata.closure import determinize, trim
from cone_automata.automata.letters import Word
from cone_automata.automata.nfa import Nfa
from cone_automata.automata.transducer import Transducer
from cone_automata.cones.embedding import output_value
from cone_automata.cones.language import ConeLanguage, TauData
from cone_automata.formatting import format_word
from cone_automata.groups import build_group
from cone_automata.groups.ball import ball
from cone_automata.groups.base import Form, GroupElement
from cone_automata.groups.descriptors import GroupDescriptor
from cone_automata.groups.products import CrossZGroup
from cone_automata.verify.audit import MAX_WITNESSES, AuditConfig, PropertyResult, positive_witnesses
from cone_automata.verify.oracles import Oracle, Verdict

logger = logging.getLogger("cone-automata.verify")


class Mismatch(BaseModel):
    word: str
    element: str
    verdict: Verdict


class OracleAgreement(BaseModel):
    """Hard mismatches are accepted words the oracle does not call positive;
    ``missing`` lists ball elements the oracle calls positive but no accepted
    word reached (inconclusive)."""

    checked: int
    hard_mismatch_count: int = 0
    hard_mismatches: list[Mismatch] = Field(default_factory=list)
    missing: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.hard_mismatch_count == 0

    def as_property(self, name: str = "oracle_agreement") -> PropertyResult:
        witness = self.hard_mismatches[0].word if self.hard_mismatches else None
        return PropertyResult(
            name=name,
            passed=self.passed,
            witness=witness,
            detail=f"{self.checked} elements, {self.hard_mismatch_count} hard mismatches, {len(self.missing)} missing",
        )


def compare_with_oracle(cone: ConeLanguage, predicate: Oracle, cfg: AuditConfig) -> OracleAgreement:
    group = build_group(cone.group)
    witnesses = positive_witnesses(
        cone,
        cfg.max_word_len,
        window_radius=cfg.closure_radius if cfg.prune_to_window else None,
    )
    mismatches: list[Mismatch] = []
    count = 0
    for form, word in sorted(witnesses.items(), key=lambda item: (len(item[1]), item[1])):
        verdict = predicate(group.element(form))
        if verdict is not Verdict.POSITIVE:
            count += 1
            if len(mismatches) < MAX_WITNESSES:
                mismatches.append(Mismatch(word=format_word(word), element=group.format_form(form), verdict=verdict))
    window = ball(group, cfg.ball_radius)
    missing = [
        format_word(word)
        for form, word in window.witnesses.items()
        if form not in witnesses and predicate(group.element(form)) is Verdict.POSITIVE
    ]
    logger.info("%s: oracle agreement on %d elements, %d hard mismatches", cone.name, len(witnesses), count)
    return OracleAgreement(checked=len(witnesses), hard_mismatch_count=count, hard_mismatches=mismatches, missing=missing)


def evaluation_equal(left: ConeLanguage, right: ConeLanguage, cfg: AuditConfig) -> PropertyResult:
    """Both languages evaluate to the same elements of ``ball(ball_radius)``."""
    group = build_group(left.group)
    window = ball(group, cfg.ball_radius)
    radius = cfg.closure_radius if cfg.prune_to_window else None
    sides = [positive_witnesses(cone, cfg.max_word_len, window_radius=radius) for cone in (left, right)]
    inside = [{form for form in side if window.contains_form(form)} for side in sides]
    differ = sorted(inside[0] ^ inside[1], key=lambda form: window.witnesses[form])
    name = f"same_elements_as_{right.name}"
    if not differ:
        return PropertyResult(name=name, passed=True, detail=f"{len(inside[0])} elements")
    form = differ[0]
    owner = left.name if form in inside[0] else right.name
    return PropertyResult(
        name=name,
        passed=False,
        witness=format_word(window.witnesses[form]),
        detail=f"{len(differ)} elements differ; first only in {owner}",
    )


def check_coarse_monotone(m: Nfa, max_len: int, *, positive: str = "t") -> PropertyResult:
    """Every accepted balance walk never drops more than ``K`` below an earlier value.

    ``K`` is the state count of the trimmed deterministic machine.
    """
    machine = trim(determinize(m))
    bound = machine.num_states
    for word in sorted(machine.accepted_words(max_len), key=lambda w: (len(w), w)):
        balance = 0
        highest = 0
        for j, letter in enumerate(word, start=1):
            balance += 1 if letter == positive else -1
            if balance <= highest - bound:
                return PropertyResult(
                    name="coarse_monotone",
                    passed=False,
                    witness=format_word(word),
                    detail=f"prefix of length {j} drops to {balance} after reaching {highest}, K = {bound}",
                )
            highest = max(highest, balance)
    return PropertyResult(name="coarse_monotone", passed=True, detail=f"K = {bound}")


def check_balancing(
    embedded: ConeLanguage,
    t: Transducer,
    max_len: int,
    *,
    tau: Callable[[GroupElement], int] | None = None,
) -> PropertyResult:
    """Ledger check of the parity bit on every prefix of length ``<= max_len``.

    At a core state ``(s, d)`` some run of ``t`` on the ``G``-letters must end
    in ``s`` with output value ``v`` and ``v + 2 * (z-balance) = d``; when ``s``
    accepts and ``tau`` is given, ``tau(g) + 2 * (z-balance) = d`` exactly.
    """
    machine = embedded.machine
    labels = embedded.state_labels
    group = build_group(embedded.group)
    if not isinstance(machine, Nfa) or labels is None or not isinstance(group, CrossZGroup):
        return PropertyResult(name="balancing", passed=False, detail="not an embedded G x Z cone")
    inner = group.inner
    z = group.letter
    z_inv = group.alphabet.inverse(z)
    cap = (max_len + 1) * t.num_states * max(1, t.max_output)
    live = machine.coreachable

    def close(configs: set[tuple[int, int]]) -> frozenset[tuple[int, int]]:
        stack = list(configs)
        while stack:
            state, value = stack.pop()
            for dst, output in t.moves(state, None):
                nxt = (dst, value + output_value(output))
                if abs(nxt[1]) <= cap and nxt not in configs:
                    configs.add(nxt)
                    stack.append(nxt)
        return frozenset(configs)

    Key = tuple[frozenset[int], frozenset[tuple[int, int]], int, Form]
    start: Key = (machine.start() & live, close({(t.initial, 0)}), 0, inner.identity_form)
    frontier: dict[Key, Word] = {start: ()}
    seen = {start}
    checked = 0
    for depth in range(max_len + 1):
        for (states, runs, zbal, form), word in sorted(frontier.items(), key=lambda item: item[1]):
            for state in sorted(states):
                label = labels[state]
                if not isinstance(label, tuple):
                    continue
                checked += 1
                s, dagger = label
                if not any(run_state == s and value + 2 * zbal == dagger for run_state, value in runs):
                    return PropertyResult(
                        name="balancing",
                        passed=False,
                        witness=format_word(word),
                        detail=f"state {state} labelled ({s}, {dagger}) has no matching transducer run",
                    )
                if tau is not None and s in t.accepting and tau(inner.element(form)) + 2 * zbal != dagger:
                    return PropertyResult(
                        name="balancing",
                        passed=False,
                        witness=format_word(word),
                        detail=f"tau + 2 * z-balance differs from the bit {dagger} at state {state}",
                    )
        if depth == max_len:
            break
        upcoming: dict[Key, Word] = {}
        for (states, runs, zbal, form), word in sorted(frontier.items(), key=lambda item: item[1]):
            for letter in machine.alphabet.ids:
                reached = machine.step(states, letter) & live
                if not reached:
                    continue
                if letter in (z, z_inv):
                    key: Key = (reached, runs, zbal + (1 if letter == z else -1), form)
                else:
                    moved = {(dst, value + output_value(output)) for state, value in runs for dst, output in t.moves(state, letter)}
                    key = (reached, close(moved), zbal, inner.mul_form(form, inner.letter_form(letter)))
                if key not in seen:
                    seen.add(key)
                    upcoming[key] = word + (letter,)
        frontier = upcoming
    logger.info("balancing: %d labelled states checked on prefixes of length <= %d", checked, max_len)
    return PropertyResult(name="balancing", passed=True, detail=f"{checked} labelled states checked")


def check_tau_data(data: TauData, group: GroupDescriptor, max_len: int) -> PropertyResult:
    """Each factor's minus-accepted words evaluate to the inverses of its plus-accepted words."""
    target = build_group(group)
    for index, factor in enumerate(data.factors):
        plus: dict[Form, Word] = {}
        minus: dict[Form, Word] = {}
        for word in sorted(factor.accepted_words(max_len)):
            side = plus if factor.sign_of(word) > 0 else minus
            side.setdefault(target.evaluate_form(word), word)
        inverted = {target.inv_form(form) for form in plus}
        if inverted != set(minus):
            stray = sorted(inverted ^ set(minus), key=repr)[0]
            word = minus.get(stray) or plus.get(target.inv_form(stray), ())
            return PropertyResult(
                name="tau_data",
                passed=False,
                witness=format_word(word),
                detail=f"factor {index}: plus and minus languages are not inverse on words of length <= {max_len}",
            )
    return PropertyResult(name="tau_data", passed=True, detail=f"{len(data.factors)} factors")
