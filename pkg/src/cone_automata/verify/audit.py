"""Ball-bounded audit of the positive-cone axioms.

The accepted words of a cone language are evaluated breadth-first, so every
collected element carries the shortest accepted word that reaches it. The
audit then checks, inside a finite window of the Cayley graph, that the
collected set ``S`` avoids the identity, meets neither ``S^-1`` nor the
relative subgroup ``C`` and is closed under products.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from cone_automata.automata.letters import Word
from cone_automata.automata.nfa import Nfa
from cone_automata.automata.onecounter import OneCounterAutomaton
from cone_automata.cones.language import ConeLanguage
from cone_automata.config import get_audit_defaults
from cone_automata.formatting import format_word
from cone_automata.groups import build_group
from cone_automata.groups.ball import Ball, ball
from cone_automata.groups.base import Form, Group, GroupElement
from cone_automata.utils import Radius, WordLength

logger = logging.getLogger("cone-automata.verify")

# witnesses kept per violation kind; counts are always complete
MAX_WITNESSES = 20


class AuditConfig(BaseModel):
    """Audit budgets; ``closure_radius`` bounds the window for products."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    ball_radius: Radius = 4
    closure_radius: Radius = 8
    max_word_len: WordLength = 12
    prune_to_window: bool = True

    @model_validator(mode="after")
    def _check_budgets(self) -> AuditConfig:
        if self.max_word_len < self.ball_radius:
            raise ValueError("max_word_len must be at least ball_radius")
        if self.closure_radius < self.ball_radius:
            raise ValueError("closure_radius must be at least ball_radius")
        return self

    @classmethod
    def from_defaults(cls, **overrides: Any) -> AuditConfig:
        """Environment defaults with ``None``-valued overrides ignored."""
        defaults = get_audit_defaults()
        values: dict[str, Any] = {
            "ball_radius": defaults.ball_radius,
            "closure_radius": defaults.closure_radius,
            "max_word_len": defaults.max_word_len,
            "prune_to_window": defaults.prune_to_window,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        if values["closure_radius"] < values["ball_radius"]:
            values["closure_radius"] = values["ball_radius"]
        return cls(**values)


class ViolationKind(str, Enum):
    IDENTITY_IN_P = "identity_in_P"
    P_MEETS_PINV = "P_meets_Pinv"
    RELATIVE_OVERLAP = "relative_overlap"
    CLOSURE_FAIL = "closure_fail"


class Violation(BaseModel):
    kind: ViolationKind
    element: str
    witnesses: list[str] = Field(description="Accepted words involved, formatted")


class PropertyResult(BaseModel):
    name: str
    passed: bool
    witness: str | None = None
    detail: str | None = None


class VerificationReport(BaseModel):
    construction: str
    group: str
    config: AuditConfig
    ball_size: int
    positive_set_size: int
    violations: list[Violation] = Field(default_factory=list)
    violation_counts: dict[str, int] = Field(default_factory=dict)
    uncovered: list[str] = Field(default_factory=list)
    property_results: dict[str, PropertyResult] = Field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not self.violations and not self.uncovered and self.properties_passed

    @property
    def properties_passed(self) -> bool:
        return all(result.passed for result in self.property_results.values())

    @property
    def exit_code(self) -> int:
        """0 clean, 1 violations or failed properties, 2 inconclusive only."""
        if self.violations or not self.properties_passed:
            return 1
        if self.uncovered:
            return 2
        return 0


# =============================================================================
# Collection
# =============================================================================

Node = tuple[int, int]


def _successors(machine: Nfa | OneCounterAutomaton, node: Node, letter: str | None, bound: int) -> Iterator[Node]:
    if isinstance(machine, OneCounterAutomaton):
        yield from machine.moves(node, letter, bound)
    else:
        for dst in machine.targets(node[0], letter):
            yield dst, 0


def positive_witnesses(
    cone: ConeLanguage,
    max_word_len: int,
    *,
    window_radius: int | None = None,
) -> dict[Form, Word]:
    """Shortest accepted word of length ``<= max_word_len`` per evaluated element.

    Configurations ``(state, counter, element)`` are deduplicated at the depth
    they are first reached. With ``window_radius`` a configuration at depth
    ``d`` is dropped once its element lies farther than
    ``window_radius + max_word_len - d`` from the identity: no extension of
    it can come back into ``ball(window_radius)``.
    """
    machine = cone.machine
    group = build_group(cone.group)
    bound = machine.counter_bound(max_word_len) if isinstance(machine, OneCounterAutomaton) else 0
    initial_counter = machine.initial_counter if isinstance(machine, OneCounterAutomaton) else 0
    live = machine.coreachable
    steps = [(letter, group.letter_form(letter)) for letter in machine.alphabet.ids]

    horizon: Ball | None = None
    if window_radius is not None:
        horizon = ball(group, (window_radius + max_word_len) // 2)

    def keep(form: Form, depth: int) -> bool:
        if horizon is None or window_radius is None or 2 * depth <= window_radius + max_word_len:
            return True
        distance = horizon.distance(form)
        return distance is not None and distance <= window_radius + max_word_len - depth

    Config = tuple[int, int, Form]
    start: Config = (machine.initial, initial_counter, group.identity_form)
    seen: set[Config] = set()
    witnesses: dict[Form, Word] = {}

    def close(level: dict[Config, Word]) -> dict[Config, Word]:
        stack = list(level.items())
        while stack:
            (state, counter, form), word = stack.pop()
            for dst, value in _successors(machine, (state, counter), None, bound):
                config = (dst, value, form)
                if dst in live and config not in seen and config not in level:
                    level[config] = word
                    stack.append((config, word))
        return level

    frontier = close({start: ()}) if machine.initial in live else {}
    for depth in range(max_word_len + 1):
        seen.update(frontier)
        ordered = sorted(frontier.items(), key=lambda item: item[1])
        for (state, _, form), word in ordered:
            if state in machine.accepting and form not in witnesses:
                witnesses[form] = word
        if depth == max_word_len:
            break
        upcoming: dict[Config, Word] = {}
        for (state, counter, form), word in ordered:
            for letter, step in steps:
                moved = group.mul_form(form, step)
                if not keep(moved, depth + 1):
                    continue
                for dst, value in _successors(machine, (state, counter), letter, bound):
                    config = (dst, value, moved)
                    if dst in live and config not in seen and config not in upcoming:
                        upcoming[config] = word + (letter,)
        frontier = close(upcoming)
        logger.debug("depth %d: %d configurations", depth + 1, len(frontier))
    return witnesses


def collect_positive(cone: ConeLanguage, max_word_len: int) -> set[GroupElement]:
    """``{evaluate(w) : w accepted, |w| <= max_word_len}``."""
    group = build_group(cone.group)
    return {group.element(form) for form in positive_witnesses(cone, max_word_len)}


# =============================================================================
# Audit
# =============================================================================


def subgroup_forms(group: Group, generators: Iterable[str], radius: int) -> set[Form]:
    """Elements of ``<generators>`` of length at most ``radius`` in those generators."""
    letters = [letter for name in generators for letter in (name, group.alphabet.inverse(name))]
    steps = [group.letter_form(letter) for letter in letters]
    found = {group.identity_form}
    frontier = [group.identity_form]
    for _ in range(radius):
        upcoming = []
        for form in frontier:
            for step in steps:
                product = group.mul_form(form, step)
                if product not in found:
                    found.add(product)
                    upcoming.append(product)
        frontier = upcoming
    return found


class _Recorder:
    def __init__(self) -> None:
        self.violations: list[Violation] = []
        self.counts: dict[str, int] = {}

    def add(self, kind: ViolationKind, element: str, *words: Word) -> None:
        self.counts[kind.value] = self.counts.get(kind.value, 0) + 1
        if self.counts[kind.value] <= MAX_WITNESSES:
            self.violations.append(Violation(kind=kind, element=element, witnesses=[format_word(w) for w in words]))


def audit_cone(cone: ConeLanguage, cfg: AuditConfig | None = None) -> VerificationReport:
    cfg = cfg or AuditConfig.from_defaults()
    group = build_group(cone.group)
    window = ball(group, cfg.ball_radius)
    logger.info("%s: ball(%d) has %d elements", cone.name, cfg.ball_radius, len(window))

    witnesses = positive_witnesses(
        cone,
        cfg.max_word_len,
        window_radius=cfg.closure_radius if cfg.prune_to_window else None,
    )
    positive = set(witnesses)
    logger.info("%s: %d positive elements from words of length <= %d", cone.name, len(positive), cfg.max_word_len)

    closure_window: Ball | None = None
    if cfg.closure_radius < 2 * cfg.ball_radius:
        closure_window = ball(group, cfg.closure_radius)

    def in_closure_window(form: Form) -> bool:
        return closure_window is None or closure_window.contains_form(form)

    identity = group.identity_form
    kernel: set[Form] = {identity}
    if not cone.relative_to.is_trivial:
        kernel = {
            form
            for form in subgroup_forms(group, cone.relative_to.generators, 2 * cfg.closure_radius)
            if in_closure_window(form)
        }

    recorder = _Recorder()
    if identity in positive:
        recorder.add(ViolationKind.IDENTITY_IN_P, group.format_form(identity), witnesses[identity])
    for form in sorted(positive, key=lambda f: (len(witnesses[f]), witnesses[f])):
        inverse = group.inv_form(form)
        if inverse in positive and witnesses[form] < witnesses[inverse] and form != identity:
            recorder.add(ViolationKind.P_MEETS_PINV, group.format_form(form), witnesses[form], witnesses[inverse])
        if form in kernel and form != identity:
            recorder.add(ViolationKind.RELATIVE_OVERLAP, group.format_form(form), witnesses[form])

    uncovered = [
        form
        for form in window.forms()
        if form not in positive and group.inv_form(form) not in positive and form not in kernel
    ]

    local = sorted((f for f in positive if window.contains_form(f)), key=lambda f: (len(witnesses[f]), witnesses[f]))
    for g in local:
        for h in local:
            product = group.mul_form(g, h)
            if not in_closure_window(product):
                continue
            broken = group.inv_form(product) in positive or (product in kernel and product != identity)
            if not broken and not uncovered and product != identity and window.contains_form(product):
                broken = product not in positive
            if broken:
                recorder.add(ViolationKind.CLOSURE_FAIL, group.format_form(product), witnesses[g], witnesses[h])
    logger.info("%s: violations %s, uncovered %d", cone.name, recorder.counts or "none", len(uncovered))

    return VerificationReport(
        construction=cone.name,
        group=cone.group.kind,
        config=cfg,
        ball_size=len(window),
        positive_set_size=len(positive),
        violations=recorder.violations,
        violation_counts=recorder.counts,
        uncovered=[format_word(window.witnesses[form]) for form in uncovered],
    )
