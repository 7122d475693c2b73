"""Named constructions with validated parameters, oracles and audit budgets.

The CLI and the golden tests address every construction through this table,
e.g. ``get_construction("bs_affine_cone").build({"q": 2})``.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from typing import Any

from pydantic import BaseModel, ConfigDict

from cone_automata.automata import closure
from cone_automata.automata.letters import Alphabet
from cone_automata.automata.nfa import Nfa
from cone_automata.automata.onecounter import OneCounterAutomaton
from cone_automata.automata.transducer import Transducer
from cone_automata.cones import (
    bs_affine_cone,
    bs_affine_relative_cone,
    bs_amalgam_cross_z,
    bs_amalgam_onecounter,
    bs_lex_onecounter,
    embed_cross_z_f2,
    f2_onecounter,
    free_by_cyclic_cross_z,
    free_by_cyclic_onecounter,
    klein_free_cross_z,
    klein_order,
    wreath_cone_zz,
    z2_lex,
    zwrz_cone,
    zz_cyclic,
)
from cone_automata.cones.composite import CENTRAL_LETTER
from cone_automata.cones.language import ConeLanguage
from cone_automata.cones.quasimorphism import bs_amalgam_tau_setup, f2_tau_setup, klein_z_tau_setup
from cone_automata.cones.samples import (
    drawdown_automaton,
    lquot_counter,
    pm_z_automaton,
    surplus_counter,
    tau_f2_transducer,
)
from cone_automata.errors import ConstructionError, UnknownConstructionError
from cone_automata.groups.descriptors import CrossZ, FreeByCyclic
from cone_automata.utils import AffineQ, QParam, SignParam, VariantParam
from cone_automata.verify import (
    AuditConfig,
    PropertyResult,
    VerificationReport,
    audit_cone,
    check_balancing,
    check_coarse_monotone,
    check_tau_data,
    compare_with_oracle,
    evaluation_equal,
)
from cone_automata.verify import oracles
from cone_automata.verify.oracles import Oracle

logger = logging.getLogger("cone-automata.registry")

Artifact = ConeLanguage | Nfa | OneCounterAutomaton | Transducer
Checks = Callable[[Any, ConeLanguage, AuditConfig], list[PropertyResult]]

# budgets for groups whose balls grow fast
SMALL_WINDOW = {"ball_radius": 3, "closure_radius": 3, "max_word_len": 10}


class NoParams(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class KleinParams(NoParams):
    sign_b: SignParam = 1
    sign_a: SignParam = 1


class AffineParams(NoParams):
    q: AffineQ = 2


class LexParams(NoParams):
    q: QParam = -2
    variant: VariantParam = 1


class AmalgamParams(NoParams):
    m: AffineQ = 2
    n: AffineQ = 3


@dataclass(frozen=True)
class Construction:
    name: str
    summary: str
    params: type[NoParams]
    make: Callable[[Any], Artifact]
    oracle: Callable[[Any], Oracle] | None = None
    budgets: Mapping[str, int] = field(default_factory=dict)
    checks: Checks | None = None

    @property
    def is_cone(self) -> bool:
        return self.oracle is not None

    def parse(self, raw: Mapping[str, Any] | None = None) -> NoParams:
        """Validate raw parameters; raises ``pydantic.ValidationError``."""
        return self.params.model_validate(dict(raw or {}))

    def build(self, raw: Mapping[str, Any] | None = None) -> Artifact:
        return self.make(self.parse(raw))

    def audit_config(self, **overrides: Any) -> AuditConfig:
        merged: dict[str, Any] = dict(self.budgets)
        merged.update({key: value for key, value in overrides.items() if value is not None})
        return AuditConfig.from_defaults(**merged)

    def verify(self, raw: Mapping[str, Any] | None = None, cfg: AuditConfig | None = None) -> VerificationReport:
        """Audit the cone, compare it with its oracle and run the registered checks."""
        if self.oracle is None:
            raise ConstructionError(f"{self.name} builds a machine, not a cone")
        params = self.parse(raw)
        cone = self.make(params)
        assert isinstance(cone, ConeLanguage)
        cfg = cfg or self.audit_config()
        report = audit_cone(cone, cfg)
        results = dict(report.property_results)
        results["oracle_agreement"] = compare_with_oracle(cone, self.oracle(params), cfg).as_property()
        if self.checks is not None:
            for result in self.checks(params, cone, cfg):
                results[result.name] = result
        logger.info("%s: properties %s", self.name, {key: r.passed for key, r in results.items()})
        return report.model_copy(update={"property_results": results})

    def describe(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "summary": self.summary,
            "kind": "cone" if self.is_cone else "machine",
            "params": self.params.model_json_schema().get("properties", {}),
        }


# =============================================================================
# Property checks
# =============================================================================


def _z2_projection(_: Any, cone: ConeLanguage, cfg: AuditConfig) -> list[PropertyResult]:
    assert isinstance(cone.machine, Nfa)
    projected = closure.hom_image(
        cone.machine,
        closure.deletion_map(cone.alphabet, ("x", "x'")),
        Alphabet.paired("y"),
    )
    return [check_coarse_monotone(projected, cfg.max_word_len, positive="y")]


def _wreath_pair(other: Callable[[], ConeLanguage]) -> Checks:
    def run(_: Any, cone: ConeLanguage, cfg: AuditConfig) -> list[PropertyResult]:
        return [evaluation_equal(cone, other(), cfg)]

    return run


def _f2_checks(_: Any, cone: ConeLanguage, cfg: AuditConfig) -> list[PropertyResult]:
    setup = f2_tau_setup()
    results = [check_tau_data(setup.data, setup.group, min(cfg.max_word_len, 6))]
    if cone.state_labels is not None:
        results.append(check_balancing(cone, setup.transducer(), min(cfg.max_word_len, 8), tau=setup.tau))
    return results


# =============================================================================
# Table
# =============================================================================


def _amalgam_group(params: AmalgamParams) -> CrossZ:
    return CrossZ(inner=bs_amalgam_tau_setup(params.m, params.n).group, letter=CENTRAL_LETTER)


_CONSTRUCTIONS: tuple[Construction, ...] = (
    Construction(
        "zz_cyclic",
        "{t}+ on Z",
        NoParams,
        lambda _: zz_cyclic(),
        lambda _: oracles.cyclic_oracle(),
        {"ball_radius": 6, "max_word_len": 8},
    ),
    Construction(
        "z2_lex",
        "lexicographic cone on Z^2 led by y",
        NoParams,
        lambda _: z2_lex(),
        lambda _: oracles.lex_z2_oracle(),
        checks=_z2_projection,
    ),
    Construction(
        "klein_order",
        "one of the four cones of the Klein bottle group",
        KleinParams,
        lambda p: klein_order(p.sign_b, p.sign_a),
        lambda p: oracles.klein_oracle(p.sign_b, p.sign_a),
        {"max_word_len": 8},
    ),
    Construction(
        "bs_affine_cone",
        "regular cone g(0) > 0 or <a>+ on BS(1,q)",
        AffineParams,
        lambda p: bs_affine_cone(p.q),
        lambda _: oracles.bs_affine_oracle(),
        {"closure_radius": 4, "max_word_len": 14},
    ),
    Construction(
        "bs_affine_relative_cone",
        "regular cone g(0) > 0 on BS(1,q), relative to <a>",
        AffineParams,
        lambda p: bs_affine_relative_cone(p.q),
        lambda _: oracles.bs_affine_oracle(relative=True),
        {"closure_radius": 4, "max_word_len": 14},
    ),
    Construction(
        "bs_lex_onecounter",
        "one-counter lexicographic cone P1..P4 on BS(1,q)",
        LexParams,
        lambda p: bs_lex_onecounter(p.q, p.variant),
        lambda p: oracles.bs_lex_oracle(p.variant),
        {"closure_radius": 4},
    ),
    Construction(
        "zwrz_cone",
        "hand-built leading-coefficient cone on Z wr Z",
        NoParams,
        lambda _: zwrz_cone(),
        lambda _: oracles.leadcoef_oracle(),
        {"closure_radius": 4},
        _wreath_pair(wreath_cone_zz),
    ),
    Construction(
        "wreath_cone_zz",
        "wreath-product cone language on Z wr Z",
        NoParams,
        lambda _: wreath_cone_zz(),
        lambda _: oracles.leadcoef_oracle(),
        {"closure_radius": 4},
        _wreath_pair(zwrz_cone),
    ),
    Construction(
        "f2_onecounter",
        "one-counter cone tau > 0 on F2",
        NoParams,
        lambda _: f2_onecounter(),
        lambda _: oracles.tau_oracle(f2_tau_setup()),
        SMALL_WINDOW,
        _f2_checks,
    ),
    Construction(
        "embed_cross_z_f2",
        "regular cone tau(g) + 2n > 0 on F2 x Z",
        NoParams,
        lambda _: embed_cross_z_f2(),
        lambda _: oracles.tau_cross_z_oracle(
            f2_tau_setup(), CrossZ(inner=f2_tau_setup().group, letter=CENTRAL_LETTER)
        ),
        {"ball_radius": 4, "closure_radius": 4, "max_word_len": 12},
        _f2_checks,
    ),
    Construction(
        "bs_amalgam_onecounter",
        "one-counter cone on BS(1,m) *_<a> BS(1,n)",
        AmalgamParams,
        lambda p: bs_amalgam_onecounter(p.m, p.n),
        lambda p: oracles.tau_oracle(bs_amalgam_tau_setup(p.m, p.n), absolute=True),
        SMALL_WINDOW,
    ),
    Construction(
        "bs_amalgam_cross_z",
        "regular cone on (BS(1,m) *_<a> BS(1,n)) x Z",
        AmalgamParams,
        lambda p: bs_amalgam_cross_z(p.m, p.n),
        lambda p: oracles.tau_cross_z_oracle(bs_amalgam_tau_setup(p.m, p.n), _amalgam_group(p), absolute=True),
        SMALL_WINDOW,
    ),
    Construction(
        "klein_free_cross_z",
        "regular cone on (K * Z) x Z",
        NoParams,
        lambda _: klein_free_cross_z(),
        lambda _: oracles.tau_cross_z_oracle(
            klein_z_tau_setup(), CrossZ(inner=klein_z_tau_setup().group, letter=CENTRAL_LETTER)
        ),
        SMALL_WINDOW,
    ),
    Construction(
        "free_by_cyclic_onecounter",
        "one-counter lexicographic cone on F2 x| Z",
        NoParams,
        lambda _: free_by_cyclic_onecounter(),
        lambda _: oracles.free_by_cyclic_oracle(f2_tau_setup()),
        SMALL_WINDOW,
    ),
    Construction(
        "free_by_cyclic_cross_z",
        "regular lexicographic cone on (F2 x| Z) x Z",
        NoParams,
        lambda _: free_by_cyclic_cross_z(),
        lambda _: oracles.free_by_cyclic_cross_z_oracle(
            f2_tau_setup(), CrossZ(inner=FreeByCyclic(), letter=CENTRAL_LETTER)
        ),
        SMALL_WINDOW,
    ),
    Construction("drawdown_automaton", "balance never drops 3 below its maximum", NoParams, lambda _: drawdown_automaton()),
    Construction("surplus_counter", "one-counter language #t > #t^-1", NoParams, lambda _: surplus_counter()),
    Construction("lquot_counter", "one-counter language a^-m b^k a^m", NoParams, lambda _: lquot_counter()),
    Construction("pm_z_automaton", "plus/minus automaton of {t}+", NoParams, lambda _: pm_z_automaton()),
    Construction("tau_f2_transducer", "quasi-morphism transducer of F2", NoParams, lambda _: tau_f2_transducer()),
)

REGISTRY: dict[str, Construction] = {entry.name: entry for entry in _CONSTRUCTIONS}


def construction_names() -> tuple[str, ...]:
    return tuple(REGISTRY)


def get_construction(name: str) -> Construction:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownConstructionError(name, construction_names()) from None


def build(name: str, params: Mapping[str, Any] | None = None) -> Artifact:
    """Build a registered construction from raw parameters."""
    return get_construction(name).build(params)
