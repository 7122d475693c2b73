"""Cones assembled from the basic constructions."""

from __future__ import annotations

from cone_automata.automata import closure
from cone_automata.automata.letters import Alphabet
from cone_automata.cones.embedding import embed_cross_z
from cone_automata.cones.language import ConeLanguage, Provenance
from cone_automata.cones.lex import cone_union_relative, generator_ray, lex_quotient_cone
from cone_automata.cones.quasimorphism import (
    TauSetup,
    bs_amalgam_tau_setup,
    f2_tau_setup,
    klein_z_tau_setup,
    onecounter_cone_from_tau,
)
from cone_automata.groups.descriptors import CrossZ, CyclicZ, FreeAbelian, FreeByCyclic

CENTRAL_LETTER = "z"


def zz_cyclic() -> ConeLanguage:
    """``{t}+`` on ``Z``."""
    return ConeLanguage(
        closure.letter_plus(Alphabet.paired("t"), "t"),
        CyclicZ(letter="t"),
        Provenance(construction="zz_cyclic"),
    )


def z2_lex() -> ConeLanguage:
    """``Z^2`` on ``x, y`` ordered by ``y`` first."""
    return lex_quotient_cone(
        generator_ray(Alphabet.paired("x"), "x"),
        generator_ray(Alphabet.paired("y"), "y"),
        group=FreeAbelian(letters=("x", "y")),
        name="z2_lex",
    )


def _ray_cone(setup: TauSetup, group: CrossZ | None = None) -> ConeLanguage:
    assert setup.kernel_ray is not None
    ray = generator_ray(Alphabet.paired(setup.kernel_ray), setup.kernel_ray)
    return ConeLanguage(
        ray,
        group if group is not None else setup.group,
        Provenance(construction="kernel_ray", params={"letter": setup.kernel_ray}),
    )


def tau_onecounter(setup: TauSetup, name: str) -> ConeLanguage:
    """One-counter cone ``{tau > 0}``, completed by the kernel ray when ``tau`` has one."""
    relative = onecounter_cone_from_tau(
        setup.transducer(), group=setup.group, relative_to=setup.relative_to, name=name
    )
    if setup.kernel_ray is None:
        return relative
    full = cone_union_relative(relative, _ray_cone(setup))
    return ConeLanguage(full.machine, full.group, Provenance(construction=name))


def tau_cross_z(setup: TauSetup, name: str) -> ConeLanguage:
    """Regular cone ``{tau(g) + 2n > 0}`` on ``G x Z``, completed by the kernel ray."""
    group = CrossZ(inner=setup.group, letter=CENTRAL_LETTER)
    embedded = embed_cross_z(setup.transducer(), group=group, relative_to=setup.relative_to, name=name)
    if setup.kernel_ray is None:
        return embedded
    full = cone_union_relative(embedded, _ray_cone(setup, group))
    return ConeLanguage(full.machine, full.group, Provenance(construction=name))


def f2_onecounter() -> ConeLanguage:
    return tau_onecounter(f2_tau_setup(), "f2_onecounter")


def embed_cross_z_f2() -> ConeLanguage:
    return tau_cross_z(f2_tau_setup(), "embed_cross_z_f2")


def bs_amalgam_onecounter(m: int = 2, n: int = 3) -> ConeLanguage:
    cone = tau_onecounter(bs_amalgam_tau_setup(m, n), "bs_amalgam_onecounter")
    return ConeLanguage(cone.machine, cone.group, Provenance(construction=cone.name, params={"m": m, "n": n}))


def bs_amalgam_cross_z(m: int = 2, n: int = 3) -> ConeLanguage:
    cone = tau_cross_z(bs_amalgam_tau_setup(m, n), "bs_amalgam_cross_z")
    return ConeLanguage(cone.machine, cone.group, Provenance(construction=cone.name, params={"m": m, "n": n}))


def klein_free_cross_z() -> ConeLanguage:
    return tau_cross_z(klein_z_tau_setup(), "klein_free_cross_z")


def free_by_cyclic_onecounter() -> ConeLanguage:
    """``F2 x| Z`` led by the stable letter, with the one-counter cone of ``F2`` underneath."""
    fiber = f2_onecounter()
    return lex_quotient_cone(
        fiber.machine,
        generator_ray(Alphabet.paired("s"), "s"),
        group=FreeByCyclic(),
        name="free_by_cyclic_onecounter",
    )


def free_by_cyclic_cross_z() -> ConeLanguage:
    """``(F2 x| Z) x Z`` led by the stable letter, with the regular ``F2 x Z`` cone underneath."""
    fiber = embed_cross_z_f2()
    return lex_quotient_cone(
        fiber.machine,
        generator_ray(Alphabet.paired("s"), "s"),
        group=CrossZ(inner=FreeByCyclic(), letter=CENTRAL_LETTER),
        name="free_by_cyclic_cross_z",
    )
