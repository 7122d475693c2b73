"""Closed-form membership predicates the machines are checked against."""

from __future__ import annotations

from collections.abc import Callable
from enum import Enum

from cone_automata.cones.quasimorphism import TauSetup
from cone_automata.groups import build_group
from cone_automata.groups.base import GroupElement
from cone_automata.groups.descriptors import CrossZ
from cone_automata.groups.orders import (
    SignFunction,
    bs_affine_sign,
    bs_fiber_sign,
    bs_lex_sign,
    exponent_sign,
    klein_sign,
    leadcoef_sign,
    lex_sign,
    sign,
)
from cone_automata.groups.products import CrossZGroup


class Verdict(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    KERNEL = "kernel"


Oracle = Callable[[GroupElement], Verdict]


def from_sign(decide: SignFunction) -> Oracle:
    """Turn a ``+1/-1/0`` sign function into an oracle."""

    def oracle(g: GroupElement) -> Verdict:
        value = decide(g)
        if value > 0:
            return Verdict.POSITIVE
        if value < 0:
            return Verdict.NEGATIVE
        return Verdict.KERNEL

    return oracle


def cyclic_oracle() -> Oracle:
    return from_sign(exponent_sign)


def lex_z2_oracle() -> Oracle:
    """``Z^2`` on ``(x, y)`` ordered by ``y`` first."""
    return from_sign(lex_sign(1, 0))


def klein_oracle(sign_b: int, sign_a: int) -> Oracle:
    return from_sign(klein_sign(sign_b, sign_a))


def bs_affine_oracle(*, relative: bool = False) -> Oracle:
    return from_sign(bs_fiber_sign if relative else bs_affine_sign)


def bs_lex_oracle(variant: int) -> Oracle:
    return from_sign(bs_lex_sign(variant))


def leadcoef_oracle() -> Oracle:
    return from_sign(leadcoef_sign)


def _kernel_sign(setup: TauSetup) -> SignFunction | None:
    """Sign of a kernel element along the ray that completes a relative cone."""
    if setup.kernel_ray is None:
        return None

    def decide(g: GroupElement) -> int:
        # kernel elements of the amalgam are ((), n), the n-th power of the ray
        return sign(g.form[1])

    return decide


def tau_oracle(setup: TauSetup, *, absolute: bool = False) -> Oracle:
    """``tau(g) > 0``; with ``absolute`` the kernel is ordered by the setup's ray."""
    kernel = _kernel_sign(setup) if absolute else None

    def decide(g: GroupElement) -> int:
        value = setup.tau(g)
        if value == 0 and kernel is not None:
            return kernel(g)
        return sign(value)

    return from_sign(decide)


def tau_cross_z_oracle(setup: TauSetup, descriptor: CrossZ, *, absolute: bool = False) -> Oracle:
    """``tau(g) + 2n > 0`` on ``G x Z``; ties only occur on ``C x {0}``."""
    group = build_group(descriptor)
    assert isinstance(group, CrossZGroup)
    kernel = _kernel_sign(setup) if absolute else None

    def decide(g: GroupElement) -> int:
        inner, n = group.split(g)
        value = setup.tau(inner) + 2 * n
        if value == 0 and kernel is not None:
            return kernel(inner)
        return sign(value)

    return from_sign(decide)


def free_by_cyclic_oracle(setup: TauSetup) -> Oracle:
    """Led by the stable letter, then ``tau`` on the free fiber."""
    free_product = build_group(setup.group)

    def decide(g: GroupElement) -> int:
        word, n = g.form
        return sign(n) if n else sign(setup.tau(free_product.evaluate(word)))

    return from_sign(decide)


def free_by_cyclic_cross_z_oracle(setup: TauSetup, descriptor: CrossZ) -> Oracle:
    """Led by the stable letter, then ``tau + 2 * (central exponent)`` on the fiber."""
    group = build_group(descriptor)
    assert isinstance(group, CrossZGroup)
    free_product = build_group(setup.group)

    def decide(g: GroupElement) -> int:
        inner, k = group.split(g)
        word, n = inner.form
        return sign(n) if n else sign(setup.tau(free_product.evaluate(word)) + 2 * k)

    return from_sign(decide)
