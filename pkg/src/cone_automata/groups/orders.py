"""Closed-form signs for the standard orders on the concrete groups.

Each function returns ``+1`` (positive), ``-1`` (negative) or ``0`` (in the
kernel of a relative order, including the identity).
"""

from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction

from cone_automata.groups.base import GroupElement
from cone_automata.groups.wreath import leading_coefficient

Sign = int
SignFunction = Callable[[GroupElement], Sign]


def sign(value: int | Fraction) -> Sign:
    return (value > 0) - (value < 0)


def exponent_sign(g: GroupElement) -> Sign:
    """Standard order on an infinite cyclic group."""
    return sign(g.form)


def lex_sign(leading: int, following: int) -> SignFunction:
    """Lexicographic order on a free abelian group by two coordinate indices."""

    def decide(g: GroupElement) -> Sign:
        return sign(g.form[leading]) or sign(g.form[following])

    return decide


def klein_sign(sign_b: int, sign_a: int) -> SignFunction:
    """Order on ``b^n a^m`` led by the quotient coordinate ``m``."""

    def decide(g: GroupElement) -> Sign:
        n, m = g.form
        return sign_a * sign(m) if m else sign_b * sign(n)

    return decide


def bs_fiber_sign(g: GroupElement) -> Sign:
    """Sign of ``g(0)`` under the affine action; ``0`` on ``<a>``."""
    return sign(g.form[0])


def bs_affine_sign(g: GroupElement) -> Sign:
    """``g(0) > 0`` or ``g`` a positive power of ``a``."""
    x, n = g.form
    return sign(x) or sign(n)


def bs_lex_sign(variant: int) -> SignFunction:
    """The four orders led by the quotient ``n``:

    1: ``n > 0`` or (``n = 0``, ``x > 0``); 2: ``n < 0`` or (``n = 0``, ``x > 0``);
    3 and 4 are the inverse cones of 1 and 2.
    """
    lead = 1 if variant in (1, 4) else -1
    fiber = 1 if variant in (1, 2) else -1

    def decide(g: GroupElement) -> Sign:
        x, n = g.form
        return lead * sign(n) if n else fiber * sign(x)

    return decide


def leadcoef_sign(g: GroupElement) -> Sign:
    """Order on ``Z wr Z``: sign of the leading lamp, else of the shift."""
    poly, shift = g.form
    return sign(leading_coefficient(poly)) if poly else sign(shift)
