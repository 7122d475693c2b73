"""The wreath product ``Z wr Z = Z[X, X^-1] x| Z``.

Elements are ``(p, s)`` with ``p`` a Laurent polynomial stored as a sorted
tuple of ``(exponent, coefficient)`` pairs with nonzero coefficients, and
``(p, s)(p', s') = (p + X^s p', s + s')``. ``t = (0, 1)``, ``c = (1, 0)``.
"""

from __future__ import annotations

from cone_automata.automata.letters import Word
from cone_automata.groups.base import Form, Group, GroupElement
from cone_automata.groups.descriptors import WreathZZ

Poly = tuple[tuple[int, int], ...]


def poly_add(p: Poly, q: Poly, shift: int = 0) -> Poly:
    """``p + X^shift q``."""
    coeffs = dict(p)
    for exponent, coeff in q:
        key = exponent + shift
        value = coeffs.get(key, 0) + coeff
        if value:
            coeffs[key] = value
        else:
            coeffs.pop(key, None)
    return tuple(sorted(coeffs.items()))


def leading_coefficient(p: Poly) -> int:
    """Coefficient of the highest power; ``0`` for the zero polynomial."""
    return p[-1][1] if p else 0


class WreathGroup(Group):
    def __init__(self, descriptor: WreathZZ) -> None:
        super().__init__(descriptor)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return ("t", "c")

    @property
    def identity_form(self) -> Form:
        return ((), 0)

    def generator_form(self, name: str) -> Form:
        return ((), 1) if name == "t" else (((0, 1),), 0)

    def mul_form(self, g: Form, h: Form) -> Form:
        p, s = g
        q, r = h
        return (poly_add(p, q, s), s + r)

    def inv_form(self, g: Form) -> Form:
        p, s = g
        return (tuple((e - s, -c) for e, c in p), -s)

    def relators(self) -> tuple[Word, ...]:
        # lamps commute with their translates
        return tuple(
            ("c",) + ("t",) * k + ("c",) + ("t'",) * k + ("c'",) + ("t",) * k + ("c'",) + ("t'",) * k
            for k in (1, 2)
        )

    def polynomial(self, g: GroupElement) -> Poly:
        poly: Poly = self._own(g)[0]
        return poly

    def format_form(self, g: Form) -> str:
        p, s = g
        terms = " + ".join(f"{c}X^{e}" for e, c in p) or "0"
        return f"({terms}, {s})"
