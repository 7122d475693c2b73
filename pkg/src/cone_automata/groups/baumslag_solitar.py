"""Solvable Baumslag-Solitar groups and amalgams of two of them over ``<a>``.

``BS(1, q)`` is realized as ``Z[1/q] x| Z`` with
``(x, n) (y, m) = (x + q^n y, n + m)``, ``a = (0, 1)`` and ``b = (1, 0)``.
The affine action ``a: x -> q x``, ``b: x -> x + 1`` sends ``0`` to ``x``, so
``g(0)`` is the fiber coordinate.
"""

from __future__ import annotations

from fractions import Fraction

from cone_automata.automata.letters import Word
from cone_automata.errors import ConstructionError
from cone_automata.groups.base import Form, Group, GroupElement
from cone_automata.groups.descriptors import BS1q, BSAmalgam


class BaumslagSolitarGroup(Group):
    def __init__(self, descriptor: BS1q) -> None:
        self.q = Fraction(descriptor.q)
        super().__init__(descriptor)
        if any(self.evaluate_form(relator) != self.identity_form for relator in self.relators()):
            raise ConstructionError("multiplication convention violates a b a^-1 = b^q")

    @property
    def generator_names(self) -> tuple[str, ...]:
        return ("a", "b")

    @property
    def identity_form(self) -> Form:
        return (Fraction(0), 0)

    def generator_form(self, name: str) -> Form:
        return (Fraction(0), 1) if name == "a" else (Fraction(1), 0)

    def mul_form(self, g: Form, h: Form) -> Form:
        x, n = g
        y, m = h
        return (x + self.q**n * y, n + m)

    def inv_form(self, g: Form) -> Form:
        x, n = g
        return (-(self.q**-n) * x, -n)

    def relators(self) -> tuple[Word, ...]:
        q = int(self.q)
        power = ("b'",) * q if q > 0 else ("b",) * -q
        return (("a", "b", "a'") + power,)

    def format_form(self, g: Form) -> str:
        return f"({g[0]}, {g[1]})"

    def affine_image_of_zero(self, g: GroupElement) -> Fraction:
        fiber: Fraction = self._own(g)[0]
        return fiber


class BaumslagSolitarAmalgam(Group):
    """``BS(1, m) *_<a> BS(1, n)`` on letters ``a``, ``b`` (first factor), ``c`` (second).

    Normal form: a tuple of fiber syllables ``(factor, x)`` with ``x != 0`` and
    adjacent syllables in different factors, followed by a power of ``a``.
    A syllable ``(f, x)`` is the element ``(x, 0)`` of the ``f``-th factor.
    """

    def __init__(self, descriptor: BSAmalgam) -> None:
        self.qs = (Fraction(descriptor.m), Fraction(descriptor.n))
        self.factors = (BaumslagSolitarGroup(BS1q(q=descriptor.m)), BaumslagSolitarGroup(BS1q(q=descriptor.n)))
        super().__init__(descriptor)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return ("a", "b", "c")

    @property
    def identity_form(self) -> Form:
        return ((), 0)

    def generator_form(self, name: str) -> Form:
        if name == "a":
            return ((), 1)
        return (((0 if name == "b" else 1, Fraction(1)),), 0)

    def _push(self, syllables: tuple[tuple[int, Fraction], ...], shift: int) -> list[tuple[int, Fraction]]:
        """Conjugate every syllable by ``a^shift``."""
        if shift == 0:
            return list(syllables)
        return [(f, x * self.qs[f] ** shift) for f, x in syllables]

    def mul_form(self, g: Form, h: Form) -> Form:
        left, n = g
        right, m = h
        merged = list(left)
        pushed = self._push(right, n)
        i = 0
        while merged and i < len(pushed) and merged[-1][0] == pushed[i][0]:
            factor, x = merged.pop()
            total = x + pushed[i][1]
            i += 1
            if total != 0:
                merged.append((factor, total))
                break
        merged.extend(pushed[i:])
        return (tuple(merged), n + m)

    def inv_form(self, g: Form) -> Form:
        syllables, n = g
        inverted = tuple((f, -x) for f, x in reversed(syllables))
        return (tuple(self._push(inverted, -n)), -n)

    def relators(self) -> tuple[Word, ...]:
        m, n = (int(q) for q in self.qs)
        return (
            ("a", "b", "a'") + (("b'",) * m if m > 0 else ("b",) * -m),
            ("a", "c", "a'") + (("c'",) * n if n > 0 else ("c",) * -n),
        )

    def syllables(self, g: GroupElement) -> list[tuple[int, GroupElement]]:
        parts, _ = self._own(g)
        return [(f, self.factors[f].element((x, 0))) for f, x in parts]

    def format_form(self, g: Form) -> str:
        syllables, n = g
        body = " ".join(f"{'bc'[f]}[{x}]" for f, x in syllables)
        return f"{body} a^{n}".strip()
