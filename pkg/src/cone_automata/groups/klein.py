"""The Klein bottle group ``K = <a, b | a b a^-1 = b^-1>``.

Every element is ``b^n a^m``, stored as ``(n, m)``; ``a^m b = b^((-1)^m) a^m``.
"""

from __future__ import annotations

from cone_automata.automata.letters import Word
from cone_automata.groups.base import Form, Group
from cone_automata.groups.descriptors import KleinBottle


class KleinBottleGroup(Group):
    def __init__(self, descriptor: KleinBottle) -> None:
        super().__init__(descriptor)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return ("a", "b")

    @property
    def identity_form(self) -> Form:
        return (0, 0)

    def generator_form(self, name: str) -> Form:
        return (0, 1) if name == "a" else (1, 0)

    def mul_form(self, g: Form, h: Form) -> Form:
        n, m = g
        n2, m2 = h
        return (n + (n2 if m % 2 == 0 else -n2), m + m2)

    def inv_form(self, g: Form) -> Form:
        n, m = g
        return (-n if m % 2 == 0 else n, -m)

    def relators(self) -> tuple[Word, ...]:
        return (("a", "b", "a'", "b"),)

    def format_form(self, g: Form) -> str:
        return f"b^{g[0]} a^{g[1]}"
