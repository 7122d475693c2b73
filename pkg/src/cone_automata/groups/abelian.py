"""Infinite cyclic and free abelian groups."""

from __future__ import annotations

from cone_automata.automata.letters import Word
from cone_automata.groups.base import Form, Group
from cone_automata.groups.descriptors import CyclicZ, FreeAbelian


class CyclicGroup(Group):
    """Elements are integers."""

    def __init__(self, descriptor: CyclicZ) -> None:
        self.letter = descriptor.letter
        super().__init__(descriptor)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return (self.letter,)

    @property
    def identity_form(self) -> Form:
        return 0

    def generator_form(self, name: str) -> Form:
        return 1

    def mul_form(self, g: Form, h: Form) -> Form:
        return g + h

    def inv_form(self, g: Form) -> Form:
        return -g

    def format_form(self, g: Form) -> str:
        return f"{self.letter}^{g}"


class FreeAbelianGroup(Group):
    """Elements are integer vectors, one coordinate per generator."""

    def __init__(self, descriptor: FreeAbelian) -> None:
        self.letters = descriptor.letters
        super().__init__(descriptor)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return self.letters

    @property
    def identity_form(self) -> Form:
        return (0,) * len(self.letters)

    def generator_form(self, name: str) -> Form:
        return tuple(1 if letter == name else 0 for letter in self.letters)

    def mul_form(self, g: Form, h: Form) -> Form:
        return tuple(x + y for x, y in zip(g, h))

    def inv_form(self, g: Form) -> Form:
        return tuple(-x for x in g)

    def relators(self) -> tuple[Word, ...]:
        return tuple(
            (x, y, self.alphabet.inverse(x), self.alphabet.inverse(y))
            for i, x in enumerate(self.letters)
            for y in self.letters[i + 1 :]
        )

    def format_form(self, g: Form) -> str:
        return "(" + ", ".join(str(x) for x in g) + ")"
