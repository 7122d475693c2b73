"""Free groups; elements are freely reduced words."""

from __future__ import annotations

from collections.abc import Iterable

from cone_automata.automata.letters import Alphabet, Word
from cone_automata.groups.base import Form, Group
from cone_automata.groups.descriptors import Free


def free_reduce(alphabet: Alphabet, letters: Iterable[str]) -> Word:
    stack: list[str] = []
    for letter in letters:
        if stack and stack[-1] == alphabet.inverse(letter):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class FreeGroup(Group):
    def __init__(self, descriptor: Free) -> None:
        self.letters = descriptor.letters
        super().__init__(descriptor)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return self.letters

    @property
    def identity_form(self) -> Form:
        return ()

    def generator_form(self, name: str) -> Form:
        return (name,)

    def mul_form(self, g: Form, h: Form) -> Form:
        # cancel at the seam only; both operands are reduced
        cut = 0
        limit = min(len(g), len(h))
        while cut < limit and g[len(g) - 1 - cut] == self._inverse(h[cut]):
            cut += 1
        return g[: len(g) - cut] + h[cut:]

    def inv_form(self, g: Form) -> Form:
        return self.alphabet.inverse_word(g)

    def _inverse(self, letter: str) -> str:
        return self.alphabet.inverse(letter)

    def format_form(self, g: Form) -> str:
        return " ".join(g) if g else "1"
