"""Free-by-cyclic groups ``F x|_phi Z``.

Elements are ``(u, n)`` meaning ``u s^n`` with ``u`` freely reduced, and
``(u, n)(v, m) = (u phi^n(v), n + m)``.
"""

from __future__ import annotations

from functools import lru_cache

from cone_automata.automata.letters import Alphabet, Word
from cone_automata.errors import ConstructionError
from cone_automata.groups.base import Form, Group, GroupElement
from cone_automata.groups.descriptors import FreeByCyclic
from cone_automata.groups.free import free_reduce


class FreeByCyclicGroup(Group):
    def __init__(self, descriptor: FreeByCyclic) -> None:
        self.letters = descriptor.letters
        self.stable = descriptor.stable
        self._free_alphabet = Alphabet.paired(*self.letters, self.stable)
        self._forward = self._letter_map(dict(descriptor.images))
        self._backward = self._letter_map(dict(descriptor.inverse_images))
        self._power = lru_cache(maxsize=1 << 16)(self._power_uncached)
        super().__init__(descriptor)
        for letter in self.letters:
            if self._apply(self._backward, self._apply(self._forward, (letter,))) != (letter,):
                raise ConstructionError("inverse_images does not invert images")
            if self._apply(self._forward, self._apply(self._backward, (letter,))) != (letter,):
                raise ConstructionError("images does not invert inverse_images")

    def _letter_map(self, images: dict[str, str]) -> dict[str, Word]:
        if set(images) != set(self.letters):
            raise ConstructionError(f"automorphism must be given on exactly {list(self.letters)}")
        table: dict[str, Word] = {}
        for letter in self.letters:
            image = self._free_alphabet.check_word(images[letter].split())
            if self.stable in image or self._free_alphabet.inverse(self.stable) in image:
                raise ConstructionError("automorphism images must avoid the stable letter")
            table[letter] = free_reduce(self._free_alphabet, image)
            table[self._free_alphabet.inverse(letter)] = self._free_alphabet.inverse_word(table[letter])
        return table

    def _apply(self, table: dict[str, Word], word: Word) -> Word:
        return free_reduce(self._free_alphabet, (x for letter in word for x in table[letter]))

    def _power_uncached(self, word: Word, k: int) -> Word:
        table = self._forward if k > 0 else self._backward
        for _ in range(abs(k)):
            word = self._apply(table, word)
        return word

    @property
    def generator_names(self) -> tuple[str, ...]:
        return self.letters + (self.stable,)

    @property
    def identity_form(self) -> Form:
        return ((), 0)

    def generator_form(self, name: str) -> Form:
        return ((), 1) if name == self.stable else ((name,), 0)

    def mul_form(self, g: Form, h: Form) -> Form:
        u, n = g
        v, m = h
        moved = self._power(v, n) if n else v
        return (free_reduce(self.alphabet, u + moved), n + m)

    def inv_form(self, g: Form) -> Form:
        u, n = g
        return (self._power(self.alphabet.inverse_word(u), -n), -n)

    def relators(self) -> tuple[Word, ...]:
        s, s_inv = self.stable, self.alphabet.inverse(self.stable)
        return tuple(
            (s, x, s_inv) + self.alphabet.inverse_word(self._forward[x]) for x in self.letters
        )

    def split(self, g: GroupElement) -> tuple[Word, int]:
        u, n = self._own(g)
        return u, n

    def format_form(self, g: Form) -> str:
        u, n = g
        return f"{' '.join(u) or '1'} {self.stable}^{n}"
