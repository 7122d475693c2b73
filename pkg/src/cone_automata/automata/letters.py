"""Letters, alphabets and words.

A word is a plain tuple of letter ids. Formal inverses are declared per letter;
the conventional spelling of the inverse of ``x`` is ``x'``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from cone_automata.errors import AlphabetError, RejectedInputError, UnpairedLetterError
from cone_automata.utils import INVERSE_SUFFIX

Word = tuple[str, ...]


@dataclass(frozen=True, order=True)
class Letter:
    id: str
    inverse_of: str | None = None


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of letters with an involutive inverse pairing."""

    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.letters)))
        ids = [letter.id for letter in ordered]
        if len(ids) != len(set(ids)):
            raise AlphabetError(f"letter declared twice with different pairings: {ids}")
        object.__setattr__(self, "letters", ordered)
        by_id = {letter.id: letter for letter in ordered}
        for letter in ordered:
            if letter.inverse_of is None:
                continue
            partner = by_id.get(letter.inverse_of)
            if partner is None or partner.inverse_of != letter.id:
                raise AlphabetError(f"inverse pairing of {letter.id!r} is not an involution inside the alphabet")

    @classmethod
    def paired(cls, *generators: str) -> Alphabet:
        """Alphabet ``{x, x'}`` for every generator ``x``."""
        letters: list[Letter] = []
        for gen in generators:
            inverse = gen + INVERSE_SUFFIX
            letters.append(Letter(gen, inverse))
            letters.append(Letter(inverse, gen))
        return cls(tuple(letters))

    @classmethod
    def plain(cls, *ids: str) -> Alphabet:
        return cls(tuple(Letter(letter_id) for letter_id in ids))

    @cached_property
    def _by_id(self) -> dict[str, Letter]:
        return {letter.id: letter for letter in self.letters}

    @cached_property
    def ids(self) -> tuple[str, ...]:
        return tuple(letter.id for letter in self.letters)

    def __contains__(self, letter_id: object) -> bool:
        return letter_id in self._by_id

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_paired(self) -> bool:
        return all(letter.inverse_of is not None for letter in self.letters)

    def inverse(self, letter_id: str) -> str:
        letter = self._by_id.get(letter_id)
        if letter is None:
            raise RejectedInputError(letter_id, self.ids)
        if letter.inverse_of is None:
            raise UnpairedLetterError(f"letter {letter_id!r} has no formal inverse")
        return letter.inverse_of

    def inverse_word(self, word: Word) -> Word:
        """``x1...xn -> xn^-1...x1^-1``."""
        return tuple(self.inverse(letter) for letter in reversed(word))

    def require_paired(self) -> None:
        unpaired = [letter.id for letter in self.letters if letter.inverse_of is None]
        if unpaired:
            raise UnpairedLetterError(f"letters without formal inverse: {unpaired}")

    def check_word(self, word: Iterable[str]) -> Word:
        word = tuple(word)
        for letter in word:
            if letter not in self._by_id:
                raise RejectedInputError(letter, self.ids)
        return word

    def union(self, other: Alphabet) -> Alphabet:
        for letter in other.letters:
            mine = self._by_id.get(letter.id)
            if mine is not None and mine != letter:
                raise AlphabetError(f"letter {letter.id!r} is paired differently in the two alphabets")
        return Alphabet(self.letters + other.letters)

    def issubset(self, other: Alphabet) -> bool:
        return all(other._by_id.get(letter.id) == letter for letter in self.letters)

    def disjoint(self, other: Alphabet) -> bool:
        return not set(self.ids) & set(other.ids)

    def restrict(self, ids: Iterable[str]) -> Alphabet:
        wanted = set(ids)
        return Alphabet(tuple(letter for letter in self.letters if letter.id in wanted))
