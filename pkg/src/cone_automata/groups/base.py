"""Group interface shared by every concrete group.

Elements are kept in canonical form, so equality of forms is equality in
the group. Internal algorithms work on raw forms; :class:`GroupElement`
wraps a form together with the key of the group it belongs to.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from cone_automata.automata.letters import Alphabet, Word
from cone_automata.errors import DescriptorMismatchError, RejectedInputError

Form = Any


@dataclass(frozen=True)
class GroupElement:
    group_key: str
    form: Form


class Group(ABC):
    def __init__(self, descriptor: Any) -> None:
        self.descriptor = descriptor
        self.key: str = descriptor.key()
        self.alphabet = Alphabet.paired(*self.generator_names)
        self._letter_forms: dict[str, Form] = {}
        for name in self.generator_names:
            form = self.generator_form(name)
            self._letter_forms[name] = form
            self._letter_forms[self.alphabet.inverse(name)] = self.inv_form(form)

    # -- to implement --------------------------------------------------------

    @property
    @abstractmethod
    def generator_names(self) -> tuple[str, ...]:
        """Positive generators; the alphabet adds their formal inverses."""

    @property
    @abstractmethod
    def identity_form(self) -> Form: ...

    @abstractmethod
    def generator_form(self, name: str) -> Form: ...

    @abstractmethod
    def mul_form(self, g: Form, h: Form) -> Form: ...

    @abstractmethod
    def inv_form(self, g: Form) -> Form: ...

    def relators(self) -> tuple[Word, ...]:
        return ()

    def format_form(self, g: Form) -> str:
        return str(g)

    # -- raw forms -------------------------------------------------------------

    def letter_form(self, letter: str) -> Form:
        try:
            return self._letter_forms[letter]
        except KeyError:
            raise RejectedInputError(letter, self.alphabet.ids) from None

    def evaluate_form(self, word: Iterable[str]) -> Form:
        current = self.identity_form
        for letter in word:
            current = self.mul_form(current, self.letter_form(letter))
        return current

    # -- elements --------------------------------------------------------------

    def element(self, form: Form) -> GroupElement:
        return GroupElement(self.key, form)

    @property
    def identity(self) -> GroupElement:
        return self.element(self.identity_form)

    def _own(self, g: GroupElement) -> Form:
        if g.group_key != self.key:
            raise DescriptorMismatchError(f"element of {g.group_key} used in {self.key}")
        return g.form

    def evaluate(self, word: Iterable[str]) -> GroupElement:
        return self.element(self.evaluate_form(word))

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return self.element(self.mul_form(self._own(g), self._own(h)))

    def invert(self, g: GroupElement) -> GroupElement:
        return self.element(self.inv_form(self._own(g)))

    def is_identity(self, g: GroupElement) -> bool:
        return self._own(g) == self.identity_form

    def format(self, g: GroupElement) -> str:
        return self.format_form(self._own(g))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.key})"
