"""Word-metric balls by breadth-first search."""

from __future__ import annotations

from dataclasses import dataclass, field

from cone_automata.automata.letters import Word
from cone_automata.errors import ParameterError
from cone_automata.groups.base import Form, Group, GroupElement


@dataclass(frozen=True)
class Ball:
    """``{g : |g| <= radius}`` with a shortest witness word per element.

    Witnesses are the lexicographically least shortest words, comparing
    letters in alphabet order.
    """

    group: Group
    radius: int
    witnesses: dict[Form, Word] = field(repr=False)

    def __len__(self) -> int:
        return len(self.witnesses)

    def __contains__(self, g: object) -> bool:
        return isinstance(g, GroupElement) and g.group_key == self.group.key and g.form in self.witnesses

    def contains_form(self, form: Form) -> bool:
        return form in self.witnesses

    def distance(self, form: Form) -> int | None:
        word = self.witnesses.get(form)
        return None if word is None else len(word)

    def witness(self, g: GroupElement) -> Word:
        return self.witnesses[g.form]

    def elements(self) -> list[GroupElement]:
        return [self.group.element(form) for form in self.witnesses]

    def forms(self) -> list[Form]:
        return list(self.witnesses)


def ball(group: Group, radius: int) -> Ball:
    if radius < 0:
        raise ParameterError(f"ball radius must be non-negative, got {radius}")
    generators = [(letter, group.letter_form(letter)) for letter in group.alphabet.ids]
    witnesses: dict[Form, Word] = {group.identity_form: ()}
    frontier = [group.identity_form]
    for _ in range(radius):
        upcoming = []
        for form in frontier:
            word = witnesses[form]
            for letter, step in generators:
                product = group.mul_form(form, step)
                if product not in witnesses:
                    witnesses[product] = word + (letter,)
                    upcoming.append(product)
        frontier = upcoming
    return Ball(group, radius, witnesses)
