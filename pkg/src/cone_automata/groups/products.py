"""Free products and direct products with an infinite cyclic group."""

from __future__ import annotations

from collections.abc import Callable

from cone_automata.automata.letters import Word
from cone_automata.errors import AlphabetError
from cone_automata.groups.base import Form, Group, GroupElement
from cone_automata.groups.descriptors import CrossZ, FreeProduct


class FreeProductGroup(Group):
    """Elements are alternating tuples of ``(factor index, non-identity factor form)``."""

    def __init__(self, descriptor: FreeProduct, build: Callable[[object], Group]) -> None:
        self.factors = tuple(build(factor) for factor in descriptor.factors)
        self._factor_of: dict[str, int] = {}
        for index, factor in enumerate(self.factors):
            for name in factor.generator_names:
                if name in self._factor_of:
                    raise AlphabetError(f"generator {name!r} appears in two free factors")
                self._factor_of[name] = index
        super().__init__(descriptor)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return tuple(name for factor in self.factors for name in factor.generator_names)

    @property
    def identity_form(self) -> Form:
        return ()

    def generator_form(self, name: str) -> Form:
        index = self._factor_of[name]
        return ((index, self.factors[index].generator_form(name)),)

    def mul_form(self, g: Form, h: Form) -> Form:
        merged = list(g)
        i = 0
        while merged and i < len(h) and merged[-1][0] == h[i][0]:
            index, left = merged.pop()
            factor = self.factors[index]
            product = factor.mul_form(left, h[i][1])
            i += 1
            if product != factor.identity_form:
                merged.append((index, product))
                break
        merged.extend(h[i:])
        return tuple(merged)

    def inv_form(self, g: Form) -> Form:
        return tuple((index, self.factors[index].inv_form(form)) for index, form in reversed(g))

    def relators(self) -> tuple[Word, ...]:
        return tuple(relator for factor in self.factors for relator in factor.relators())

    def syllables(self, g: GroupElement) -> list[tuple[int, GroupElement]]:
        return [(index, self.factors[index].element(form)) for index, form in self._own(g)]

    def format_form(self, g: Form) -> str:
        if not g:
            return "1"
        return " * ".join(f"[{self.factors[index].format_form(form)}]" for index, form in g)


class CrossZGroup(Group):
    """``G x Z``; elements are ``(inner form, exponent of the central letter)``."""

    def __init__(self, descriptor: CrossZ, build: Callable[[object], Group]) -> None:
        self.inner = build(descriptor.inner)
        self.letter = descriptor.letter
        if self.letter in self.inner.alphabet:
            raise AlphabetError(f"central letter {self.letter!r} already names a generator of the inner group")
        super().__init__(descriptor)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return self.inner.generator_names + (self.letter,)

    @property
    def identity_form(self) -> Form:
        return (self.inner.identity_form, 0)

    def generator_form(self, name: str) -> Form:
        if name == self.letter:
            return (self.inner.identity_form, 1)
        return (self.inner.generator_form(name), 0)

    def mul_form(self, g: Form, h: Form) -> Form:
        return (self.inner.mul_form(g[0], h[0]), g[1] + h[1])

    def inv_form(self, g: Form) -> Form:
        return (self.inner.inv_form(g[0]), -g[1])

    def relators(self) -> tuple[Word, ...]:
        z, z_inv = self.letter, self.alphabet.inverse(self.letter)
        commutators = tuple(
            (z, x, z_inv, self.alphabet.inverse(x)) for x in self.inner.generator_names
        )
        return self.inner.relators() + commutators

    def split(self, g: GroupElement) -> tuple[GroupElement, int]:
        inner, exponent = self._own(g)
        return self.inner.element(inner), exponent

    def format_form(self, g: Form) -> str:
        return f"({self.inner.format_form(g[0])}, {self.letter}^{g[1]})"
