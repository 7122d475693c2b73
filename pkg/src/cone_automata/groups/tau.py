"""The ordering quasi-morphism of a free product (possibly amalgamated).

For a normal form ``g = g_1 ... g_k c`` with alternating factors,
``tau(g)`` counts positive minus negative syllables plus index jumps minus
index drops between consecutive syllables.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Protocol

from cone_automata.errors import ConstructionError
from cone_automata.groups.base import GroupElement

SignOracle = Callable[[GroupElement], int]


class SyllabicGroup(Protocol):
    def syllables(self, g: GroupElement) -> list[tuple[int, GroupElement]]: ...


def tau_value(
    group: SyllabicGroup,
    orders: Sequence[SignOracle],
    index_order: Sequence[int],
    g: GroupElement,
) -> int:
    """Value of the quasi-morphism on ``g``.

    Args:
        group: a free product or amalgam exposing ``syllables``.
        orders: one oracle per factor returning ``+1``/``-1`` for the sign of a
            syllable in that factor's relative order.
        index_order: factor indices from smallest to largest.
        g: the element.

    Raises:
        ConstructionError: an oracle returned ``0`` for a syllable, or a
            non-identity element got an even value.
    """
    rank = {factor: position for position, factor in enumerate(index_order)}
    syllables = group.syllables(g)
    value = 0
    previous: int | None = None
    for factor, syllable in syllables:
        sign = orders[factor](syllable)
        if sign not in (1, -1):
            raise ConstructionError(f"factor {factor} oracle gave no sign for syllable {syllable.form}")
        value += sign
        if previous is not None:
            value += 1 if rank[previous] < rank[factor] else -1
        previous = factor
    if syllables and value % 2 == 0:
        raise ConstructionError(f"even quasi-morphism value {value} on a non-trivial normal form")
    return value
