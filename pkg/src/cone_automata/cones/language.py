"""Cone languages: machines tagged with the group they order."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from cone_automata.automata.letters import Alphabet, Word
from cone_automata.automata.nfa import Nfa
from cone_automata.automata.onecounter import OneCounterAutomaton
from cone_automata.errors import AlphabetError, ConstructionError
from cone_automata.groups import build_group
from cone_automata.groups.descriptors import GroupDescriptor

# "f" or (transducer state, dagger bit); None for chain states
StateLabel = str | tuple[int, int] | None


class RelativeSubgroup(BaseModel):
    """The subgroup ``C`` a cone is relative to, named by generating letters."""

    model_config = ConfigDict(frozen=True)

    generators: tuple[str, ...] = ()
    description: str = "trivial"

    @property
    def is_trivial(self) -> bool:
        return not self.generators


TRIVIAL = RelativeSubgroup()


class Provenance(BaseModel):
    model_config = ConfigDict(frozen=True)

    construction: str
    params: dict[str, Any] = Field(default_factory=dict)


@dataclass(frozen=True)
class ConeLanguage:
    machine: Nfa | OneCounterAutomaton
    group: GroupDescriptor
    provenance: Provenance
    relative_to: RelativeSubgroup = TRIVIAL
    state_labels: tuple[StateLabel, ...] | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        group_alphabet = build_group(self.group).alphabet
        if not self.machine.alphabet.issubset(group_alphabet):
            raise AlphabetError(
                f"machine alphabet {list(self.machine.alphabet.ids)} is not inside the generators "
                f"{list(group_alphabet.ids)} of {self.group.kind}"
            )
        for letter in self.relative_to.generators:
            if letter not in group_alphabet:
                raise AlphabetError(f"relative subgroup generator {letter!r} is not a group generator")
        if self.state_labels is not None and len(self.state_labels) != self.machine.num_states:
            raise ConstructionError("state_labels must label every state")

    @property
    def alphabet(self) -> Alphabet:
        return self.machine.alphabet

    @property
    def is_one_counter(self) -> bool:
        return isinstance(self.machine, OneCounterAutomaton)

    @property
    def name(self) -> str:
        return self.provenance.construction

    def accepts(self, word: Iterable[str]) -> bool:
        return self.machine.accepts(word)

    def accepted_words(self, max_len: int) -> set[Word]:
        return self.machine.accepted_words(max_len)


@dataclass(frozen=True)
class TauData:
    """Inputs of the quasi-morphism transducer.

    ``factors`` holds one sign-partitioned machine per free factor,
    ``index_order`` lists factor indices from smallest to largest and
    ``c_alphabet`` holds the letters of the amalgamated subgroup.
    """

    factors: tuple[Nfa, ...]
    index_order: tuple[int, ...]
    c_alphabet: Alphabet = field(default_factory=lambda: Alphabet(()))

    def __post_init__(self) -> None:
        for i, factor in enumerate(self.factors):
            if factor.sign is None:
                raise ConstructionError(f"factor {i} has no sign partition")
        if sorted(self.index_order) != list(range(len(self.factors))):
            raise ConstructionError("index_order must be a permutation of the factor indices")
