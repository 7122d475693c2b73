"""Exception hierarchy.

Every error raised on purpose by the library is a ``ValueError`` subclass so
callers that only care about "bad input" can catch one type.
"""

from __future__ import annotations


class ConeAutomataError(ValueError):
    """Base class for library errors."""

    code = "cone_automata_error"


class AlphabetError(ConeAutomataError):
    """A letter is unknown, paired inconsistently, or shared where disjointness is required."""

    code = "alphabet_error"


class RejectedInputError(AlphabetError):
    """A word contains a letter outside the machine alphabet.

    Distinct from a word that is simply not accepted.
    """

    code = "rejected_input"

    def __init__(self, letter: str, alphabet: tuple[str, ...]) -> None:
        self.letter = letter
        self.alphabet = alphabet
        super().__init__(f"letter {letter!r} is not in alphabet {{{', '.join(alphabet)}}}")


class UnpairedLetterError(AlphabetError):
    """An operation needs formal inverses but a letter has none."""

    code = "unpaired_letter"


class DescriptorMismatchError(ConeAutomataError):
    """Elements of different groups were combined."""

    code = "descriptor_mismatch"


class ConstructionError(ConeAutomataError):
    """A construction-time assertion failed."""

    code = "construction_failed"


class UnknownConstructionError(ConeAutomataError):
    """A construction name is not registered."""

    code = "unknown_construction"

    def __init__(self, name: str, known: tuple[str, ...]) -> None:
        self.name = name
        self.known = known
        super().__init__(f"unknown construction {name!r}; known: {', '.join(known)}")


class ParameterError(ConeAutomataError):
    """Parameters given to a construction or verb that takes none of that name."""

    code = "invalid_parameters"
