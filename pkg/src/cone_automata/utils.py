"""Validation types and shared constants."""

from enum import Enum
from typing import Annotated

from pydantic import Field
from pydantic.functional_validators import AfterValidator

# Audit budget limits
MAX_RADIUS = 12
MAX_WORD_LEN = 24

# Bound on transducer input length searched for the odd-codomain assertion
ODD_CODOMAIN_SEARCH_DEPTH = 6

INVERSE_SUFFIX = "'"
EPSILON_TEXT = "ε"


class EmitFormat(str, Enum):
    """Machine export formats."""

    DOT = "dot"
    JSON = "json"


def validate_nonzero(value: int) -> int:
    if value == 0:
        raise ValueError("must be nonzero")
    return value


def validate_unit_sign(value: int) -> int:
    if value not in (1, -1):
        raise ValueError("must be +1 or -1")
    return value


def validate_letter_id(value: str) -> str:
    stripped = value.strip()
    if not stripped or any(ch.isspace() for ch in stripped):
        raise ValueError("letter ids must be non-empty and contain no whitespace")
    return stripped


Radius = Annotated[
    int,
    Field(ge=0, le=MAX_RADIUS, description="Word-metric radius of the audited ball"),
]

WordLength = Annotated[
    int,
    Field(ge=0, le=MAX_WORD_LEN, description="Longest accepted word enumerated"),
]

QParam = Annotated[
    int,
    AfterValidator(validate_nonzero),
    Field(description="Baumslag-Solitar parameter q in BS(1,q); nonzero"),
]

AffineQ = Annotated[
    int,
    Field(ge=2, description="Baumslag-Solitar parameter q >= 2"),
]

VariantParam = Annotated[
    int,
    Field(ge=1, le=4, description="Lexicographic order variant P1..P4"),
]

SignParam = Annotated[
    int,
    AfterValidator(validate_unit_sign),
    Field(description="Sign choice, +1 or -1"),
]

LetterId = Annotated[
    str,
    AfterValidator(validate_letter_id),
    Field(description="Letter identifier; a trailing ' denotes the formal inverse"),
]
