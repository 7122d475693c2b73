"""Group descriptors: hashable, JSON-serializable names of concrete groups."""

from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field

from cone_automata.utils import LetterId, QParam


class _Descriptor(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    def key(self) -> str:
        return self.model_dump_json()


class CyclicZ(_Descriptor):
    kind: Literal["cyclic"] = "cyclic"
    letter: LetterId = "t"


class FreeAbelian(_Descriptor):
    kind: Literal["free_abelian"] = "free_abelian"
    letters: tuple[LetterId, ...] = Field(default=("x", "y"), min_length=1)

    @property
    def rank(self) -> int:
        return len(self.letters)


class Free(_Descriptor):
    kind: Literal["free"] = "free"
    letters: tuple[LetterId, ...] = Field(default=("a", "b"), min_length=1)

    @property
    def rank(self) -> int:
        return len(self.letters)


class KleinBottle(_Descriptor):
    """``<a, b | a b a^-1 = b^-1>``."""

    kind: Literal["klein"] = "klein"


class BS1q(_Descriptor):
    """``BS(1, q) = <a, b | a b a^-1 = b^q>``."""

    kind: Literal["bs1q"] = "bs1q"
    q: QParam


class WreathZZ(_Descriptor):
    """The wreath product of two infinite cyclic groups, shift ``t`` and lamp ``c``."""

    kind: Literal["wreath_zz"] = "wreath_zz"


class BSAmalgam(_Descriptor):
    """``BS(1, m) *_<a> BS(1, n) = <a, b, c | a b a^-1 = b^m, a c a^-1 = c^n>``."""

    kind: Literal["bs_amalgam"] = "bs_amalgam"
    m: QParam = 2
    n: QParam = 3


class FreeByCyclic(_Descriptor):
    """``F(letters) x|_phi Z`` with stable letter ``s`` acting by ``s x s^-1 = phi(x)``.

    ``images`` and ``inverse_images`` map each free generator to a
    space-separated word; they must define mutually inverse automorphisms.
    """

    kind: Literal["free_by_cyclic"] = "free_by_cyclic"
    letters: tuple[LetterId, ...] = ("a", "b")
    stable: LetterId = "s"
    images: tuple[tuple[str, str], ...] = (("a", "a b"), ("b", "b"))
    inverse_images: tuple[tuple[str, str], ...] = (("a", "a b'"), ("b", "b"))


class FreeProduct(_Descriptor):
    kind: Literal["free_product"] = "free_product"
    factors: tuple[GroupDescriptor, ...] = Field(min_length=2)


class CrossZ(_Descriptor):
    """``G x Z`` with the new central generator named ``letter``."""

    kind: Literal["cross_z"] = "cross_z"
    inner: GroupDescriptor
    letter: LetterId = "z"


GroupDescriptor = Annotated[
    Union[
        CyclicZ,
        FreeAbelian,
        Free,
        KleinBottle,
        BS1q,
        WreathZZ,
        BSAmalgam,
        FreeByCyclic,
        FreeProduct,
        CrossZ,
    ],
    Field(discriminator="kind"),
]

FreeProduct.model_rebuild()
CrossZ.model_rebuild()
