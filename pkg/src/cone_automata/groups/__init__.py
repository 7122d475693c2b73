"""Exact arithmetic for the concrete groups the cone constructions run on."""

from __future__ import annotations

from functools import lru_cache
from typing import Any

from cone_automata.automata.letters import Word
from cone_automata.groups.abelian import CyclicGroup, FreeAbelianGroup
from cone_automata.groups.ball import Ball
from cone_automata.groups.ball import ball as _ball
from cone_automata.groups.base import Group, GroupElement
from cone_automata.groups.baumslag_solitar import BaumslagSolitarAmalgam, BaumslagSolitarGroup
from cone_automata.groups.descriptors import (
    BS1q,
    BSAmalgam,
    CrossZ,
    CyclicZ,
    Free,
    FreeAbelian,
    FreeByCyclic,
    FreeProduct,
    GroupDescriptor,
    KleinBottle,
    WreathZZ,
)
from cone_automata.groups.free import FreeGroup
from cone_automata.groups.free_by_cyclic import FreeByCyclicGroup
from cone_automata.groups.klein import KleinBottleGroup
from cone_automata.groups.products import CrossZGroup, FreeProductGroup
from cone_automata.groups.tau import SignOracle, tau_value
from cone_automata.groups.wreath import WreathGroup


@lru_cache(maxsize=64)
def build_group(descriptor: Any) -> Group:
    """Concrete group for a descriptor; cached so elements share one key."""
    if isinstance(descriptor, CyclicZ):
        return CyclicGroup(descriptor)
    if isinstance(descriptor, FreeAbelian):
        return FreeAbelianGroup(descriptor)
    if isinstance(descriptor, Free):
        return FreeGroup(descriptor)
    if isinstance(descriptor, KleinBottle):
        return KleinBottleGroup(descriptor)
    if isinstance(descriptor, BS1q):
        return BaumslagSolitarGroup(descriptor)
    if isinstance(descriptor, WreathZZ):
        return WreathGroup(descriptor)
    if isinstance(descriptor, BSAmalgam):
        return BaumslagSolitarAmalgam(descriptor)
    if isinstance(descriptor, FreeByCyclic):
        return FreeByCyclicGroup(descriptor)
    if isinstance(descriptor, FreeProduct):
        return FreeProductGroup(descriptor, build_group)
    if isinstance(descriptor, CrossZ):
        return CrossZGroup(descriptor, build_group)
    raise TypeError(f"unsupported group descriptor {descriptor!r}")


def evaluate(descriptor: GroupDescriptor, word: Word) -> GroupElement:
    return build_group(descriptor).evaluate(word)


def multiply(descriptor: GroupDescriptor, g: GroupElement, h: GroupElement) -> GroupElement:
    return build_group(descriptor).multiply(g, h)


def invert(descriptor: GroupDescriptor, g: GroupElement) -> GroupElement:
    return build_group(descriptor).invert(g)


def is_identity(descriptor: GroupDescriptor, g: GroupElement) -> bool:
    return build_group(descriptor).is_identity(g)


def ball(descriptor: GroupDescriptor, radius: int) -> Ball:
    return _ball(build_group(descriptor), radius)


__all__ = [
    "BS1q",
    "BSAmalgam",
    "Ball",
    "CrossZ",
    "CyclicZ",
    "Free",
    "FreeAbelian",
    "FreeByCyclic",
    "FreeProduct",
    "Group",
    "GroupDescriptor",
    "GroupElement",
    "KleinBottle",
    "SignOracle",
    "WreathZZ",
    "ball",
    "build_group",
    "evaluate",
    "invert",
    "is_identity",
    "multiply",
    "tau_value",
]
