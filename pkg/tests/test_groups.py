"""Tests for exact group arithmetic, balls and descriptors."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from cone_automata.errors import (
    AlphabetError,
    ConstructionError,
    DescriptorMismatchError,
    ParameterError,
    RejectedInputError,
)
from cone_automata.groups import (
    BS1q,
    BSAmalgam,
    CrossZ,
    CyclicZ,
    Free,
    FreeAbelian,
    FreeByCyclic,
    FreeProduct,
    KleinBottle,
    WreathZZ,
    ball,
    build_group,
    evaluate,
    is_identity,
)

DESCRIPTORS = [
    CyclicZ(),
    FreeAbelian(),
    FreeAbelian(letters=("x", "y", "w")),
    Free(),
    KleinBottle(),
    BS1q(q=2),
    BS1q(q=-2),
    BS1q(q=3),
    WreathZZ(),
    BSAmalgam(),
    FreeByCyclic(),
    FreeProduct(factors=(CyclicZ(letter="a"), CyclicZ(letter="b"))),
    FreeProduct(factors=(KleinBottle(), CyclicZ(letter="c"))),
    CrossZ(inner=Free()),
    CrossZ(inner=BSAmalgam()),
]


def _words(descriptor, max_size=6):
    letters = build_group(descriptor).alphabet.ids
    return st.lists(st.sampled_from(letters), max_size=max_size).map(tuple)


# --- relators and named identities ---


@pytest.mark.parametrize("descriptor", DESCRIPTORS, ids=lambda d: d.kind)
def test_relators_evaluate_to_identity(descriptor):
    group = build_group(descriptor)
    for relator in group.relators():
        assert group.is_identity(group.evaluate(relator)), relator


def test_klein_conjugation_inverts_b():
    assert evaluate(KleinBottle(), ("a", "b", "a'")) == evaluate(KleinBottle(), ("b'",))


def test_bs_fiber_coordinates():
    group = build_group(BS1q(q=2))
    assert group.evaluate(("a'", "b", "a")).form == (Fraction(1, 2), 0)
    assert group.affine_image_of_zero(group.evaluate(("a", "b", "a'"))) == 2
    negative = build_group(BS1q(q=-2))
    assert negative.evaluate(("a'", "b'", "a")).form == (Fraction(1, 2), 0)


def test_amalgam_syllables():
    group = build_group(BSAmalgam())
    assert evaluate(BSAmalgam(), ("a", "b", "a'")) == evaluate(BSAmalgam(), ("b", "b"))
    assert evaluate(BSAmalgam(), ("a", "c", "a'")) == evaluate(BSAmalgam(), ("c", "c", "c"))
    assert [factor for factor, _ in group.syllables(group.evaluate(("b", "c", "b")))] == [0, 1, 0]
    assert group.syllables(group.evaluate(("b", "b'"))) == []


def test_wreath_polynomials():
    group = build_group(WreathZZ())
    g = group.evaluate(("c", "t", "c", "c", "t'"))
    assert group.polynomial(g) == ((0, 1), (1, 2))
    assert group.evaluate(("t", "c", "t'", "c")) == group.evaluate(("c", "t", "c", "t'"))


def test_free_by_cyclic_conjugation():
    descriptor = FreeByCyclic()
    assert evaluate(descriptor, ("s", "a", "s'")) == evaluate(descriptor, ("a", "b"))
    assert evaluate(descriptor, ("s'", "a", "s")) == evaluate(descriptor, ("a", "b'"))
    group = build_group(descriptor)
    assert group.split(group.evaluate(("a", "s", "b"))) == (("a", "b"), 1)


def test_free_reduction():
    group = build_group(Free())
    assert group.evaluate(("a", "b", "b'", "a'")) == group.identity
    assert group.evaluate(("a", "b", "b'")).form == ("a",)


def test_cross_z_is_central():
    descriptor = CrossZ(inner=Free())
    assert evaluate(descriptor, ("z", "a")) == evaluate(descriptor, ("a", "z"))
    group = build_group(descriptor)
    inner, exponent = group.split(group.evaluate(("a", "z'", "b", "z'")))
    assert inner.form == ("a", "b")
    assert exponent == -2


# --- group laws ---


@pytest.mark.parametrize("descriptor", DESCRIPTORS, ids=lambda d: d.kind)
def test_evaluation_is_a_homomorphism(descriptor):
    group = build_group(descriptor)

    @settings(max_examples=20, deadline=None)
    @given(_words(descriptor), _words(descriptor), _words(descriptor))
    def check(u, v, w):
        gu, gv, gw = group.evaluate(u), group.evaluate(v), group.evaluate(w)
        assert group.evaluate(u + v) == group.multiply(gu, gv)
        assert group.multiply(group.multiply(gu, gv), gw) == group.multiply(gu, group.multiply(gv, gw))
        assert group.is_identity(group.multiply(gu, group.invert(gu)))
        assert group.invert(gu) == group.evaluate(group.alphabet.inverse_word(u))

    check()


# --- balls ---


@pytest.mark.parametrize(
    ("descriptor", "radius", "size"),
    [
        (CyclicZ(), 3, 7),
        (FreeAbelian(), 2, 13),
        (Free(), 2, 17),
        (Free(), 3, 53),
    ],
)
def test_ball_sizes(descriptor, radius, size):
    assert len(ball(descriptor, radius)) == size


def test_ball_witnesses_are_shortest():
    b = ball(CyclicZ(), 3)
    group = build_group(CyclicZ())
    assert b.witness(group.evaluate(("t'", "t'"))) == ("t'", "t'")
    assert b.distance(group.evaluate(("t", "t", "t")).form) == 3
    assert group.evaluate(("t",) * 4) not in b


def test_klein_ball_witness_uses_relation():
    b = ball(KleinBottle(), 3)
    group = build_group(KleinBottle())
    assert len(b.witness(group.evaluate(("a", "b", "a'")))) == 1


def test_ball_rejects_negative_radius():
    with pytest.raises(ParameterError, match="non-negative"):
        ball(CyclicZ(), -1)


# --- errors ---


def test_elements_from_another_group_are_rejected():
    z = build_group(CyclicZ()).evaluate(("t",))
    with pytest.raises(DescriptorMismatchError):
        build_group(KleinBottle()).multiply(z, z)
    with pytest.raises(DescriptorMismatchError):
        is_identity(KleinBottle(), z)


def test_unknown_letter_is_rejected():
    with pytest.raises(RejectedInputError):
        evaluate(KleinBottle(), ("c",))


def test_central_letter_must_be_fresh():
    with pytest.raises(AlphabetError):
        build_group(CrossZ(inner=CyclicZ(letter="z")))


def test_free_by_cyclic_checks_the_inverse_automorphism():
    with pytest.raises(ConstructionError):
        build_group(FreeByCyclic(inverse_images=(("a", "a b"), ("b", "b"))))
    with pytest.raises(ConstructionError):
        build_group(FreeByCyclic(images=(("a", "a s"), ("b", "b"))))


def test_bs_parameter_must_be_nonzero():
    with pytest.raises(ValidationError):
        BS1q(q=0)


def test_descriptors_are_hashable_keys():
    assert build_group(BS1q(q=2)) is build_group(BS1q(q=2))
    assert BS1q(q=2).key() != BS1q(q=3).key()
