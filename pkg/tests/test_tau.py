"""Tests for the ordering quasi-morphism and its transducers."""

import pytest

from cone_automata.automata import Alphabet, NfaBuilder, closure
from cone_automata.cones.embedding import output_value
from cone_automata.cones.language import TauData
from cone_automata.cones.quasimorphism import (
    TAU_SETUPS,
    bs_amalgam_tau_setup,
    f2_tau_setup,
    klein_z_tau_setup,
    pm_automaton,
    tau_transducer,
)
from cone_automata.errors import ConstructionError
from cone_automata.groups import ball, build_group, tau_value
from cone_automata.groups.orders import exponent_sign
from cone_automata.verify import check_tau_data
from cone_automata.verify.audit import subgroup_forms


def _tau(setup, *letters):
    return setup.tau(build_group(setup.group).evaluate(letters))


# --- values ---


@pytest.mark.parametrize(
    ("word", "expected"),
    [
        ((), 0),
        (("a",), 1),
        (("a'",), -1),
        (("a", "b"), 3),
        (("b", "a"), 1),
        (("a", "b'"), 1),
        (("b'", "a'"), -3),
        (("a", "a", "b", "a"), 3),
    ],
)
def test_f2_values(word, expected):
    assert _tau(f2_tau_setup(), *word) == expected


def test_amalgam_values():
    setup = bs_amalgam_tau_setup()
    assert _tau(setup, "b") == 1
    assert _tau(setup, "a") == 0
    assert _tau(setup, "b", "c") == 3
    assert _tau(setup, "c", "b") == 1
    assert _tau(setup, "a", "b", "a'") == 1


def test_klein_z_values():
    setup = klein_z_tau_setup()
    assert _tau(setup, "a") == 1
    assert _tau(setup, "c'") == -1
    assert _tau(setup, "a", "c") == 3


@pytest.mark.parametrize("name", sorted(TAU_SETUPS))
def test_tau_is_odd_and_antisymmetric(name):
    setup = TAU_SETUPS[name]()
    group = build_group(setup.group)
    for g in ball(setup.group, 3).elements():
        value = setup.tau(g)
        assert setup.tau(group.invert(g)) == -value
        if setup.relative_to.is_trivial and not group.is_identity(g):
            assert value % 2 == 1


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(TAU_SETUPS))
def test_tau_is_an_ordering_quasi_morphism_on_the_ball(name):
    setup = TAU_SETUPS[name]()
    group = build_group(setup.group)
    elements = ball(setup.group, 4).elements()
    kernel = subgroup_forms(group, setup.relative_to.generators, 4)
    values = {g.form: setup.tau(g) for g in elements}
    for g in elements:
        assert setup.tau(group.invert(g)) == -values[g.form], group.format(g)
        assert (values[g.form] == 0) == (g.form in kernel), group.format(g)
    for g in elements:
        for h in elements:
            product_inverse = group.invert(group.multiply(g, h))
            assert values[g.form] + values[h.form] + setup.tau(product_inverse) <= 1, (group.format(g), group.format(h))


def test_missing_sign_raises():
    setup = f2_tau_setup()
    group = build_group(setup.group)
    with pytest.raises(ConstructionError):
        tau_value(group, (lambda g: 0, exponent_sign), (0, 1), group.evaluate(("a",)))


# --- transducers ---


@pytest.mark.parametrize("word", [("b",), ("b'",), ("b", "c"), ("c", "b"), ("c'", "b", "c")])
def test_amalgam_transducer_outputs_tau(word):
    setup = bs_amalgam_tau_setup()
    outputs = setup.transducer().outputs(word)
    assert {output_value(output) for output in outputs} == {_tau(setup, *word)}


def test_transducer_needs_two_factors():
    setup = f2_tau_setup()
    with pytest.raises(ConstructionError):
        tau_transducer(TauData(factors=setup.data.factors[:1], index_order=(0,)))


def test_tau_data_rejects_bad_index_order():
    setup = f2_tau_setup()
    with pytest.raises(ConstructionError):
        TauData(factors=setup.data.factors, index_order=(0, 0))


# --- plus/minus data ---


def test_pm_automaton_signs():
    setup = f2_tau_setup()
    factor = setup.data.factors[0]
    assert factor.sign_of(("a", "a")) == 1
    assert factor.sign_of(("a'",)) == -1


@pytest.mark.parametrize("name", sorted(TAU_SETUPS))
def test_setup_data_is_consistent(name):
    setup = TAU_SETUPS[name]()
    assert check_tau_data(setup.data, setup.group, 6).passed


def test_inconsistent_factor_is_reported():
    alphabet = Alphabet.paired("a")
    builder = NfaBuilder(alphabet)
    start = builder.add_state()
    one = builder.add_state()
    two = builder.add_state()
    builder.set_accepting(one, sign=1)
    builder.set_accepting(two, sign=-1)
    builder.add_edge(start, "a", one)
    builder.add_edge(one, "a", two)
    bad = builder.build(start, signed=True)
    good = pm_automaton(closure.letter_plus(Alphabet.paired("b"), "b"))
    result = check_tau_data(TauData(factors=(bad, good), index_order=(0, 1)), f2_tau_setup().group, 4)
    assert not result.passed
    assert result.name == "tau_data"
