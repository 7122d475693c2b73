"""Cones from ordering quasi-morphisms on free products and amalgams.

A quasi-morphism ``tau`` is computed by a transducer whose outputs over
``{t, t^-1}`` evaluate to ``tau`` of the input; pulling back the one-counter
language ``#t > #t^-1`` gives the relative cone ``{tau > 0}``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from cone_automata.automata import closure
from cone_automata.automata.letters import Alphabet
from cone_automata.automata.nfa import Nfa, NfaBuilder
from cone_automata.automata.onecounter import CounterBuilder, OneCounterAutomaton, ZeroFlag
from cone_automata.automata.transducer import Transducer, TransducerBuilder, transducer_inverse_image_oc
from cone_automata.cones.baumslag_solitar import A_SUBGROUP, affine_cone_machine
from cone_automata.cones.language import TRIVIAL, ConeLanguage, Provenance, RelativeSubgroup, TauData
from cone_automata.cones.lex import klein_order
from cone_automata.errors import ConstructionError
from cone_automata.groups import build_group
from cone_automata.groups.base import GroupElement
from cone_automata.groups.descriptors import BSAmalgam, CyclicZ, FreeProduct, GroupDescriptor, KleinBottle
from cone_automata.groups.orders import SignFunction, bs_fiber_sign, exponent_sign, klein_sign
from cone_automata.groups.tau import tau_value

logger = logging.getLogger("cone-automata.cones")

COUNTER_LETTER = "t"
COUNTER_ALPHABET = Alphabet.paired(COUNTER_LETTER)


def positive_balance_counter() -> OneCounterAutomaton:
    """``{w over {t, t^-1} : #t(w) > #t^-1(w)}``.

    State 0 holds a surplus of ``t`` in the counter, state 1 a surplus of
    ``t^-1``; state 2 re-enters 0 or 1 after a ``t`` cancels the last
    ``t^-1``, and state 3 accepts a strictly positive surplus.
    """
    t, t_inv = COUNTER_LETTER, COUNTER_ALPHABET.inverse(COUNTER_LETTER)
    builder = CounterBuilder(COUNTER_ALPHABET)
    surplus = builder.add_state()
    deficit = builder.add_state()
    settle = builder.add_state()
    accept = builder.add_state(accepting=True)
    builder.add_edge(surplus, t, surplus, delta=1)
    builder.add_edge(surplus, t_inv, surplus, delta=-1, flag=ZeroFlag.POSITIVE)
    builder.add_edge(surplus, t_inv, deficit, delta=1, flag=ZeroFlag.ZERO)
    builder.add_edge(surplus, None, accept, flag=ZeroFlag.POSITIVE)
    builder.add_edge(deficit, t_inv, deficit, delta=1)
    builder.add_edge(deficit, t, settle, delta=-1, flag=ZeroFlag.POSITIVE)
    builder.add_edge(settle, None, surplus, flag=ZeroFlag.ZERO)
    builder.add_edge(settle, None, deficit, flag=ZeroFlag.POSITIVE)
    return builder.build(surplus)


# =============================================================================
# Plus/minus automata
# =============================================================================


def pm_automaton(l_p: Nfa) -> Nfa:
    """Glue deterministic machines for ``L_P`` and its formal inverse at the start.

    Plus-accepting states recognise ``L_P``, minus-accepting states its
    formal inverse.
    """
    l_p.alphabet.require_paired()
    plus = closure.trim(closure.determinize(l_p))
    minus = closure.trim(closure.determinize(closure.formal_inverse(l_p)))
    if plus.initial in plus.accepting or minus.initial in minus.accepting:
        raise ConstructionError("a cone language must not contain the empty word")
    builder = NfaBuilder(l_p.alphabet)
    start = builder.add_state()
    for side, sign in ((plus, 1), (minus, -1)):
        offset = builder.copy_machine(side)
        for state in side.accepting:
            builder.set_accepting(state + offset, sign=sign)
        for src, letter, dst in side.edges:
            if src == side.initial:
                builder.add_edge(start, letter, dst + offset)
    return closure.trim(builder.build(start, signed=True))


# =============================================================================
# Transducer
# =============================================================================


def tau_transducer(data: TauData) -> Transducer:
    """Transducer whose outputs evaluate to ``tau`` of the input.

    The start state moves by ε into every factor and into the final state
    ``f``. Leaving a plus (minus) state of factor ``i`` for factor ``j``
    outputs ``t t`` when ``i < j`` (``t^-1 t^-1`` when ``i > j``), otherwise
    nothing; leaving it for ``f`` outputs ``t`` (``t^-1``). ``f`` loops on
    the letters of the amalgamated subgroup.
    """
    if len(data.factors) < 2:
        raise ConstructionError("the quasi-morphism transducer needs at least two factors")
    factors = [closure.remove_epsilon(factor) for factor in data.factors]
    input_alphabet = data.c_alphabet
    for factor in factors:
        input_alphabet = input_alphabet.union(factor.alphabet)
    t, t_inv = COUNTER_LETTER, COUNTER_ALPHABET.inverse(COUNTER_LETTER)
    rank = {factor: position for position, factor in enumerate(data.index_order)}

    builder = TransducerBuilder(input_alphabet, COUNTER_ALPHABET)
    start = builder.add_state()
    offsets: list[int] = []
    for factor in factors:
        offsets.append(builder.num_states)
        builder.num_states += factor.num_states
        for src, letter, dst in factor.edges:
            builder.add_edge(src + offsets[-1], letter, dst + offsets[-1])
    final = builder.add_state(accepting=True)
    builder.add_edge(start, None, final)

    for i, factor in enumerate(factors):
        assert factor.sign is not None
        builder.add_edge(start, None, factor.initial + offsets[i])
        for state in sorted(factor.sign.plus):
            for j, other in enumerate(factors):
                if j != i:
                    jump = (t, t) if rank[i] < rank[j] else ()
                    builder.add_edge(state + offsets[i], None, other.initial + offsets[j], jump)
            builder.add_edge(state + offsets[i], None, final, (t,))
        for state in sorted(factor.sign.minus):
            for j, other in enumerate(factors):
                if j != i:
                    drop = (t_inv, t_inv) if rank[i] > rank[j] else ()
                    builder.add_edge(state + offsets[i], None, other.initial + offsets[j], drop)
            builder.add_edge(state + offsets[i], None, final, (t_inv,))
    for letter in data.c_alphabet.ids:
        builder.add_edge(final, letter, final)
    transducer = builder.build(start)
    logger.debug("tau transducer: %d states, %d edges", transducer.num_states, len(transducer.edges))
    return transducer


def onecounter_cone_from_tau(
    t: Transducer,
    *,
    group: GroupDescriptor,
    relative_to: RelativeSubgroup = TRIVIAL,
    name: str = "onecounter_cone_from_tau",
    params: dict[str, Any] | None = None,
) -> ConeLanguage:
    """``{tau > 0}`` as the preimage of the positive-balance counter language."""
    machine = transducer_inverse_image_oc(t, positive_balance_counter())
    return ConeLanguage(machine, group, Provenance(construction=name, params=params or {}), relative_to)


# =============================================================================
# Quasi-morphism setups
# =============================================================================


@dataclass(frozen=True)
class TauSetup:
    """A free product or amalgam with factor orders and the matching ``TauData``.

    ``kernel_ray`` names the generator whose positive powers complete the
    relative cone ``{tau > 0}`` to an absolute one.
    """

    name: str
    group: GroupDescriptor
    data: TauData
    orders: tuple[SignFunction, ...]
    relative_to: RelativeSubgroup = TRIVIAL
    kernel_ray: str | None = None

    def tau(self, g: GroupElement) -> int:
        return tau_value(build_group(self.group), self.orders, self.data.index_order, g)  # type: ignore[arg-type]

    def transducer(self) -> Transducer:
        return tau_transducer(self.data)


def _ray(letter: str) -> Nfa:
    return closure.letter_plus(Alphabet.paired(letter), letter)


def f2_tau_setup() -> TauSetup:
    """``F2 = <a> * <b>`` with ``<a>`` before ``<b>``, both ordered by exponent."""
    return TauSetup(
        name="f2",
        group=FreeProduct(factors=(CyclicZ(letter="a"), CyclicZ(letter="b"))),
        data=TauData(factors=(pm_automaton(_ray("a")), pm_automaton(_ray("b"))), index_order=(0, 1)),
        orders=(exponent_sign, exponent_sign),
    )


def klein_z_tau_setup() -> TauSetup:
    """``K * <c>`` with the ``(+, +)`` Klein order on the first factor."""
    return TauSetup(
        name="klein_z",
        group=FreeProduct(factors=(KleinBottle(), CyclicZ(letter="c"))),
        data=TauData(
            factors=(pm_automaton(klein_order(1, 1).machine), pm_automaton(_ray("c"))),
            index_order=(0, 1),
        ),
        orders=(klein_sign(1, 1), exponent_sign),
    )


def bs_amalgam_tau_setup(m: int = 2, n: int = 3) -> TauSetup:
    """``BS(1, m) *_<a> BS(1, n)`` with both factors ordered by ``g(0) > 0`` relative to ``<a>``."""
    if m < 2 or n < 2:
        raise ConstructionError(f"the amalgam setup needs m, n >= 2, got m={m}, n={n}")
    return TauSetup(
        name="bs_amalgam",
        group=BSAmalgam(m=m, n=n),
        data=TauData(
            factors=(
                pm_automaton(affine_cone_machine(include_a_ray=False, fiber="b")),
                pm_automaton(affine_cone_machine(include_a_ray=False, fiber="c")),
            ),
            index_order=(0, 1),
            c_alphabet=Alphabet.paired("a"),
        ),
        orders=(bs_fiber_sign, bs_fiber_sign),
        relative_to=A_SUBGROUP,
        kernel_ray="a",
    )


TAU_SETUPS = {
    "f2": f2_tau_setup,
    "klein_z": klein_z_tau_setup,
    "bs_amalgam": bs_amalgam_tau_setup,
}
