"""Positive-cone constructions emitted as machines over group generators."""

from cone_automata.cones.baumslag_solitar import (
    bs_affine_cone,
    bs_affine_relative_cone,
    bs_lex_onecounter,
    l_quot,
)
from cone_automata.cones.composite import (
    bs_amalgam_cross_z,
    bs_amalgam_onecounter,
    embed_cross_z_f2,
    f2_onecounter,
    free_by_cyclic_cross_z,
    free_by_cyclic_onecounter,
    klein_free_cross_z,
    z2_lex,
    zz_cyclic,
)
from cone_automata.cones.embedding import embed_cross_z
from cone_automata.cones.language import TRIVIAL, ConeLanguage, Provenance, RelativeSubgroup, TauData
from cone_automata.cones.lex import cone_union_relative, klein_order, klein_orders, lex_quotient_cone
from cone_automata.cones.quasimorphism import (
    TAU_SETUPS,
    TauSetup,
    onecounter_cone_from_tau,
    pm_automaton,
    positive_balance_counter,
    tau_transducer,
)
from cone_automata.cones.wreath import wreath_cone, wreath_cone_zz, zwrz_cone

__all__ = [
    "TAU_SETUPS",
    "TRIVIAL",
    "ConeLanguage",
    "Provenance",
    "RelativeSubgroup",
    "TauData",
    "TauSetup",
    "bs_affine_cone",
    "bs_affine_relative_cone",
    "bs_amalgam_cross_z",
    "bs_amalgam_onecounter",
    "bs_lex_onecounter",
    "cone_union_relative",
    "embed_cross_z",
    "embed_cross_z_f2",
    "f2_onecounter",
    "free_by_cyclic_cross_z",
    "free_by_cyclic_onecounter",
    "klein_free_cross_z",
    "klein_order",
    "klein_orders",
    "l_quot",
    "lex_quotient_cone",
    "onecounter_cone_from_tau",
    "pm_automaton",
    "positive_balance_counter",
    "tau_transducer",
    "wreath_cone",
    "wreath_cone_zz",
    "z2_lex",
    "zwrz_cone",
    "zz_cyclic",
]
