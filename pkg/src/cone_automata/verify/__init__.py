"""Brute-force verification of cone languages on metric balls."""

from cone_automata.verify.audit import (
    AuditConfig,
    PropertyResult,
    VerificationReport,
    Violation,
    ViolationKind,
    audit_cone,
    collect_positive,
    positive_witnesses,
)
from cone_automata.verify.diagnostics import (
    OracleAgreement,
    check_balancing,
    check_coarse_monotone,
    check_tau_data,
    compare_with_oracle,
    evaluation_equal,
)
from cone_automata.verify.oracles import Oracle, Verdict

__all__ = [
    "AuditConfig",
    "Oracle",
    "OracleAgreement",
    "PropertyResult",
    "Verdict",
    "VerificationReport",
    "Violation",
    "ViolationKind",
    "audit_cone",
    "check_balancing",
    "check_coarse_monotone",
    "check_tau_data",
    "collect_positive",
    "compare_with_oracle",
    "evaluation_equal",
    "positive_witnesses",
]
