"""Odd cycle transversals and packings in cubic plane graphs."""

import json

from ._oddplanar import (  # noqa: F401
    BudgetExceeded,
    Error,
    FormatError,
    InvalidMap,
    Map,
    NonSimpleDual,
    NotExtremal,
    automorphism_order,
    disc,
    emit_maps,
    extremal_packing,
    family57,
    goldberg_coxeter,
    min_tjoin,
    min_weight_perfect_matching,
    moat_identities,
    oct,
    parse_maps,
    platonic,
    prism,
    report_json,
    run_cli,
    verify_packing,
)


def analyze(graph, alpha_exact=False, nu=True):
    """Full report for one graph as a dict (same keys as `oddplanar bounds --json`)."""
    return json.loads(report_json(graph, alpha_exact=alpha_exact, nu=nu))

