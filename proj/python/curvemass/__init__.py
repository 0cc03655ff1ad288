"""Exact zeta functions of curves over finite fields, masses of Bun_G and
the Tsfasman-Vladut asymptotic formulas.

Exact values come back as ``int`` or ``fractions.Fraction``; logarithms as ``float``.
"""

import json as _json

from ._core import (
    BudgetExceeded,
    ConfigError,
    ConvergenceError,
    CurveModel,
    CurvemassError,
    GroupSpec,
    InconsistentCounts,
    InvalidArgument,
    MalformedGroup,
    SingularModel,
    TVData,
    WeilViolation,
    ZetaData,
    builtin_group,
    degree_spectrum,
    dominance_check,
    find_irreducible,
    group_order,
    hn_ss_mass,
    mass_bun,
    rhs_group,
    rhs_pic,
    tv_bound,
    zagier_ss_mass,
    zeta_from_counts,
    zeta_of,
)
from ._core import run as _run


def run(command, config):
    """Run ``zeta``, ``mass`` or ``asymptote`` on a config dict and return the report dict."""
    return _json.loads(_run(command, _json.dumps(config)))


__version__ = "0.1.0"
