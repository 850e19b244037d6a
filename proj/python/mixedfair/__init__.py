"""Truthful fair division of mixed divisible and indivisible goods.

Exact-rational mechanisms, fairness predicates and truthfulness audits;
utilities cross the boundary as ``fractions.Fraction``.
"""

from ._mixedfair import (
    Allocation,
    AuditReport,
    Bundle,
    BudgetError,
    Deviation,
    Instance,
    Mechanism2Trace,
    Mechanism3Trace,
    Mode,
    ModeError,
    ParseError,
    PreconditionError,
    ValidationError,
    WaterFillStep,
    WaterFillTrace,
    allocation_dumps,
    allocation_from_assignment,
    allocation_loads,
    assignment_of,
    audit_truthfulness,
    check_water_filling_property,
    instance_dumps,
    instance_loads,
    is_ef,
    is_ef1,
    is_efm_pos,
    is_efm_zero,
    leximin_compare,
    leximin_profile,
    lorenz_dominates,
    mechanism1,
    mechanism2,
    mechanism3,
    mechanism3_naive_multi,
    mnw_tie_allocate,
    nash_welfare,
    potential_phi,
    utility_profile,
    validate_allocation,
    value_of,
    water_fill,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
