"""Geometric calculus on charts: multivector algebra, connections, derivatives and property checks."""

from ._gcalc import (
    GcalcError,
    Gram,
    Multivector,
    charts,
    check,
    connection,
    dot,
    dual,
    eval,
    gp,
    grade,
    jet,
    maxwell,
    parse,
    pseudoscalar,
    reciprocal_frame,
    reverse,
    trace_rot,
    wedge,
)

__all__ = [
    "GcalcError",
    "Gram",
    "Multivector",
    "charts",
    "check",
    "connection",
    "dot",
    "dual",
    "eval",
    "gp",
    "grade",
    "jet",
    "maxwell",
    "parse",
    "pseudoscalar",
    "reciprocal_frame",
    "reverse",
    "trace_rot",
    "wedge",
]
