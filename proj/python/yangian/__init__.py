"""Normal forms and identity checks in the super Yangian Y(gl(m|n))."""

import json

from ._core import (
    Algebra,
    Element,
    Error,
    ExpressionError,
    InvalidIndex,
    ParseError,
    ResourceLimitExceeded,
    Shape,
    UnknownCheck,
    check_applies,
    checks,
    default_order,
    nf,
    series,
)
from . import _core


def run_check(name, m, n, order=0, convention="plain", eval=True, max_terms=0):
    """Runs one registry check and returns its report as a dict."""
    return json.loads(_core._run_check(name, m, n, order, convention, eval, max_terms))


def run_oracle(which, m, n):
    """Runs the 'rep' or 'rtt' numeric oracle and returns its report as a dict."""
    return json.loads(_core._run_oracle(which, m, n))


__all__ = [
    "Algebra",
    "Element",
    "Error",
    "ExpressionError",
    "InvalidIndex",
    "ParseError",
    "ResourceLimitExceeded",
    "Shape",
    "UnknownCheck",
    "check_applies",
    "checks",
    "default_order",
    "nf",
    "run_check",
    "run_oracle",
    "series",
]
