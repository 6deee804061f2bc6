"""Brute-force discrete logarithm for enumerable groups.

Exists to show what knowing log_g h would mean, and to check the toy set's
known relation h = g^2. It is deliberately exhaustive and nothing more.
"""

from src.errors import NotFound, OracleAssertionFailure, ParamsMismatch
from src.group import GroupElement, GroupParams, Scalar, generator, power

from .report import OracleReport, require_enumerable


def dlog_bruteforce(base: GroupElement, target: GroupElement, params: GroupParams) -> Scalar:
    """The unique a in [0, q-1] with base^a = target.

    Raises:
        GroupTooLarge: q above the enumeration guard
        NotFound: target is not in the subgroup generated by base
    """
    require_enumerable(params)
    if base.params != params or target.params != params:
        raise ParamsMismatch("elements belong to a different parameter set")
    acc = 1
    for a in range(params.q):
        if acc == target.value:
            return Scalar(a, params.q)
        acc = acc * base.value % params.p
    raise NotFound(f"{target.value} is not a power of {base.value}")


def dlog_exhaustive_check(params: GroupParams) -> OracleReport:
    """dlog(g, g^a) = a for every a in [0, q-1].

    Raises:
        OracleAssertionFailure: first a that does not round-trip
    """
    require_enumerable(params)
    g = generator(params)
    report = OracleReport(name="dlog_exhaustive")
    for a in range(params.q):
        found = dlog_bruteforce(g, power(g, Scalar(a, params.q)), params)
        report.cases += 1
        if found.value != a:
            raise OracleAssertionFailure(report.name, {"a": a, "found": found.value})
    report.details["log_g_h"] = dlog_bruteforce(g, GroupElement(params.h, params), params).value
    return report
