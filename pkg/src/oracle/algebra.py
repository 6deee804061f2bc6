"""Exhaustive checks of the handshake algebra over a toy group.

Each check enumerates its whole case space and raises OracleAssertionFailure
with the first counterexample it meets.
"""

from src.errors import OracleAssertionFailure
from src.group import GroupElement, GroupParams, Scalar, generator, power, second_generator
from src.protocol import PasswordExponent, compute_keying_material, masked_element

from .report import OracleReport, require_enumerable


def _exponent(value: int, params: GroupParams) -> PasswordExponent:
    return PasswordExponent(value=Scalar(value, params.q), context=params.name)


def _scalars(params: GroupParams) -> list[Scalar]:
    return [Scalar(v, params.q) for v in range(1, params.q)]


def _keying_pair(
    params: GroupParams,
    r1: Scalar,
    r2: Scalar,
    pass_c: PasswordExponent,
    pass_s: PasswordExponent,
) -> tuple[GroupElement, GroupElement]:
    y1 = masked_element(params, r1, pass_c)
    y2 = masked_element(params, r2, pass_s)
    km_c = compute_keying_material(params, r1, pass_c, y2)
    km_s = compute_keying_material(params, r2, pass_s, y1)
    return km_c, km_s


def exhaustive_km_check(params: GroupParams) -> OracleReport:
    """Equal passwords always agree on km = g^(r1*r2 mod q).

    Raises:
        GroupTooLarge: q above the enumeration guard
        OracleAssertionFailure: a (r1, r2, pass) where they do not
    """
    require_enumerable(params)
    g = generator(params)
    report = OracleReport(name="exhaustive_km")
    scalars = _scalars(params)
    for pw in range(1, params.q):
        password = _exponent(pw, params)
        for r1 in scalars:
            for r2 in scalars:
                km_c, km_s = _keying_pair(params, r1, r2, password, password)
                expected = power(g, Scalar(r1.value * r2.value % params.q, params.q))
                report.cases += 1
                if not km_c == km_s == expected:
                    raise OracleAssertionFailure(
                        report.name,
                        {
                            "r1": r1.value,
                            "r2": r2.value,
                            "pass": pw,
                            "km_c": km_c.value,
                            "km_s": km_s.value,
                            "expected": expected.value,
                        },
                    )
    return report


def mismatch_anomaly_census(params: GroupParams) -> OracleReport:
    """Different passwords collide exactly when r1 + r2 = 0 (mod q).

    km_c / km_s = h^((r1 + r2)(pass_s - pass_c)), so every collision is one of
    those; ``anomalies`` counts them.

    Raises:
        GroupTooLarge: q above the enumeration guard
        OracleAssertionFailure: a collision off that line, or a miss on it
    """
    require_enumerable(params)
    report = OracleReport(name="mismatch_census")
    scalars = _scalars(params)
    exponents = [_exponent(v, params) for v in range(1, params.q)]
    for pass_c in exponents:
        for pass_s in exponents:
            if pass_c == pass_s:
                continue
            for r1 in scalars:
                for r2 in scalars:
                    km_c, km_s = _keying_pair(params, r1, r2, pass_c, pass_s)
                    collided = km_c == km_s
                    predicted = (r1.value + r2.value) % params.q == 0
                    report.cases += 1
                    if collided != predicted:
                        raise OracleAssertionFailure(
                            report.name,
                            {
                                "pass_c": pass_c.value.value,
                                "pass_s": pass_s.value.value,
                                "r1": r1.value,
                                "r2": r2.value,
                                "km_c": km_c.value,
                                "km_s": km_s.value,
                            },
                        )
                    if collided:
                        report.anomalies += 1
    report.details["collision_rule"] = "r1 + r2 = 0 (mod q)"
    return report


def masking_bijection_check(params: GroupParams) -> OracleReport:
    """For each pass, r -> g^r * h^pass over [1, q-1] hits every subgroup
    element except h^pass, each exactly once.

    Raises:
        GroupTooLarge: q above the enumeration guard
        OracleAssertionFailure: an image that is not the subgroup minus h^pass
    """
    require_enumerable(params)
    g = generator(params)
    h = second_generator(params)
    subgroup = {power(g, Scalar(k, params.q)).value for k in range(params.q)}
    scalars = _scalars(params)
    report = OracleReport(name="masking_bijection")
    excluded: dict[int, int] = {}

    for pw in range(1, params.q):
        password = _exponent(pw, params)
        image = [masked_element(params, r, password).value for r in scalars]
        missing = power(h, password.value).value
        report.cases += 1
        if len(set(image)) != params.q - 1 or set(image) != subgroup - {missing}:
            raise OracleAssertionFailure(
                report.name,
                {"pass": pw, "image_size": len(set(image)), "expected_missing": missing},
            )
        excluded[pw] = missing

    report.details["excluded"] = excluded
    return report
