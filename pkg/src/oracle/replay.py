"""Replay and tampering experiments against the session state machine.

Both run the two roles in-process on the pure session operations, with the
ephemeral exponents forced through ScriptedSource so that every case is
reproducible from a seed.
"""

from collections.abc import Callable
from dataclasses import dataclass

from src.errors import OracleAssertionFailure, PakeError
from src.group import GroupElement, GroupParams, RandomSource, ScriptedSource, encode_element, random_scalar
from src.protocol import (
    PasswordExponent,
    Role,
    VerifierValue,
    check_verifier,
    make_verifier,
    masked_element,
    password_to_exponent,
    session_absorb,
    session_start,
)

from .report import OracleReport

EXPERIMENT_PASSWORD = b"oracle-shared-password"


@dataclass(frozen=True)
class RecordedSession:
    """What an eavesdropper keeps from an honest run, plus the server's r2."""

    y1: GroupElement
    y2: GroupElement
    v1: bytes
    v2: bytes
    r2: int


def _honest_session(
    params: GroupParams, password: PasswordExponent, r1: int, r2: int
) -> RecordedSession:
    client, y1 = session_start(Role.CLIENT, params, password, ScriptedSource([r1]))
    server, y2 = session_start(Role.SERVER, params, password, ScriptedSource([r2]))
    server = session_absorb(server, y1.value)
    client = session_absorb(client, y2.value)
    v1 = make_verifier(server).tag
    client = check_verifier(client, v1)
    v2 = make_verifier(client).tag
    check_verifier(server, v2)
    return RecordedSession(y1=y1, y2=y2, v1=v1, v2=v2, r2=r2)


def _server_accepts(
    params: GroupParams, password: PasswordExponent, r2: int, y1: GroupElement, v2: bytes
) -> bool:
    """A fresh server session drawing r2, fed a recorded y1 and v2."""
    server, _ = session_start(Role.SERVER, params, password, ScriptedSource([r2]))
    try:
        server = session_absorb(server, y1.value)
        check_verifier(server, v2)
    except PakeError:
        return False
    return True


def _usable_scalar(rng: RandomSource, params: GroupParams, password: PasswordExponent) -> int:
    """A scalar session_start would keep on its first draw."""
    while True:
        r = random_scalar(rng, params.q)
        if masked_element(params, r, password).value != 1:
            return r.value


def _fresh_r2(
    rng: RandomSource, params: GroupParams, password: PasswordExponent, recorded: int
) -> int:
    while True:
        candidate = _usable_scalar(rng, params, password)
        if candidate != recorded:
            return candidate


def replay_experiment(params: GroupParams, trials: int, rng: RandomSource) -> OracleReport:
    """Replay a recorded (y1, v2) against fresh server sessions.

    Every trial draws r2 different from the recorded one and must reject.
    Two controls run alongside: the same r2 must accept (the replay succeeds
    exactly when the challenge repeats) and v1 reflected as v2 must reject.

    Raises:
        OracleAssertionFailure: a fresh-r2 replay was accepted, or a control
            did not behave as stated
    """
    password = password_to_exponent(EXPERIMENT_PASSWORD, params)
    r1 = _usable_scalar(rng, params, password)
    r2 = _usable_scalar(rng, params, password)
    recorded = _honest_session(params, password, r1, r2)
    report = OracleReport(name="replay")

    for trial in range(trials):
        fresh = _fresh_r2(rng, params, password, recorded.r2)
        report.cases += 1
        if _server_accepts(params, password, fresh, recorded.y1, recorded.v2):
            raise OracleAssertionFailure(
                report.name, {"trial": trial, "r2_recorded": recorded.r2, "r2_fresh": fresh}
            )

    control = _server_accepts(params, password, recorded.r2, recorded.y1, recorded.v2)
    if not control:
        raise OracleAssertionFailure("replay_control", {"r2": recorded.r2})
    reflected = _server_accepts(params, password, recorded.r2, recorded.y1, recorded.v1)
    if reflected:
        raise OracleAssertionFailure("replay_reflection", {"r2": recorded.r2})

    report.details.update(acceptances=0, control_accepted=control, reflection_accepted=reflected)
    return report


def _flip(data: bytes, bit: int) -> bytes:
    out = bytearray(data)
    out[bit // 8] ^= 0x80 >> (bit % 8)
    return bytes(out)


Mutation = Callable[[bytes], bytes]


def _identity(data: bytes) -> bytes:
    return data


def _tampered_run(
    params: GroupParams,
    password: PasswordExponent,
    r1: int,
    r2: int,
    mutate: dict[str, Mutation],
) -> bool:
    """True iff both sides confirm despite the mutation in flight."""
    try:
        client, y1 = session_start(Role.CLIENT, params, password, ScriptedSource([r1]))
        server, y2 = session_start(Role.SERVER, params, password, ScriptedSource([r2]))
        y1_wire = mutate.get("y1", _identity)(encode_element(y1))
        y2_wire = mutate.get("y2", _identity)(encode_element(y2))
        server = session_absorb(server, int.from_bytes(y1_wire, "big"))
        client = session_absorb(client, int.from_bytes(y2_wire, "big"))
        v1 = mutate.get("v1", _identity)(make_verifier(server).tag)
        client = check_verifier(client, VerifierValue(v1))
        v2 = mutate.get("v2", _identity)(make_verifier(client).tag)
        check_verifier(server, VerifierValue(v2))
    except PakeError:
        return False
    return True


def tamper_suite(params: GroupParams, rng: RandomSource) -> OracleReport:
    """Flip every single bit of y1, y2, v1 and v2 in turn; each flip must abort.

    Raises:
        OracleAssertionFailure: a flipped message was accepted, or the
            untampered baseline failed
    """
    password = password_to_exponent(EXPERIMENT_PASSWORD, params)
    r1 = _usable_scalar(rng, params, password)
    r2 = _usable_scalar(rng, params, password)
    if not _tampered_run(params, password, r1, r2, {}):
        raise OracleAssertionFailure("tamper_baseline", {"r1": r1, "r2": r2})

    sizes = {"y1": params.width, "y2": params.width, "v1": 32, "v2": 32}
    report = OracleReport(name="tamper")
    for message, size in sizes.items():
        for bit in range(8 * size):
            report.cases += 1
            accepted = _tampered_run(
                params, password, r1, r2, {message: lambda data, b=bit: _flip(data, b)}
            )
            if accepted:
                raise OracleAssertionFailure(report.name, {"message": message, "bit": bit})
    return report
