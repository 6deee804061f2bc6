"""The two-phase handshake as an immutable state machine.

Secrecy amplification: each side publishes y = g^r * h^pass and computes
km = (y_peer * h^-pass)^r. Verification: the server sends
v1 = KH_km(0x00 || y1 || y2), the client sends v2 = KH_km(0x01 || y1 || y2),
each side checks the other's. KH is HMAC-SHA-256 keyed with encode(km).

Every operation takes a SessionState and returns its successor; nothing is
mutated in place. A failing operation raises, and the raised error's
``state`` is the Failed successor.

Usage:
    state, y1 = session_start(Role.CLIENT, params, pass_c, rng)
    send(y1)
    state = session_absorb(state, receive_y2())
    state = check_verifier(state, receive_v1())
    send(make_verifier(state))
    key = derive_session_key(state)
"""

import hashlib
import hmac
from dataclasses import dataclass, field, replace
from enum import Enum

from src.errors import (
    GroupError,
    IdentityKeyingMaterial,
    ParamsMismatch,
    RngFailure,
    VerificationFailed,
    WrongPhase,
)
from src.group import (
    GroupElement,
    GroupParams,
    RandomSource,
    Scalar,
    encode_element,
    generator,
    mul,
    power,
    random_scalar,
    second_generator,
    validate_element,
)

from .password import PasswordExponent

TAG_SERVER = b"\x00"
TAG_CLIENT = b"\x01"
TAG_SESSION_KEY = b"\x02"

VERIFIER_SIZE = 32
SESSION_KEY_SIZE = 32

MAX_REDRAWS = 64


class Role(str, Enum):
    """Client owns y1 and v2; server owns y2 and v1."""

    CLIENT = "client"
    SERVER = "server"

    @property
    def tag(self) -> bytes:
        return TAG_CLIENT if self is Role.CLIENT else TAG_SERVER

    @property
    def peer(self) -> "Role":
        return Role.SERVER if self is Role.CLIENT else Role.CLIENT


class Phase(str, Enum):
    """Phases only move forward; FAILED is terminal."""

    STARTED = "started"
    AMPLIFIED = "amplified"
    CONFIRMED_PEER = "confirmed_peer"
    FAILED = "failed"


@dataclass(frozen=True)
class KeyingMaterial:
    """The shared element g^(r1*r2); never the identity."""

    value: GroupElement = field(repr=False)

    def __post_init__(self) -> None:
        if self.value.value == 1:
            raise IdentityKeyingMaterial("keying material is the identity element")

    @property
    def key_bytes(self) -> bytes:
        return encode_element(self.value)


@dataclass(frozen=True)
class VerifierValue:
    tag: bytes

    def __post_init__(self) -> None:
        if len(self.tag) != VERIFIER_SIZE:
            raise VerificationFailed(f"verifier must be {VERIFIER_SIZE} bytes")


@dataclass(frozen=True)
class SessionState:
    """One entity's progress through a handshake."""

    role: Role
    params: GroupParams = field(repr=False)
    password: PasswordExponent | None = field(repr=False)
    r: Scalar | None = field(repr=False)
    own_y: GroupElement = field(repr=False)
    peer_y: GroupElement | None = field(default=None, repr=False)
    km: KeyingMaterial | None = field(default=None, repr=False)
    phase: Phase = Phase.STARTED

    @property
    def y1(self) -> GroupElement | None:
        return self.own_y if self.role is Role.CLIENT else self.peer_y

    @property
    def y2(self) -> GroupElement | None:
        return self.peer_y if self.role is Role.CLIENT else self.own_y

    @property
    def transcript(self) -> bytes:
        """encode(y1) || encode(y2), identical on both sides whatever the arrival order."""
        y1, y2 = self.y1, self.y2
        if y1 is None or y2 is None:
            raise WrongPhase("transcript is incomplete")
        return encode_element(y1) + encode_element(y2)


def keyed_hash(key: bytes, message: bytes) -> bytes:
    """KH_k(m) = HMAC-SHA-256."""
    return hmac.new(key, message, hashlib.sha256).digest()


def masked_element(params: GroupParams, r: Scalar, password: PasswordExponent) -> GroupElement:
    """g^r * h^pass."""
    return mul(power(generator(params), r), power(second_generator(params), password.value))


def compute_keying_material(
    params: GroupParams,
    r: Scalar,
    password: PasswordExponent,
    peer: GroupElement,
) -> GroupElement:
    """(peer * h^(q-pass))^r, without the identity check."""
    unmasked = mul(peer, power(second_generator(params), password.value.negate()))
    return power(unmasked, r)


def _failed(state: SessionState) -> SessionState:
    return replace(state, phase=Phase.FAILED, r=None, km=None)


def _require(state: SessionState, *phases: Phase) -> None:
    if state.phase not in phases:
        allowed = ", ".join(p.value for p in phases)
        raise WrongPhase(f"operation requires phase {allowed}, session is {state.phase.value}")


def session_start(
    role: Role,
    params: GroupParams,
    password: PasswordExponent,
    rng: RandomSource,
) -> tuple[SessionState, GroupElement]:
    """Draw r and publish g^r * h^pass; needs nothing from the peer.

    An r that masks to the identity is redrawn; honest peers never send y = 1.

    Raises:
        RngFailure: the random source failed
        ParamsMismatch: the password exponent was derived for other parameters
    """
    if password.value.q != params.q or password.context != params.name:
        raise ParamsMismatch("password exponent was derived for a different parameter set")
    for _ in range(MAX_REDRAWS):
        r = random_scalar(rng, params.q)
        own_y = masked_element(params, r, password)
        if own_y.value != 1:
            state = SessionState(role=role, params=params, password=password, r=r, own_y=own_y)
            return state, own_y
    raise RngFailure(f"{MAX_REDRAWS} draws all masked to the identity")


def session_absorb(state: SessionState, peer_raw: int) -> SessionState:
    """Validate the peer's y, compute km, erase r.

    Raises:
        WrongPhase: session is not in STARTED
        OutOfRange, NotInSubgroup, IdentityElement: invalid peer element (session fails)
        IdentityKeyingMaterial: km came out as the identity (session fails)
    """
    _require(state, Phase.STARTED)
    assert state.r is not None and state.password is not None

    try:
        peer = validate_element(peer_raw, state.params)
    except GroupError as e:
        e.state = _failed(state)
        raise

    km = compute_keying_material(state.params, state.r, state.password, peer)
    if km.value == 1:
        raise IdentityKeyingMaterial("keying material is the identity element", _failed(state))

    return replace(
        state,
        peer_y=peer,
        km=KeyingMaterial(km),
        r=None,
        phase=Phase.AMPLIFIED,
    )


def _verifier(state: SessionState, role: Role) -> bytes:
    assert state.km is not None
    return keyed_hash(state.km.key_bytes, role.tag + state.transcript)


def make_verifier(state: SessionState) -> VerifierValue:
    """v1 for the server, v2 for the client.

    Raises:
        WrongPhase: km has not been computed, or the session failed
    """
    _require(state, Phase.AMPLIFIED, Phase.CONFIRMED_PEER)
    return VerifierValue(_verifier(state, state.role))


def check_verifier(state: SessionState, received: VerifierValue | bytes) -> SessionState:
    """Compare the peer's verifier in constant time.

    Raises:
        WrongPhase: session is not in AMPLIFIED
        VerificationFailed: mismatch (session fails)
    """
    _require(state, Phase.AMPLIFIED)
    tag = received.tag if isinstance(received, VerifierValue) else received
    expected = _verifier(state, state.role.peer)
    if not hmac.compare_digest(expected, tag):
        raise VerificationFailed("peer verifier does not match", _failed(state))
    return replace(state, phase=Phase.CONFIRMED_PEER)


def derive_session_key(state: SessionState) -> bytes:
    """SK = KH_km(0x02 || y1 || y2), released only after the peer is confirmed.

    Raises:
        WrongPhase: peer not confirmed yet
    """
    _require(state, Phase.CONFIRMED_PEER)
    assert state.km is not None
    return keyed_hash(state.km.key_bytes, TAG_SESSION_KEY + state.transcript)


def session_end(state: SessionState) -> SessionState:
    """Drop the password exponent and any leftover ephemeral secret."""
    return replace(state, password=None, r=None)


def key_fingerprint(key: bytes) -> str:
    """First 8 hex characters of SHA-256(key); safe to log."""
    return hashlib.sha256(key).hexdigest()[:8]
