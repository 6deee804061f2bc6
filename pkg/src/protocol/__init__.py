"""Handshake state machine, password mapping and generator negotiation."""

from .negotiate import (
    COMMITMENT_SIZE,
    DS_COMMIT,
    ClientNegotiation,
    NegotiationTranscript,
    ServerNegotiation,
    commitment_for,
    neg_client_start,
    neg_server_respond,
    neg_server_verify,
)
from .password import DS_PASS, PasswordExponent, password_to_exponent
from .session import (
    SESSION_KEY_SIZE,
    TAG_CLIENT,
    TAG_SERVER,
    TAG_SESSION_KEY,
    VERIFIER_SIZE,
    KeyingMaterial,
    Phase,
    Role,
    SessionState,
    VerifierValue,
    check_verifier,
    compute_keying_material,
    derive_session_key,
    key_fingerprint,
    keyed_hash,
    make_verifier,
    masked_element,
    session_absorb,
    session_end,
    session_start,
)

__all__ = [
    # Password
    "DS_PASS",
    "PasswordExponent",
    "password_to_exponent",
    # Session
    "SESSION_KEY_SIZE",
    "TAG_CLIENT",
    "TAG_SERVER",
    "TAG_SESSION_KEY",
    "VERIFIER_SIZE",
    "KeyingMaterial",
    "Phase",
    "Role",
    "SessionState",
    "VerifierValue",
    "check_verifier",
    "compute_keying_material",
    "derive_session_key",
    "key_fingerprint",
    "keyed_hash",
    "make_verifier",
    "masked_element",
    "session_absorb",
    "session_end",
    "session_start",
    # Negotiation
    "COMMITMENT_SIZE",
    "DS_COMMIT",
    "ClientNegotiation",
    "NegotiationTranscript",
    "ServerNegotiation",
    "commitment_for",
    "neg_client_start",
    "neg_server_respond",
    "neg_server_verify",
]
