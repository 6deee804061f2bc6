"""Commit-reveal negotiation of the generator pair (g, h) from a base generator g_b.

The client picks g = g_b^s1 and sends SHA-256(DS_COMMIT || encode(g)); only then
does the server pick h = g_b^s2; finally the client reveals g. The client is
bound to g before h exists, so neither side chooses its generator knowing the
other's. The server does not commit to h.
"""

import hashlib
import hmac
from dataclasses import dataclass
from enum import Enum

from src.errors import CommitmentMismatch, GeneratorsEqual, WrongPhase
from src.group import (
    GroupElement,
    GroupParams,
    RandomSource,
    base_generator,
    encode_element,
    power,
    random_scalar,
    validate_element,
)

DS_COMMIT = b"\x63"
COMMITMENT_SIZE = 32


@dataclass(frozen=True)
class NegotiationTranscript:
    g_b: GroupElement
    commitment: bytes
    h: GroupElement
    g: GroupElement


def commitment_for(g: GroupElement) -> bytes:
    return hashlib.sha256(DS_COMMIT + encode_element(g)).digest()


def neg_client_start(g_b: GroupElement, rng: RandomSource) -> tuple[GroupElement, bytes]:
    """Pick g = g_b^s1 and commit to it. s1 is not kept."""
    s1 = random_scalar(rng, g_b.params.q)
    g = power(g_b, s1)
    return g, commitment_for(g)


def neg_server_respond(commitment: bytes, g_b: GroupElement, rng: RandomSource) -> GroupElement:
    """Pick h = g_b^s2; requires the client's commitment first."""
    if len(commitment) != COMMITMENT_SIZE:
        raise CommitmentMismatch(f"commitment must be {COMMITMENT_SIZE} bytes")
    s2 = random_scalar(rng, g_b.params.q)
    return power(g_b, s2)


def neg_server_verify(commitment: bytes, revealed_g: int, h: GroupElement) -> GroupParams:
    """Open the commitment and return the negotiated parameters.

    p and q are inherited from h's (already validated) parameter set.

    Raises:
        CommitmentMismatch: revealed g does not hash to the commitment
        OutOfRange, NotInSubgroup, IdentityElement: revealed g is not a usable element
        GeneratorsEqual: revealed g equals h
    """
    params = h.params
    if not 0 <= revealed_g < 1 << (8 * params.width):
        raise CommitmentMismatch("revealed value does not fit an element encoding")
    recomputed = hashlib.sha256(DS_COMMIT + revealed_g.to_bytes(params.width, "big")).digest()
    if not hmac.compare_digest(recomputed, commitment):
        raise CommitmentMismatch("revealed g does not match the commitment")

    g = validate_element(revealed_g, params)
    if g == h:
        raise GeneratorsEqual("negotiated g equals h")
    return params.with_generators(g.value, h.value)


class NegotiationPhase(str, Enum):
    AWAITING_COMMITMENT = "awaiting_commitment"
    RESPONDED = "responded"
    DONE = "done"


class ServerNegotiation:
    """Server side of one negotiation; h is never produced before a commitment."""

    def __init__(self, params: GroupParams, rng: RandomSource) -> None:
        self._g_b = base_generator(params)
        self._rng = rng
        self._commitment: bytes | None = None
        self._h: GroupElement | None = None
        self.phase = NegotiationPhase.AWAITING_COMMITMENT
        self.transcript: NegotiationTranscript | None = None

    def respond(self, commitment: bytes) -> GroupElement:
        if self.phase is not NegotiationPhase.AWAITING_COMMITMENT:
            raise WrongPhase("commitment already received")
        self._h = neg_server_respond(commitment, self._g_b, self._rng)
        self._commitment = commitment
        self.phase = NegotiationPhase.RESPONDED
        return self._h

    def verify(self, revealed_g: int) -> GroupParams:
        if self.phase is not NegotiationPhase.RESPONDED:
            raise WrongPhase("reveal before h was sent")
        assert self._commitment is not None and self._h is not None
        negotiated = neg_server_verify(self._commitment, revealed_g, self._h)
        self.transcript = NegotiationTranscript(
            g_b=self._g_b,
            commitment=self._commitment,
            h=self._h,
            g=GroupElement(revealed_g, negotiated),
        )
        self.phase = NegotiationPhase.DONE
        return negotiated


class ClientNegotiation:
    """Client side: commit on construction, reveal once h arrives."""

    def __init__(self, params: GroupParams, rng: RandomSource) -> None:
        self._params = params
        self.g, self.commitment = neg_client_start(base_generator(params), rng)

    def accept_h(self, h_raw: int) -> GroupParams:
        """Validate the server's h and return the negotiated parameters.

        Raises:
            OutOfRange, NotInSubgroup, IdentityElement: h is not a usable element
            GeneratorsEqual: h equals our g
        """
        h = validate_element(h_raw, self._params)
        if h.value == self.g.value:
            raise GeneratorsEqual("server h equals our g")
        return self._params.with_generators(self.g.value, h.value)
