"""Subgroup elements and exponents: arithmetic, validation and canonical encoding.

Exponentiation goes through gmpy2's constant-time ``powmod_sec`` so that secret
exponents (r, pass) do not leak through timing. Peer-supplied values always go
through ``validate_element`` before they touch the protocol.
"""

from dataclasses import dataclass, field

import gmpy2

from src.errors import (
    BadLength,
    IdentityElement,
    NotInSubgroup,
    OutOfRange,
    ParamsMismatch,
)

from .params import GroupParams


@dataclass(frozen=True)
class GroupElement:
    """A member of the order-q subgroup, bound to its parameters."""

    value: int
    params: GroupParams = field(repr=False)

    def __post_init__(self) -> None:
        if not 1 <= self.value < self.params.p:
            raise OutOfRange(f"element {self.value} outside [1, p-1]")

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class Scalar:
    """An exponent in [0, q-1]. The value is kept out of repr()."""

    value: int = field(repr=False)
    q: int = field(repr=False)

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.q:
            raise OutOfRange("scalar outside [0, q-1]")

    def negate(self) -> "Scalar":
        return Scalar((-self.value) % self.q, self.q)


def generator(params: GroupParams) -> GroupElement:
    return GroupElement(params.g, params)


def second_generator(params: GroupParams) -> GroupElement:
    return GroupElement(params.h, params)


def base_generator(params: GroupParams) -> GroupElement:
    return GroupElement(params.gb, params)


def identity(params: GroupParams) -> GroupElement:
    return GroupElement(1, params)


def power(base: GroupElement, e: Scalar) -> GroupElement:
    """base^e mod p, constant time in e."""
    params = base.params
    if e.q != params.q:
        raise ParamsMismatch("exponent belongs to a different group order")
    if e.value == 0:
        return identity(params)
    return GroupElement(int(gmpy2.powmod_sec(base.value, e.value, params.p)), params)


def mul(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.params != b.params:
        raise ParamsMismatch("elements belong to different parameter sets")
    return GroupElement(a.value * b.value % a.params.p, a.params)


def invert(a: GroupElement) -> GroupElement:
    return GroupElement(int(gmpy2.invert(a.value, a.params.p)), a.params)


def validate_element(raw: int, params: GroupParams) -> GroupElement:
    """Accept raw iff 1 < raw < p and raw^q = 1 (mod p).

    Raises:
        IdentityElement: raw == 1
        OutOfRange: raw outside (1, p)
        NotInSubgroup: raw^q != 1
    """
    if raw == 1:
        raise IdentityElement("identity element rejected")
    if not 1 < raw < params.p:
        raise OutOfRange(f"value outside (1, p): {raw}")
    if pow(raw, params.q, params.p) != 1:
        raise NotInSubgroup("value is not in the order-q subgroup")
    return GroupElement(raw, params)


def encode_element(x: GroupElement) -> bytes:
    """Fixed-width big-endian encoding, W = byte length of p."""
    return x.value.to_bytes(x.params.width, "big")


def decode_element(data: bytes, params: GroupParams) -> GroupElement:
    if len(data) != params.width:
        raise BadLength(f"expected {params.width} bytes, got {len(data)}")
    return validate_element(int.from_bytes(data, "big"), params)
