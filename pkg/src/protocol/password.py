"""Mapping a textual password to a nonzero exponent modulo q."""

import hashlib
from dataclasses import dataclass, field

from src.errors import DerivationFailed, EmptyPassword
from src.group import GroupParams, Scalar

DS_PASS = b"\x70"

# Extra output bits so the reduction mod q is statistically uniform
REDUCTION_MARGIN_BITS = 64
MAX_ATTEMPTS = 256


@dataclass(frozen=True)
class PasswordExponent:
    """pass_c / pass_s: a scalar in [1, q-1] bound to the parameter-set name."""

    value: Scalar = field(repr=False)
    context: str


def _widened_digest(seed: bytes, attempt: int, bits: int) -> int:
    blocks = -(-bits // 256)
    stream = b"".join(
        hashlib.sha256(seed + bytes([attempt]) + bytes([i])).digest() for i in range(blocks)
    )
    return int.from_bytes(stream, "big")


def password_to_exponent(password: bytes | str, params: GroupParams) -> PasswordExponent:
    """Deterministically map a password to [1, q-1] for this parameter set.

    Raises:
        EmptyPassword: password is empty
    """
    if isinstance(password, str):
        password = password.encode("utf-8")
    if not password:
        raise EmptyPassword("password must not be empty")

    name = params.name.encode("utf-8")
    seed = DS_PASS + len(name).to_bytes(2, "big") + name + password
    bits = params.q.bit_length() + REDUCTION_MARGIN_BITS

    for attempt in range(MAX_ATTEMPTS):
        e = _widened_digest(seed, attempt, bits) % params.q
        if e != 0:
            return PasswordExponent(value=Scalar(e, params.q), context=params.name)

    raise DerivationFailed("password maps to zero for every attempt")
