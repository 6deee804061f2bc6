"""Deterministic derivation of the second generator h from g."""

import hashlib

from src.errors import DerivationFailed, OrderMismatch, ParamsMismatch

from .elements import GroupElement
from .params import element_width

DS_H = b"\x68"
MAX_COUNTER = 255


def derive_h_value(g: int, p: int, q: int) -> int:
    """h = H(DS_H || encode(g) || counter)^((p-1)/q) mod p for the first usable counter."""
    if (p - 1) % q != 0:
        raise OrderMismatch("q does not divide p-1")
    cofactor = (p - 1) // q
    encoded_g = g.to_bytes(element_width(p), "big")

    for counter in range(MAX_COUNTER + 1):
        digest = hashlib.sha256(DS_H + encoded_g + bytes([counter])).digest()
        h = pow(int.from_bytes(digest, "big") % p, cofactor, p)
        if h not in (0, 1) and h != g:
            return h

    raise DerivationFailed(f"no usable h within {MAX_COUNTER + 1} counters")


def derive_h(g: GroupElement, p: int, q: int) -> GroupElement:
    """Derive h for a validated g; the result is bound to g's parameters."""
    if (p, q) != (g.params.p, g.params.q):
        raise ParamsMismatch("p, q differ from the generator's parameters")
    return GroupElement(derive_h_value(g.value, p, q), g.params)
