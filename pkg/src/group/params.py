"""Group parameters for a prime-order subgroup of F_p*, and their validation."""

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

import gmpy2

from src.errors import (
    BadGenerator,
    GeneratorsEqual,
    GroupError,
    InvalidParams,
    NotPrime,
    OrderMismatch,
)

# 4^-64 = 2^-128 worst-case Miller-Rabin error
PRIMALITY_ROUNDS = 64

# Largest subgroup order the exhaustive oracles (and --seed) accept
ENUMERATION_LIMIT = 2**20


@dataclass(frozen=True)
class GroupParams:
    """The tuple (p, q, g, h) plus a label.

    ``base`` is the generator g_b used when g and h are negotiated; it defaults
    to g. Instances are only guaranteed valid when produced by validate_params.
    """

    p: int
    q: int
    g: int
    h: int
    name: str
    base: int | None = None

    @property
    def gb(self) -> int:
        return self.g if self.base is None else self.base

    @property
    def cofactor(self) -> int:
        return (self.p - 1) // self.q

    @property
    def width(self) -> int:
        """Byte length W of every encoded element."""
        return element_width(self.p)

    @property
    def is_toy(self) -> bool:
        """Small enough to enumerate; such sets offer no security."""
        return self.q <= ENUMERATION_LIMIT

    def with_generators(self, g: int, h: int) -> "GroupParams":
        """Same p, q and base with a negotiated generator pair."""
        return GroupParams(p=self.p, q=self.q, g=g, h=h, name=self.name, base=self.gb)


def element_width(p: int) -> int:
    return (p.bit_length() + 7) // 8


def is_probable_prime(n: int, rounds: int = PRIMALITY_ROUNDS) -> bool:
    """Miller-Rabin with ``rounds`` random bases."""
    if n < 2:
        return False
    return bool(gmpy2.is_prime(n, rounds))


def _in_subgroup(x: int, p: int, q: int) -> bool:
    return 1 < x < p and pow(x, q, p) == 1


def collect_violations(
    p: int,
    q: int,
    g: int,
    h: int | None,
    base: int | None = None,
) -> list[GroupError]:
    """Every invariant the candidate breaks; h is skipped when None."""
    violations: list[GroupError] = []

    p_prime = is_probable_prime(p)
    q_prime = is_probable_prime(q)
    if not p_prime:
        violations.append(NotPrime("p", p))
    if not q_prime:
        violations.append(NotPrime("q", q))

    if p < 3 or q < 1:
        # Nothing below is computable
        return violations

    if (p - 1) % q != 0:
        violations.append(OrderMismatch(f"q does not divide p-1 (q={q})"))

    generators = [("g", g)]
    if h is not None:
        generators.append(("h", h))
    if base is not None and base != g:
        generators.append(("gb", base))
    for which, value in generators:
        if not _in_subgroup(value, p, q):
            violations.append(BadGenerator(which, value))

    if h is not None and g == h:
        violations.append(GeneratorsEqual("g and h must differ"))

    return violations


def validate_params(candidate: GroupParams | Mapping[str, Any]) -> GroupParams:
    """Validate a GroupParams-shaped record.

    Raises:
        InvalidParams: listing every violated invariant
    """
    if isinstance(candidate, GroupParams):
        fields: dict[str, Any] = {
            "p": candidate.p,
            "q": candidate.q,
            "g": candidate.g,
            "h": candidate.h,
            "name": candidate.name,
            "base": candidate.base,
        }
    else:
        fields = dict(candidate)

    p, q, g, h = (int(fields[k]) for k in ("p", "q", "g", "h"))
    base = fields.get("base")
    base = int(base) if base is not None else None
    name = str(fields.get("name", "custom"))

    violations = collect_violations(p, q, g, h, base)
    if violations:
        raise InvalidParams(violations)

    return GroupParams(p=p, q=q, g=g, h=h, name=name, base=base if base is not None else g)
