"""Exception hierarchy and failure dispositions.

Every failure the library can raise derives from ``PakeError``. Each class carries
an ``ErrorCategory`` and a short ``reason`` token; the CLI turns the category into
an exit code and the server writes the token into its ``REJECT <reason>`` line.

Usage:
    from src.errors import disposition_for

    try:
        ...
    except PakeError as e:
        disposition = disposition_for(e)
        print(f"REJECT {disposition.reason}")
        sys.exit(disposition.exit_code)
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, ClassVar

if TYPE_CHECKING:
    from src.protocol.session import SessionState


class ErrorCategory(str, Enum):
    """Category of failure for exit codes and REJECT reasons."""

    AUTHENTICATION = "authentication"  # Peer does not hold the same password
    PROTOCOL = "protocol"  # Malformed, out-of-order or invalid protocol input
    TRANSPORT = "transport"  # Socket could not be opened or died mid-handshake
    CONFIGURATION = "configuration"  # Bad parameters, files or flags


class PakeError(Exception):
    """Base class for every library error.

    ``state`` holds the Failed successor state when the error ended a session.
    """

    category: ClassVar[ErrorCategory] = ErrorCategory.PROTOCOL
    reason: ClassVar[str] = "protocol"
    state: SessionState | None = None


# Group arithmetic and parameters


class GroupError(PakeError):
    """Invalid group parameters or group elements."""

    reason = "element"


class NotPrime(GroupError):
    category = ErrorCategory.CONFIGURATION
    reason = "params"

    def __init__(self, which: str, value: int) -> None:
        super().__init__(f"{which} is not prime")
        self.which = which
        self.value = value


class OrderMismatch(GroupError):
    category = ErrorCategory.CONFIGURATION
    reason = "params"


class BadGenerator(GroupError):
    category = ErrorCategory.CONFIGURATION
    reason = "params"

    def __init__(self, which: str, value: int) -> None:
        super().__init__(f"{which} is not a generator of the order-q subgroup")
        self.which = which
        self.value = value


class GeneratorsEqual(GroupError):
    reason = "params"


class InvalidParams(GroupError):
    """Raised by validate_params with every violated invariant attached."""

    category = ErrorCategory.CONFIGURATION
    reason = "params"

    def __init__(self, violations: list[GroupError]) -> None:
        super().__init__("; ".join(str(v) for v in violations))
        self.violations = violations


class ParamsMismatch(GroupError):
    reason = "params"


class UnknownParamSet(GroupError):
    category = ErrorCategory.CONFIGURATION
    reason = "params"


class ParamsFileError(GroupError):
    category = ErrorCategory.CONFIGURATION
    reason = "params"


class OutOfRange(GroupError):
    pass


class NotInSubgroup(GroupError):
    pass


class IdentityElement(GroupError):
    pass


class BadLength(GroupError):
    pass


class DerivationFailed(GroupError):
    reason = "derivation"


class RngFailure(PakeError):
    reason = "rng"


# Protocol state machine


class ProtocolError(PakeError):
    """Failure of a protocol operation."""

    def __init__(self, message: str, state: SessionState | None = None) -> None:
        super().__init__(message)
        self.state = state


class WrongPhase(ProtocolError):
    pass


class IdentityKeyingMaterial(ProtocolError):
    """Only a password mismatch drives km to the identity for valid peer elements."""

    category = ErrorCategory.AUTHENTICATION
    reason = "auth"


class VerificationFailed(ProtocolError):
    category = ErrorCategory.AUTHENTICATION
    reason = "auth"


class EmptyPassword(ProtocolError):
    category = ErrorCategory.CONFIGURATION
    reason = "password"


class CommitmentMismatch(ProtocolError):
    reason = "commitment"


class UnexpectedMessage(ProtocolError):
    reason = "order"


class PeerAborted(ProtocolError):
    """The peer sent ABORT; its reason token decides the category."""

    def __init__(self, peer_reason: str) -> None:
        super().__init__(f"peer aborted: {peer_reason}")
        self.peer_reason = peer_reason


# Wire framing


class WireError(PakeError):
    reason = "wire"


class BadVersion(WireError):
    pass


class UnknownType(WireError):
    pass


class LengthMismatch(WireError):
    pass


class Truncated(WireError):
    pass


class PayloadTooLong(WireError):
    pass


# Transport


class TransportError(PakeError):
    category = ErrorCategory.TRANSPORT
    reason = "transport"


class BindFailure(TransportError):
    pass


class HandshakeTimeout(TransportError):
    reason = "timeout"


# Oracle harness


class OracleAssertionFailure(PakeError):
    """An exhaustive check found a counterexample."""

    def __init__(self, check: str, counterexample: dict[str, Any]) -> None:
        detail = ", ".join(f"{k}={v}" for k, v in counterexample.items())
        super().__init__(f"{check} failed at ({detail})")
        self.check = check
        self.counterexample = counterexample


class GroupTooLarge(PakeError):
    category = ErrorCategory.CONFIGURATION
    reason = "params"


class NotFound(PakeError):
    pass


@dataclass(frozen=True)
class ErrorDisposition:
    """How a failure is reported to the outside world."""

    category: ErrorCategory
    reason: str
    exit_code: int


EXIT_OK = 0
EXIT_AUTH_FAILED = 2
EXIT_PROTOCOL_ERROR = 3

EXIT_CODES: dict[ErrorCategory, int] = {
    ErrorCategory.AUTHENTICATION: EXIT_AUTH_FAILED,
    ErrorCategory.PROTOCOL: EXIT_PROTOCOL_ERROR,
    ErrorCategory.TRANSPORT: EXIT_PROTOCOL_ERROR,
    ErrorCategory.CONFIGURATION: EXIT_PROTOCOL_ERROR,
}


def categorize_exception(error: BaseException) -> ErrorCategory:
    """Categorize any exception, including ones raised outside the library."""
    if isinstance(error, PeerAborted):
        # The peer's verdict on our verifier is an authentication failure on our side too.
        return ErrorCategory.AUTHENTICATION if error.peer_reason == "auth" else ErrorCategory.PROTOCOL
    if isinstance(error, PakeError):
        return error.category
    if isinstance(error, (ConnectionError, TimeoutError, OSError, EOFError)):
        return ErrorCategory.TRANSPORT
    return ErrorCategory.PROTOCOL


def disposition_for(error: BaseException) -> ErrorDisposition:
    """Map an exception to its category, REJECT reason and exit code."""
    category = categorize_exception(error)
    if isinstance(error, PeerAborted):
        reason = error.peer_reason
    elif isinstance(error, PakeError):
        reason = error.reason
    elif category is ErrorCategory.TRANSPORT:
        reason = "transport"
    else:
        reason = "internal"
    return ErrorDisposition(category=category, reason=reason, exit_code=EXIT_CODES[category])
