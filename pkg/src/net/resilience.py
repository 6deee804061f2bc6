"""Retry policy for opening client connections.

Only transient transport failures (refused, reset, timed out) are retried, with
exponential backoff. Handshake failures are never retried: a second attempt
would be a second online password guess.

Usage:
    from src.net.resilience import connect_policy_from_settings, open_connection

    policy = connect_policy_from_settings()
    reader, writer = await open_connection("127.0.0.1", 7461, policy)
"""

import asyncio
import errno
from dataclasses import dataclass
from enum import Enum

from tenacity import (
    AsyncRetrying,
    RetryCallState,
    retry_if_exception,
    stop_after_attempt,
    wait_exponential,
)

from src.config.logging import get_logger

logger = get_logger(__name__)


class FailureKind(str, Enum):
    """Categories of connect errors for retry decisions."""

    TRANSIENT = "transient"  # Refused, reset, timed out
    UNREACHABLE = "unreachable"  # No route, bad address
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ConnectPolicy:
    """How hard the client tries to reach the server."""

    attempts: int = 3
    min_wait: float = 0.05
    max_wait: float = 0.5
    multiplier: float = 2.0
    timeout_seconds: float = 5.0


def connect_policy_from_settings(**overrides: float) -> ConnectPolicy:
    """Build a policy from settings, with keyword overrides."""
    from src.config import settings

    values: dict[str, float] = {
        "attempts": settings.connect_retry_attempts,
        "min_wait": settings.connect_retry_min_wait,
        "max_wait": settings.connect_retry_max_wait,
        "timeout_seconds": settings.connect_timeout_seconds,
    }
    values.update(overrides)
    return ConnectPolicy(
        attempts=int(values["attempts"]),
        min_wait=values["min_wait"],
        max_wait=values["max_wait"],
        timeout_seconds=values["timeout_seconds"],
    )


_TRANSIENT_ERRNOS = {errno.ECONNREFUSED, errno.ECONNRESET, errno.ETIMEDOUT, errno.ECONNABORTED}


def categorize_error(error: BaseException) -> FailureKind:
    """Categorize a connect error."""
    if isinstance(error, (ConnectionRefusedError, ConnectionResetError, ConnectionAbortedError)):
        return FailureKind.TRANSIENT
    if isinstance(error, (TimeoutError, asyncio.TimeoutError)):
        return FailureKind.TRANSIENT
    if isinstance(error, OSError):
        if error.errno in _TRANSIENT_ERRNOS:
            return FailureKind.TRANSIENT
        return FailureKind.UNREACHABLE
    return FailureKind.UNKNOWN


def should_retry(error: BaseException) -> bool:
    return categorize_error(error) is FailureKind.TRANSIENT


def _log_retry(retry_state: RetryCallState) -> None:
    outcome = retry_state.outcome
    error = outcome.exception() if outcome is not None else None
    logger.warning(
        "connect_retry",
        attempt=retry_state.attempt_number,
        error=str(error),
        kind=categorize_error(error).value if error else None,
    )


async def open_connection(
    host: str,
    port: int,
    policy: ConnectPolicy | None = None,
) -> tuple[asyncio.StreamReader, asyncio.StreamWriter]:
    """Open a TCP connection, retrying transient failures.

    Raises:
        OSError: the last connect error once attempts are exhausted, or the first
            non-transient one
    """
    policy = policy or ConnectPolicy()
    async for attempt in AsyncRetrying(
        stop=stop_after_attempt(policy.attempts),
        wait=wait_exponential(
            multiplier=policy.multiplier,
            min=policy.min_wait,
            max=policy.max_wait,
        ),
        retry=retry_if_exception(should_retry),
        before_sleep=_log_retry,
        reraise=True,
    ):
        with attempt:
            try:
                return await asyncio.wait_for(
                    asyncio.open_connection(host, port),
                    timeout=policy.timeout_seconds,
                )
            except asyncio.TimeoutError:
                raise TimeoutError(
                    f"connect to {host}:{port} timed out after {policy.timeout_seconds}s"
                ) from None
    raise AssertionError("unreachable")  # pragma: no cover
