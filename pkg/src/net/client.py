"""TCP handshake client.

Exit codes: 0 mutual authentication, 2 authentication failure, 3 protocol or
transport error.
"""

import asyncio
from collections.abc import Callable

import click

from src.config.logging import get_logger
from src.errors import EXIT_OK, disposition_for
from src.group import GroupParams, RandomSource, seeded_source, system_source

from .config import CliConfig
from .driver import HandshakeResult, StreamChannel, client_handshake
from .resilience import ConnectPolicy, connect_policy_from_settings, open_connection

logger = get_logger(__name__)


async def connect_and_handshake(
    host: str,
    port: int,
    params: GroupParams,
    password: bytes,
    rng: RandomSource,
    *,
    negotiate: bool = False,
    handshake_timeout: float | None = 10.0,
    policy: ConnectPolicy | None = None,
) -> HandshakeResult:
    """Connect (with retries) and run one client handshake.

    Raises:
        OSError: the server could not be reached
        PakeError: the handshake failed
    """
    reader, writer = await open_connection(host, port, policy)
    channel = StreamChannel(reader, writer, timeout=handshake_timeout)
    try:
        return await client_handshake(channel, params, password, rng, negotiate=negotiate)
    finally:
        writer.close()
        try:
            await writer.wait_closed()
        except (OSError, ConnectionError):
            pass


async def connect(
    config: CliConfig,
    log_line: Callable[[str], None] | None = None,
    prompt: Callable[[], str] | None = None,
) -> int:
    """Run the client from a validated config; returns the exit code."""
    log_line = log_line or click.echo
    try:
        params = config.resolve_params()
        password = config.read_password(prompt)
        rng = seeded_source(config.seed) if config.seed is not None else system_source()
        result = await connect_and_handshake(
            config.endpoint.host,
            config.endpoint.port,
            params,
            password,
            rng,
            negotiate=config.negotiate,
            handshake_timeout=config.handshake_timeout,
            policy=connect_policy_from_settings(),
        )
    except Exception as e:
        disposition = disposition_for(e)
        logger.warning(
            "handshake_rejected",
            role="client",
            endpoint=str(config.endpoint),
            reason=disposition.reason,
            category=disposition.category.value,
            error=str(e),
        )
        log_line(f"REJECT {disposition.reason}")
        return disposition.exit_code

    log_line(result.line)
    return EXIT_OK


def run_client(
    config: CliConfig,
    log_line: Callable[[str], None] | None = None,
    prompt: Callable[[], str] | None = None,
) -> int:
    """Blocking entry point for the client."""
    return asyncio.run(connect(config, log_line=log_line, prompt=prompt))
