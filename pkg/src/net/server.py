"""TCP handshake server.

Each connection runs one server-role handshake as its own task; the only state
shared between connections is the append-only session log. Every session ends
with exactly one line, ``ACCEPT <hex8>`` or ``REJECT <reason>``.

Usage:
    exit_code = run_server(config)

    # or, inside a running loop
    server = HandshakeServer(params, b"hunter2", seed=7)
    await server.start("127.0.0.1", 0)
    print(server.port)
"""

import asyncio
from collections.abc import Callable
from dataclasses import dataclass

import click

from src.config.logging import get_logger
from src.errors import EXIT_OK, BindFailure, PakeError, disposition_for
from src.group import GroupParams, RandomSource, seeded_source, system_source

from .config import CliConfig
from .driver import StreamChannel, server_handshake

logger = get_logger(__name__)

LineSink = Callable[[str], None]


@dataclass(frozen=True)
class SessionOutcome:
    """One line of the session log."""

    accepted: bool
    detail: str  # fingerprint or reason token
    peer: str | None = None

    @property
    def line(self) -> str:
        return f"ACCEPT {self.detail}" if self.accepted else f"REJECT {self.detail}"


class HandshakeServer:
    """Accepts connections and runs one handshake per connection."""

    def __init__(
        self,
        params: GroupParams,
        password: bytes,
        *,
        negotiate: bool = False,
        eager: bool = False,
        seed: int | None = None,
        handshake_timeout: float | None = 10.0,
        max_sessions: int | None = None,
        log_line: LineSink | None = None,
    ) -> None:
        self.params = params
        self._password = password
        self.negotiate = negotiate
        self.eager = eager
        self.seed = seed
        self.handshake_timeout = handshake_timeout
        self.max_sessions = max_sessions
        self._log_line = log_line or click.echo
        self.outcomes: list[SessionOutcome] = []
        self.transcripts: list[list[tuple[str, bytes]]] = []
        self._server: asyncio.Server | None = None
        self._finished = asyncio.Event()

    def _rng(self) -> RandomSource:
        # Fresh per connection so seeded runs repeat byte for byte
        return seeded_source(self.seed) if self.seed is not None else system_source()

    @property
    def port(self) -> int:
        if self._server is None or not self._server.sockets:
            raise RuntimeError("server is not listening")
        return self._server.sockets[0].getsockname()[1]

    async def start(self, host: str, port: int) -> None:
        """Bind and start accepting.

        Raises:
            BindFailure: the address could not be bound
        """
        try:
            self._server = await asyncio.start_server(self._handle, host, port)
        except OSError as e:
            raise BindFailure(f"cannot listen on {host}:{port}: {e.strerror or e}") from e
        logger.info(
            "server_listening",
            host=host,
            port=self.port,
            params=self.params.name,
            negotiate=self.negotiate,
            eager=self.eager,
        )

    def _record(self, outcome: SessionOutcome) -> None:
        self.outcomes.append(outcome)
        self._log_line(outcome.line)
        if self.max_sessions is not None and len(self.outcomes) >= self.max_sessions:
            self._finished.set()

    async def _handle(self, reader: asyncio.StreamReader, writer: asyncio.StreamWriter) -> None:
        address = writer.get_extra_info("peername")
        peer = f"{address[0]}:{address[1]}" if address else None
        channel = StreamChannel(reader, writer, timeout=self.handshake_timeout)
        try:
            result = await server_handshake(
                channel,
                self.params,
                self._password,
                self._rng(),
                negotiate=self.negotiate,
                eager=self.eager,
            )
            outcome = SessionOutcome(accepted=True, detail=result.fingerprint, peer=peer)
        except Exception as e:
            disposition = disposition_for(e)
            logger.warning(
                "handshake_rejected",
                peer=peer,
                reason=disposition.reason,
                category=disposition.category.value,
                error=str(e),
            )
            outcome = SessionOutcome(accepted=False, detail=disposition.reason, peer=peer)
        finally:
            self.transcripts.append(channel.frames)
            writer.close()
            try:
                await writer.wait_closed()
            except (OSError, ConnectionError):
                pass
        self._record(outcome)

    async def serve_until_done(self) -> None:
        """Serve until max_sessions is reached, or forever."""
        await self._finished.wait()

    async def close(self) -> None:
        if self._server is not None:
            self._server.close()
            await self._server.wait_closed()
            self._server = None


async def serve(
    config: CliConfig,
    log_line: LineSink | None = None,
    prompt: Callable[[], str] | None = None,
) -> int:
    """Run a server from a validated config; returns the exit code."""
    params = config.resolve_params()
    server = HandshakeServer(
        params,
        config.read_password(prompt),
        negotiate=config.negotiate,
        eager=config.eager,
        seed=config.seed,
        handshake_timeout=config.handshake_timeout,
        max_sessions=config.max_sessions,
        log_line=log_line,
    )
    await server.start(config.endpoint.host, config.endpoint.port)
    try:
        await server.serve_until_done()
    finally:
        await server.close()
    return EXIT_OK


def run_server(
    config: CliConfig,
    log_line: LineSink | None = None,
    prompt: Callable[[], str] | None = None,
) -> int:
    """Blocking entry point: 0 after max_sessions, 3 on bind or configuration failure."""
    try:
        return asyncio.run(serve(config, log_line=log_line, prompt=prompt))
    except PakeError as e:
        disposition = disposition_for(e)
        logger.error("server_failed", reason=disposition.reason, error=str(e))
        return disposition.exit_code
