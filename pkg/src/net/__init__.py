"""TCP demonstration server and client."""

from .client import connect, connect_and_handshake, run_client
from .config import CliConfig, Endpoint
from .driver import (
    Channel,
    HandshakeResult,
    MemoryChannel,
    StreamChannel,
    client_handshake,
    memory_channel_pair,
    server_handshake,
)
from .resilience import ConnectPolicy, open_connection
from .server import HandshakeServer, SessionOutcome, run_server, serve

__all__ = [
    # Configuration
    "CliConfig",
    "Endpoint",
    "ConnectPolicy",
    # Handshake
    "Channel",
    "HandshakeResult",
    "MemoryChannel",
    "StreamChannel",
    "client_handshake",
    "memory_channel_pair",
    "server_handshake",
    # Endpoints
    "HandshakeServer",
    "SessionOutcome",
    "connect",
    "connect_and_handshake",
    "open_connection",
    "run_client",
    "run_server",
    "serve",
]
