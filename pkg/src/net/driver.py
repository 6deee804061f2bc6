"""Client and server handshake drivers over a framed channel.

Accepted order: PARAMSET, optional COMMIT -> HGEN -> REVEAL, then Y1 and Y2 in
either order, then V1, then V2. The server never sends V1 before km exists and
the client never sends V2 before V1 has checked out. Any failure sends ABORT
with a reason token (best effort) and re-raises.

Usage:
    channel = StreamChannel(reader, writer, timeout=10.0)
    result = await client_handshake(channel, params, b"hunter2", system_source())
    print(f"ACCEPT {result.fingerprint}")
"""

import asyncio
from dataclasses import dataclass, field
from typing import Protocol

from src.config.logging import get_logger
from src.errors import (
    BadLength,
    HandshakeTimeout,
    PakeError,
    ParamsMismatch,
    PeerAborted,
    UnexpectedMessage,
    disposition_for,
)
from src.group import GroupParams, RandomSource, encode_element
from src.protocol import (
    ClientNegotiation,
    Role,
    ServerNegotiation,
    check_verifier,
    derive_session_key,
    key_fingerprint,
    make_verifier,
    password_to_exponent,
    session_absorb,
    session_end,
    session_start,
)
from src.wire import MessageType, WireMessage, encode_message, read_message, write_message

logger = get_logger(__name__)


class Channel(Protocol):
    """A reliable ordered message pipe to the peer."""

    async def send(self, message: WireMessage) -> None: ...

    async def recv(self) -> WireMessage: ...


@dataclass
class StreamChannel:
    """Channel over an asyncio stream pair; records every frame in order."""

    reader: asyncio.StreamReader
    writer: asyncio.StreamWriter
    timeout: float | None = None
    frames: list[tuple[str, bytes]] = field(default_factory=list)

    async def send(self, message: WireMessage) -> None:
        frame = await write_message(self.writer, message)
        self.frames.append(("sent", frame))

    async def recv(self) -> WireMessage:
        try:
            message = await read_message(self.reader, timeout=self.timeout)
        except asyncio.TimeoutError:
            raise HandshakeTimeout(f"no message from peer within {self.timeout}s") from None
        self.frames.append(("received", encode_message(message)))
        return message


@dataclass
class MemoryChannel:
    """One end of an in-process channel pair."""

    inbox: "asyncio.Queue[WireMessage]"
    outbox: "asyncio.Queue[WireMessage]"
    frames: list[tuple[str, bytes]] = field(default_factory=list)

    async def send(self, message: WireMessage) -> None:
        self.frames.append(("sent", encode_message(message)))
        await self.outbox.put(message)

    async def recv(self) -> WireMessage:
        message = await self.inbox.get()
        self.frames.append(("received", encode_message(message)))
        return message


def memory_channel_pair() -> tuple[MemoryChannel, MemoryChannel]:
    """Two connected in-process channels (client end, server end)."""
    to_server: asyncio.Queue[WireMessage] = asyncio.Queue()
    to_client: asyncio.Queue[WireMessage] = asyncio.Queue()
    return MemoryChannel(inbox=to_client, outbox=to_server), MemoryChannel(
        inbox=to_server, outbox=to_client
    )


@dataclass(frozen=True)
class HandshakeResult:
    """Outcome of a successful handshake; the key itself stays out of repr."""

    role: Role
    params: GroupParams = field(repr=False)
    session_key: bytes = field(repr=False)
    fingerprint: str

    @property
    def line(self) -> str:
        return f"ACCEPT {self.fingerprint}"


async def _expect(channel: Channel, expected: MessageType) -> bytes:
    message = await channel.recv()
    if message.msg_type is MessageType.ABORT:
        raise PeerAborted(message.payload.decode("ascii", errors="replace") or "protocol")
    if message.msg_type is not expected:
        raise UnexpectedMessage(f"expected {expected.name}, got {message.msg_type.name}")
    return message.payload


def _element_value(payload: bytes, params: GroupParams) -> int:
    if len(payload) != params.width:
        raise BadLength(f"element must be {params.width} bytes, got {len(payload)}")
    return int.from_bytes(payload, "big")


async def _abort(channel: Channel, error: Exception) -> None:
    if isinstance(error, PeerAborted):
        return
    reason = disposition_for(error).reason
    try:
        await channel.send(WireMessage.abort(reason))
    except (OSError, PakeError, RuntimeError):
        logger.debug("abort_not_delivered", reason=reason)


async def client_handshake(
    channel: Channel,
    params: GroupParams,
    password: bytes,
    rng: RandomSource,
    negotiate: bool = False,
) -> HandshakeResult:
    """Run the client role to completion.

    Raises:
        VerificationFailed: the server's v1 did not check out (wrong password)
        PeerAborted: the server sent ABORT
        PakeError: any other protocol, wire or element failure
    """
    try:
        await channel.send(WireMessage.of(MessageType.PARAMSET, params.name.encode("utf-8")))

        session_params = params
        if negotiate:
            negotiation = ClientNegotiation(params, rng)
            await channel.send(WireMessage.of(MessageType.COMMIT, negotiation.commitment))
            h_raw = _element_value(await _expect(channel, MessageType.HGEN), params)
            session_params = negotiation.accept_h(h_raw)
            await channel.send(WireMessage.of(MessageType.REVEAL, encode_element(negotiation.g)))

        exponent = password_to_exponent(password, session_params)
        state, y1 = session_start(Role.CLIENT, session_params, exponent, rng)
        await channel.send(WireMessage.of(MessageType.Y1, encode_element(y1)))

        y2_raw = _element_value(await _expect(channel, MessageType.Y2), session_params)
        state = session_absorb(state, y2_raw)

        state = check_verifier(state, await _expect(channel, MessageType.V1))
        await channel.send(WireMessage.of(MessageType.V2, make_verifier(state).tag))

        key = derive_session_key(state)
        state = session_end(state)
    except Exception as e:
        await _abort(channel, e)
        raise

    result = HandshakeResult(
        role=state.role, params=state.params, session_key=key, fingerprint=key_fingerprint(key)
    )
    logger.info("handshake_accepted", role="client", fingerprint=result.fingerprint)
    return result


async def server_handshake(
    channel: Channel,
    params: GroupParams,
    password: bytes,
    rng: RandomSource,
    negotiate: bool = False,
    eager: bool = False,
) -> HandshakeResult:
    """Run the server role to completion.

    With ``eager`` the server sends Y2 before reading Y1; r2 is drawn at the
    same point either way, so both orders yield the same key for the same rng.

    Raises:
        ParamsMismatch: the client asked for another parameter set
        PeerAborted: the client sent ABORT (reason ``auth`` on a wrong password)
        VerificationFailed: the client's v2 did not check out
        PakeError: any other protocol, wire or element failure
    """
    try:
        requested = (await _expect(channel, MessageType.PARAMSET)).decode("utf-8", errors="replace")
        if requested != params.name:
            raise ParamsMismatch(f"client requested {requested!r}, serving {params.name!r}")

        session_params = params
        if negotiate:
            negotiation = ServerNegotiation(params, rng)
            h = negotiation.respond(await _expect(channel, MessageType.COMMIT))
            await channel.send(WireMessage.of(MessageType.HGEN, encode_element(h)))
            g_raw = _element_value(await _expect(channel, MessageType.REVEAL), params)
            session_params = negotiation.verify(g_raw)

        exponent = password_to_exponent(password, session_params)
        state, y2 = session_start(Role.SERVER, session_params, exponent, rng)
        y2_message = WireMessage.of(MessageType.Y2, encode_element(y2))

        if eager:
            await channel.send(y2_message)
            y1_payload = await _expect(channel, MessageType.Y1)
        else:
            y1_payload = await _expect(channel, MessageType.Y1)
            await channel.send(y2_message)

        state = session_absorb(state, _element_value(y1_payload, session_params))
        await channel.send(WireMessage.of(MessageType.V1, make_verifier(state).tag))

        state = check_verifier(state, await _expect(channel, MessageType.V2))
        key = derive_session_key(state)
        state = session_end(state)
    except Exception as e:
        await _abort(channel, e)
        raise

    result = HandshakeResult(
        role=state.role, params=state.params, session_key=key, fingerprint=key_fingerprint(key)
    )
    logger.info("handshake_accepted", role="server", fingerprint=result.fingerprint)
    return result
