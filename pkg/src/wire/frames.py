"""Canonical framing for handshake messages.

A frame is ``version (1) || msg_type (1) || length (2, big-endian) || payload``.

Usage:
    from src.wire.frames import MessageType, WireMessage, encode_message, decode_message

    frame = encode_message(WireMessage.of(MessageType.Y1, encode_element(y1)))
    message = decode_message(frame)
"""

from dataclasses import dataclass
from enum import IntEnum

from src.errors import BadVersion, LengthMismatch, PayloadTooLong, Truncated, UnknownType

PROTOCOL_VERSION = 0x01
HEADER_SIZE = 4
MAX_PAYLOAD = 0xFFFF


class MessageType(IntEnum):
    COMMIT = 0x01
    HGEN = 0x02
    REVEAL = 0x03
    Y1 = 0x10
    Y2 = 0x11
    V1 = 0x20
    V2 = 0x21
    PARAMSET = 0x30
    ABORT = 0xFF


@dataclass(frozen=True)
class WireMessage:
    """One framed message; ``length`` is always derived from the payload."""

    msg_type: MessageType
    payload: bytes = b""
    version: int = PROTOCOL_VERSION

    @classmethod
    def of(cls, msg_type: MessageType, payload: bytes = b"") -> "WireMessage":
        return cls(msg_type=msg_type, payload=payload)

    @classmethod
    def abort(cls, reason: str) -> "WireMessage":
        return cls(msg_type=MessageType.ABORT, payload=reason.encode("ascii"))

    @property
    def length(self) -> int:
        return len(self.payload)


def encode_message(message: WireMessage) -> bytes:
    """Serialize a message bit-exactly.

    Raises:
        PayloadTooLong: payload does not fit the 2-byte length field
    """
    if message.length > MAX_PAYLOAD:
        raise PayloadTooLong(f"payload of {message.length} bytes exceeds {MAX_PAYLOAD}")
    return (
        bytes([message.version, int(message.msg_type)])
        + message.length.to_bytes(2, "big")
        + message.payload
    )


def parse_header(header: bytes) -> tuple[MessageType, int]:
    """Check a 4-byte header and return (type, declared length)."""
    if len(header) < HEADER_SIZE:
        raise Truncated(f"frame header needs {HEADER_SIZE} bytes, got {len(header)}")
    if header[0] != PROTOCOL_VERSION:
        raise BadVersion(f"unsupported version 0x{header[0]:02x}")
    try:
        msg_type = MessageType(header[1])
    except ValueError:
        raise UnknownType(f"unknown message type 0x{header[1]:02x}") from None
    return msg_type, int.from_bytes(header[2:4], "big")


def decode_message(data: bytes) -> WireMessage:
    """Parse exactly one frame.

    Raises:
        Truncated: header or payload shorter than declared
        BadVersion: version byte is not 0x01
        UnknownType: message type is not defined
        LengthMismatch: bytes follow the declared payload
    """
    msg_type, length = parse_header(data[:HEADER_SIZE])
    body = data[HEADER_SIZE:]
    if len(body) < length:
        raise Truncated(f"declared length {length}, only {len(body)} payload bytes present")
    if len(body) > length:
        raise LengthMismatch(f"{len(body) - length} trailing bytes after payload")
    return WireMessage(msg_type=msg_type, payload=bytes(body))
