"""Byte-level framing for handshake messages."""

from .frames import (
    HEADER_SIZE,
    MAX_PAYLOAD,
    PROTOCOL_VERSION,
    MessageType,
    WireMessage,
    decode_message,
    encode_message,
    parse_header,
)
from .stream import read_message, write_message

__all__ = [
    "HEADER_SIZE",
    "MAX_PAYLOAD",
    "PROTOCOL_VERSION",
    "MessageType",
    "WireMessage",
    "decode_message",
    "encode_message",
    "parse_header",
    "read_message",
    "write_message",
]
