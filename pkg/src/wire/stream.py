"""Reading and writing frames on an asyncio stream."""

import asyncio

from src.errors import Truncated

from .frames import HEADER_SIZE, WireMessage, encode_message, parse_header


async def read_message(reader: asyncio.StreamReader, timeout: float | None = None) -> WireMessage:
    """Read one frame.

    Raises:
        Truncated: the stream closed mid-frame
        BadVersion, UnknownType: invalid header
        asyncio.TimeoutError: nothing arrived within ``timeout``
    """

    async def _read() -> WireMessage:
        try:
            header = await reader.readexactly(HEADER_SIZE)
        except asyncio.IncompleteReadError as e:
            raise Truncated(f"stream closed after {len(e.partial)} header bytes") from None
        msg_type, length = parse_header(header)
        try:
            payload = await reader.readexactly(length)
        except asyncio.IncompleteReadError as e:
            raise Truncated(f"stream closed after {len(e.partial)} of {length} payload bytes") from None
        return WireMessage(msg_type=msg_type, payload=payload)

    return await asyncio.wait_for(_read(), timeout=timeout)


async def write_message(writer: asyncio.StreamWriter, message: WireMessage) -> bytes:
    """Write one frame and drain; returns the bytes written."""
    frame = encode_message(message)
    writer.write(frame)
    await writer.drain()
    return frame
