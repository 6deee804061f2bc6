"""Tests for message framing."""

import asyncio
import random

import pytest

from src.errors import (
    BadVersion,
    LengthMismatch,
    PayloadTooLong,
    Truncated,
    UnknownType,
    WireError,
)
from src.wire import MessageType, WireMessage, decode_message, encode_message, read_message


class TestEncode:
    """Tests for encode_message."""

    def test_abort_empty(self):
        """Test an empty ABORT frame."""
        assert encode_message(WireMessage.of(MessageType.ABORT)) == b"\x01\xff\x00\x00"

    def test_y1_toy_element(self):
        """Test Y1 carrying element 12."""
        assert encode_message(WireMessage.of(MessageType.Y1, b"\x0c")) == b"\x01\x10\x00\x01\x0c"

    def test_modp_element_fits(self):
        """Test a 256-byte payload gets length 0x0100."""
        frame = encode_message(WireMessage.of(MessageType.Y2, bytes(256)))
        assert frame[:4] == b"\x01\x11\x01\x00"

    def test_payload_too_long(self):
        """Test payloads beyond 65535 bytes."""
        with pytest.raises(PayloadTooLong):
            encode_message(WireMessage.of(MessageType.V1, bytes(65536)))

    def test_abort_reason(self):
        """Test ABORT carries an ASCII reason token."""
        assert encode_message(WireMessage.abort("auth")) == b"\x01\xff\x00\x04auth"


class TestDecode:
    """Tests for decode_message."""

    def test_decode(self):
        """Test decoding a valid frame."""
        message = decode_message(b"\x01\x20\x00\x02\xaa\xbb")
        assert message.msg_type is MessageType.V1
        assert message.payload == b"\xaa\xbb"
        assert message.length == 2

    def test_bad_version(self):
        """Test a version-2 frame."""
        with pytest.raises(BadVersion):
            decode_message(b"\x02\x10\x00\x01\x0c")

    def test_truncated_payload(self):
        """Test declared length 5 with 3 bytes present."""
        with pytest.raises(Truncated):
            decode_message(b"\x01\x10\x00\x05abc")

    def test_truncated_header(self):
        """Test a frame shorter than its header."""
        with pytest.raises(Truncated):
            decode_message(b"\x01\x10")

    def test_unknown_type(self):
        """Test message type 0x99."""
        with pytest.raises(UnknownType):
            decode_message(b"\x01\x99\x00\x00")

    def test_trailing_bytes(self):
        """Test bytes after the payload."""
        with pytest.raises(LengthMismatch):
            decode_message(b"\x01\x10\x00\x01\x0c\x00")

    def test_version_checked_before_type(self):
        """Test the check order on a doubly bad header."""
        with pytest.raises(BadVersion):
            decode_message(b"\x07\x99\x00\x00")

    def test_every_type_decodes(self):
        """Test each defined type survives framing."""
        for msg_type in MessageType:
            message = WireMessage.of(msg_type, b"x")
            assert decode_message(encode_message(message)) == message

    def test_fuzz_only_structured_errors(self):
        """Test random byte strings raise WireError or decode."""
        rng = random.Random(0)
        for _ in range(2000):
            data = bytes(rng.getrandbits(8) for _ in range(rng.randrange(0, 12)))
            if rng.random() < 0.5 and data:
                data = b"\x01" + data[1:]
            try:
                decode_message(data)
            except WireError:
                pass


class TestStream:
    """Tests for asyncio stream framing."""

    @pytest.mark.asyncio
    async def test_read_message(self):
        """Test reading frames from a stream."""
        reader = asyncio.StreamReader()
        reader.feed_data(b"\x01\x10\x00\x01\x0c\x01\xff\x00\x00")
        reader.feed_eof()
        first = await read_message(reader)
        second = await read_message(reader)
        assert first == WireMessage.of(MessageType.Y1, b"\x0c")
        assert second.msg_type is MessageType.ABORT

    @pytest.mark.asyncio
    async def test_read_truncated(self):
        """Test a stream closing mid-payload."""
        reader = asyncio.StreamReader()
        reader.feed_data(b"\x01\x10\x00\x05ab")
        reader.feed_eof()
        with pytest.raises(Truncated):
            await read_message(reader)

    @pytest.mark.asyncio
    async def test_read_timeout(self):
        """Test a silent peer times out."""
        reader = asyncio.StreamReader()
        with pytest.raises(asyncio.TimeoutError):
            await read_message(reader, timeout=0.01)
