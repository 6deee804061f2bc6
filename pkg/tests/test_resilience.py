"""Tests for the connect retry layer."""

import errno
from unittest.mock import AsyncMock, MagicMock

import pytest

from src.net.resilience import (
    ConnectPolicy,
    FailureKind,
    categorize_error,
    connect_policy_from_settings,
    open_connection,
    should_retry,
)

FAST = ConnectPolicy(attempts=3, min_wait=0, max_wait=0, timeout_seconds=1.0)


class TestConnectPolicy:
    """Tests for policy construction."""

    def test_from_settings(self):
        """Test the policy picks up settings."""
        policy = connect_policy_from_settings()
        assert policy.attempts == 2
        assert policy.min_wait == 0.01

    def test_overrides(self):
        """Test keyword overrides."""
        policy = connect_policy_from_settings(attempts=5, timeout_seconds=9.0)
        assert policy.attempts == 5
        assert policy.timeout_seconds == 9.0
        assert policy.max_wait == 0.02


class TestErrorCategorization:
    """Tests for error categorization."""

    def test_transient_errors(self):
        """Test refused, reset and timed-out connects are transient."""
        assert categorize_error(ConnectionRefusedError()) == FailureKind.TRANSIENT
        assert categorize_error(ConnectionResetError()) == FailureKind.TRANSIENT
        assert categorize_error(TimeoutError()) == FailureKind.TRANSIENT
        assert categorize_error(OSError(errno.ECONNREFUSED, "refused")) == FailureKind.TRANSIENT

    def test_unreachable(self):
        """Test routing failures are not retried."""
        assert categorize_error(OSError(errno.EHOSTUNREACH, "no route")) == FailureKind.UNREACHABLE

    def test_unknown(self):
        """Test non-network errors."""
        assert categorize_error(ValueError("bad")) == FailureKind.UNKNOWN

    def test_should_retry(self):
        """Test retry decisions."""
        assert should_retry(ConnectionRefusedError())
        assert not should_retry(OSError(errno.EHOSTUNREACH, "no route"))
        assert not should_retry(ValueError("bad"))


class TestOpenConnection:
    """Tests for open_connection retries."""

    @pytest.mark.asyncio
    async def test_retries_then_succeeds(self, mocker):
        """Test a refused connect is retried."""
        streams = (MagicMock(), MagicMock())
        mock = mocker.patch(
            "src.net.resilience.asyncio.open_connection",
            new=AsyncMock(side_effect=[ConnectionRefusedError(), streams]),
        )
        assert await open_connection("127.0.0.1", 1, FAST) == streams
        assert mock.call_count == 2

    @pytest.mark.asyncio
    async def test_gives_up(self, mocker):
        """Test the last error is raised after all attempts."""
        mock = mocker.patch(
            "src.net.resilience.asyncio.open_connection",
            new=AsyncMock(side_effect=ConnectionRefusedError()),
        )
        with pytest.raises(ConnectionRefusedError):
            await open_connection("127.0.0.1", 1, FAST)
        assert mock.call_count == 3

    @pytest.mark.asyncio
    async def test_no_retry_for_unreachable(self, mocker):
        """Test non-transient errors fail at once."""
        mock = mocker.patch(
            "src.net.resilience.asyncio.open_connection",
            new=AsyncMock(side_effect=OSError(errno.EHOSTUNREACH, "no route")),
        )
        with pytest.raises(OSError):
            await open_connection("127.0.0.1", 1, FAST)
        assert mock.call_count == 1
