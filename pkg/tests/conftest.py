"""Pytest configuration and fixtures."""

import os

import pytest

# Set test environment variables before importing settings
os.environ.setdefault("ENVIRONMENT", "development")
os.environ.setdefault("DEBUG", "true")
os.environ.setdefault("LOG_LEVEL", "WARNING")
os.environ.setdefault("CONNECT_RETRY_ATTEMPTS", "2")
os.environ.setdefault("CONNECT_RETRY_MIN_WAIT", "0.01")
os.environ.setdefault("CONNECT_RETRY_MAX_WAIT", "0.02")
os.environ.setdefault("CONNECT_TIMEOUT_SECONDS", "2.0")


@pytest.fixture
def toy():
    """The validated toy23 set (p=23, q=11, g=2, h=4)."""
    from src.group import get_param_set

    return get_param_set("toy23")


@pytest.fixture
def modp():
    """The validated 2048-bit MODP set."""
    from src.group import get_param_set

    return get_param_set("modp2048")


@pytest.fixture
def toy_password():
    """Factory for fixed toy password exponents."""
    from src.group import Scalar
    from src.protocol import PasswordExponent

    def _make(value: int, params) -> PasswordExponent:
        return PasswordExponent(value=Scalar(value, params.q), context=params.name)

    return _make
