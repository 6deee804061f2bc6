"""Configuration for one server or client run.

Usage:
    config = CliConfig(
        mode="client",
        endpoint=Endpoint.parse("127.0.0.1:7461"),
        param_set="toy23",
        password_env="PAKE_PASSWORD",
    )
    params = config.resolve_params()
    password = config.read_password()
"""

import os
from collections.abc import Callable
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, SecretStr, model_validator

from src.errors import EmptyPassword
from src.group import GroupParams, resolve_params


class Endpoint(BaseModel):
    """A host:port pair."""

    model_config = ConfigDict(frozen=True)

    host: str = Field(min_length=1)
    port: int = Field(ge=0, le=65535)

    @classmethod
    def parse(cls, text: str) -> "Endpoint":
        host, sep, port = text.rpartition(":")
        if not sep or not port.isdigit():
            raise ValueError(f"expected HOST:PORT, got {text!r}")
        return cls(host=host.strip("[]") or "127.0.0.1", port=int(port))

    def __str__(self) -> str:
        return f"{self.host}:{self.port}"


class CliConfig(BaseModel):
    """Validated options for run_server / run_client."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    mode: Literal["client", "server"]
    endpoint: Endpoint
    param_set: str = Field(description="Built-in parameter-set name or parameter-set file path")
    negotiate: bool = False
    eager: bool = Field(default=False, description="Server sends Y2 before reading Y1")

    # Password sources; exactly one must be set
    password_env: str | None = Field(default=None, description="Environment variable holding the password")
    password_prompt: bool = False
    password: SecretStr | None = Field(default=None, description="Plaintext password, tests only")

    seed: int | None = Field(default=None, description="Deterministic RNG seed, toy sets only")
    max_sessions: int | None = Field(default=None, ge=1)
    handshake_timeout: float = Field(default=10.0, gt=0)

    @model_validator(mode="after")
    def _check_sources(self) -> "CliConfig":
        sources = [self.password_env is not None, self.password_prompt, self.password is not None]
        if sum(sources) != 1:
            raise ValueError(
                "exactly one password source is required (--password-env, prompt or --password)"
            )
        if self.eager and self.mode != "server":
            raise ValueError("--eager applies to the server only")
        if self.seed is not None and not self.resolve_params().is_toy:
            raise ValueError("--seed is only permitted with toy parameter sets")
        return self

    def resolve_params(self) -> GroupParams:
        """Raises UnknownParamSet, ParamsFileError or InvalidParams."""
        return resolve_params(self.param_set)

    def read_password(self, prompt: Callable[[], str] | None = None) -> bytes:
        """Fetch the password from the configured source.

        Raises:
            EmptyPassword: the source is empty or the variable is unset
        """
        if self.password is not None:
            value = self.password.get_secret_value()
        elif self.password_env is not None:
            value = os.environ.get(self.password_env, "")
            if not value:
                raise EmptyPassword(f"environment variable {self.password_env} is unset or empty")
        else:
            if prompt is None:
                raise EmptyPassword("no prompt available for the password")
            value = prompt()
        if not value:
            raise EmptyPassword("password must not be empty")
        return value.encode("utf-8")
