# ddhpake - DDH-based password-authenticated key exchange
from .settings import settings

__all__ = ["settings"]
