"""Exhaustive verification harness for toy parameter sets."""

from .algebra import exhaustive_km_check, masking_bijection_check, mismatch_anomaly_census
from .dlog import dlog_bruteforce, dlog_exhaustive_check
from .replay import replay_experiment, tamper_suite
from .report import OracleReport, require_enumerable
from .runner import run_oracles

__all__ = [
    "OracleReport",
    "dlog_bruteforce",
    "dlog_exhaustive_check",
    "exhaustive_km_check",
    "masking_bijection_check",
    "mismatch_anomaly_census",
    "replay_experiment",
    "require_enumerable",
    "run_oracles",
    "tamper_suite",
]
