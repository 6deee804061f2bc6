"""Runs every oracle check and collects the reports.

Usage:
    reports = run_oracles(get_param_set("toy23"), trials=100, seed=0)
    for report in reports:
        print(report.line)
    exit_code = 0 if all(r.passed for r in reports) else 1
"""

from collections.abc import Callable

from src.config.logging import get_logger
from src.errors import OracleAssertionFailure
from src.group import GroupParams, seeded_source

from .algebra import exhaustive_km_check, masking_bijection_check, mismatch_anomaly_census
from .dlog import dlog_exhaustive_check
from .replay import replay_experiment, tamper_suite
from .report import OracleReport

logger = get_logger(__name__)


def _run_check(name: str, check: Callable[[], OracleReport]) -> OracleReport:
    try:
        report = check()
    except OracleAssertionFailure as e:
        logger.error("oracle_check_failed", check=e.check, counterexample=e.counterexample)
        return OracleReport(name=name, cases=1, failures=1, counterexample=e.counterexample)
    logger.info("oracle_check_passed", check=report.name, cases=report.cases, anomalies=report.anomalies)
    return report


def run_oracles(params: GroupParams, trials: int = 100, seed: int = 0) -> list[OracleReport]:
    """Deterministic in (params, trials, seed).

    Enumerating checks and the tamper suite only run on toy sets; larger sets
    get the replay experiment alone.
    """
    checks: list[tuple[str, Callable[[], OracleReport]]] = []
    if params.is_toy:
        checks += [
            ("dlog_exhaustive", lambda: dlog_exhaustive_check(params)),
            ("exhaustive_km", lambda: exhaustive_km_check(params)),
            ("mismatch_census", lambda: mismatch_anomaly_census(params)),
            ("masking_bijection", lambda: masking_bijection_check(params)),
            ("tamper", lambda: tamper_suite(params, seeded_source(seed))),
        ]
    else:
        logger.info("oracle_enumeration_skipped", params=params.name, q_bits=params.q.bit_length())
    checks.append(("replay", lambda: replay_experiment(params, trials, seeded_source(seed))))
    return [_run_check(name, check) for name, check in checks]
