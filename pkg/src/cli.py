"""ddhpake CLI - password-authenticated key exchange demo and verification harness.

Usage:
    ddhpake server --listen 127.0.0.1:7461 --params toy23 --password-env PAKE_PASSWORD
    ddhpake client --connect 127.0.0.1:7461 --params toy23 --password-env PAKE_PASSWORD
    ddhpake oracle run --params toy23 --trials 100 --seed 0
    ddhpake params show modp2048
    ddhpake params check ./my.params
    ddhpake params derive-h ./my.params

Session lines (``ACCEPT <hex8>`` / ``REJECT <reason>``) and oracle report lines
go to stdout; tables, warnings and structured logs go to stderr.
"""

import sys
from pathlib import Path
from typing import Any, NoReturn

import click
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from src.config import settings
from src.config.logging import get_logger, setup_logging
from src.errors import EXIT_PROTOCOL_ERROR, InvalidParams, PakeError, disposition_for
from src.group import GroupParams, derive_h_value, dump_params_file, load_params_file, resolve_params
from src.net import CliConfig, Endpoint, run_client, run_server
from src.oracle import OracleReport, run_oracles

console = Console(stderr=True)
logger = get_logger(__name__)

EXIT_ORACLE_FAILED = 1


def _endpoint(ctx: click.Context, param: click.Parameter, value: str | None) -> Endpoint | None:
    if value is None:
        return None
    try:
        return Endpoint.parse(value)
    except ValueError as e:
        raise click.BadParameter(str(e)) from None


def _prompt_password() -> str:
    return click.prompt("Password", hide_input=True, err=True)


def _fail(error: BaseException) -> NoReturn:
    """Print a library failure and exit with its code."""
    disposition = disposition_for(error)
    console.print(f"[red]Error ({disposition.reason}): {error}[/red]")
    if isinstance(error, InvalidParams):
        for violation in error.violations:
            console.print(f"  [red]-[/red] {violation}")
    sys.exit(disposition.exit_code)


def _build_config(**fields: Any) -> CliConfig:
    if fields.get("password") is not None:
        console.print(
            "[yellow]Warning: --password exposes the password in the process list; "
            "use it for scripted tests only.[/yellow]"
        )
    fields["password_prompt"] = fields.get("password") is None and fields.get("password_env") is None
    try:
        return CliConfig(**fields)
    except ValidationError as e:
        for err in e.errors():
            console.print(f"[red]Invalid options: {err['msg']}[/red]")
        sys.exit(EXIT_PROTOCOL_ERROR)
    except PakeError as e:
        _fail(e)


def _session_options(func: Any) -> Any:
    """Options shared by server and client."""
    options = [
        click.option("--params", "param_set", default=None, help="Built-in set name or parameter-set file"),
        click.option("--negotiate", is_flag=True, help="Negotiate g and h by commit-reveal"),
        click.option("--password-env", default=None, help="Environment variable holding the password"),
        click.option("--password", default=None, help="Plaintext password (tests only, insecure)"),
        click.option("--seed", type=int, default=None, help="Deterministic RNG seed (toy sets only)"),
        click.option(
            "--timeout",
            type=float,
            default=None,
            help="Per-message handshake timeout in seconds",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@click.group()
@click.version_option(version="0.1.0", prog_name="ddhpake")
@click.option("--log-level", default=None, help="Override LOG_LEVEL")
def main(log_level: str | None) -> None:
    """ddhpake - DDH-based password-authenticated key exchange.

    A server and client that authenticate each other from a shared password and
    agree on a session key, plus an exhaustive verification harness for toy
    groups.
    """
    setup_logging(log_level)


@main.command()
@click.option("--listen", callback=_endpoint, default=None, help="HOST:PORT to listen on")
@_session_options
@click.option("--eager", is_flag=True, help="Send Y2 before reading Y1")
@click.option("--max-sessions", type=int, default=None, help="Stop after N sessions")
def server(
    listen: Endpoint | None,
    param_set: str | None,
    negotiate: bool,
    password_env: str | None,
    password: str | None,
    seed: int | None,
    timeout: float | None,
    eager: bool,
    max_sessions: int | None,
) -> None:
    """Accept handshakes; one ACCEPT or REJECT line per session."""
    config = _build_config(
        mode="server",
        endpoint=listen or Endpoint(host=settings.listen_host, port=settings.listen_port),
        param_set=param_set or settings.default_params,
        negotiate=negotiate,
        eager=eager,
        password_env=password_env,
        password=password,
        seed=seed,
        max_sessions=max_sessions,
        handshake_timeout=timeout or settings.handshake_timeout_seconds,
    )
    logger.info("starting_server", endpoint=str(config.endpoint), params=config.param_set)
    try:
        exit_code = run_server(config, prompt=_prompt_password)
    except KeyboardInterrupt:
        console.print("\n[yellow]Server stopped.[/yellow]")
        exit_code = 0
    sys.exit(exit_code)


@main.command()
@click.option("--connect", "connect_to", callback=_endpoint, default=None, help="HOST:PORT of the server")
@_session_options
def client(
    connect_to: Endpoint | None,
    param_set: str | None,
    negotiate: bool,
    password_env: str | None,
    password: str | None,
    seed: int | None,
    timeout: float | None,
) -> None:
    """Run one handshake; exit 0 on success, 2 on authentication failure, 3 otherwise."""
    config = _build_config(
        mode="client",
        endpoint=connect_to or Endpoint(host=settings.listen_host, port=settings.listen_port),
        param_set=param_set or settings.default_params,
        negotiate=negotiate,
        password_env=password_env,
        password=password,
        seed=seed,
        handshake_timeout=timeout or settings.handshake_timeout_seconds,
    )
    sys.exit(run_client(config, prompt=_prompt_password))


@main.group()
def oracle() -> None:
    """Exhaustive verification harness."""


def _report_table(reports: list[OracleReport]) -> Table:
    table = Table(show_header=True, header_style="bold")
    table.add_column("Check")
    table.add_column("Status")
    table.add_column("Cases", justify="right")
    table.add_column("Anomalies", justify="right")
    table.add_column("Counterexample")
    for report in reports:
        status = "[green]PASS[/green]" if report.passed else "[red]FAIL[/red]"
        counterexample = ", ".join(f"{k}={v}" for k, v in (report.counterexample or {}).items())
        table.add_row(report.name, status, str(report.cases), str(report.anomalies), counterexample)
    return table


@oracle.command("run")
@click.option("--params", "param_set", default="toy23", show_default=True, help="Set name or file")
@click.option("--trials", type=int, default=None, help="Replay experiment trials")
@click.option("--seed", type=int, default=None, help="Oracle RNG seed")
def oracle_run(param_set: str, trials: int | None, seed: int | None) -> None:
    """Run every check; exit 0 iff all hold."""
    try:
        group = resolve_params(param_set)
    except PakeError as e:
        _fail(e)

    reports = run_oracles(
        group,
        trials=trials if trials is not None else settings.oracle_trials,
        seed=seed if seed is not None else settings.oracle_seed,
    )
    for report in reports:
        click.echo(report.line)
    console.print(_report_table(reports))

    if all(report.passed for report in reports):
        console.print("[bold green]All oracle checks passed.[/bold green]")
        sys.exit(0)
    console.print("[bold red]Oracle checks failed.[/bold red]")
    sys.exit(EXIT_ORACLE_FAILED)


@main.group()
def params() -> None:
    """Inspect and validate parameter sets."""


def _params_table(group: GroupParams) -> Table:
    table = Table(show_header=True, header_style="bold")
    table.add_column("Field")
    table.add_column("Value", overflow="fold")
    table.add_row("name", group.name)
    table.add_row("bits(p)", str(group.p.bit_length()))
    table.add_row("W", f"{group.width} bytes")
    table.add_row("toy", "[yellow]yes (no security)[/yellow]" if group.is_toy else "no")
    for field in ("p", "q", "g", "h"):
        table.add_row(field, f"{getattr(group, field):x}")
    if group.gb != group.g:
        table.add_row("gb", f"{group.gb:x}")
    return table


@params.command("show")
@click.argument("name_or_path")
def params_show(name_or_path: str) -> None:
    """Print a validated parameter set in file format."""
    try:
        group = resolve_params(name_or_path)
    except PakeError as e:
        _fail(e)
    console.print(_params_table(group))
    click.echo(dump_params_file(group), nl=False)


@params.command("check")
@click.argument("path", type=click.Path(dir_okay=False, path_type=Path))
def params_check(path: Path) -> None:
    """Validate a parameter-set file, listing every violated invariant."""
    try:
        group = load_params_file(path)
    except PakeError as e:
        _fail(e)
    console.print(Panel.fit(f"[bold green]{path}: valid ({group.name})[/bold green]", border_style="green"))
    click.echo(f"OK {group.name}")


@params.command("derive-h")
@click.argument("name_or_path")
def params_derive_h(name_or_path: str) -> None:
    """Derive h from g with the hash-to-subgroup procedure."""
    try:
        group = resolve_params(name_or_path)
        h = derive_h_value(group.g, group.p, group.q)
    except PakeError as e:
        _fail(e)
    click.echo(f"{h:x}")


if __name__ == "__main__":
    main()
