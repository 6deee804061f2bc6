"""Tests for the ddhpake CLI."""

import pytest
from click.testing import CliRunner

from src.cli import main


@pytest.fixture
def runner():
    return CliRunner()


class TestMain:
    """Tests for the command group."""

    def test_help(self, runner):
        """Test the top-level help lists the commands."""
        result = runner.invoke(main, ["--help"])
        assert result.exit_code == 0
        for command in ("server", "client", "oracle", "params"):
            assert command in result.output

    def test_version(self, runner):
        """Test the version option."""
        result = runner.invoke(main, ["--version"])
        assert result.exit_code == 0
        assert "0.1.0" in result.output


class TestOracleCommand:
    """Tests for `oracle run`."""

    def test_run_toy(self, runner):
        """Test every check passes and exits 0."""
        result = runner.invoke(main, ["oracle", "run", "--params", "toy23", "--trials", "10", "--seed", "1"])
        assert result.exit_code == 0
        assert "PASS exhaustive_km cases=1000 failures=0" in result.output
        assert "PASS mismatch_census cases=9000 failures=0 anomalies=900" in result.output
        assert "PASS replay cases=10 failures=0" in result.output

    def test_unknown_params(self, runner):
        """Test an unknown parameter set exits 3."""
        result = runner.invoke(main, ["oracle", "run", "--params", "nope"])
        assert result.exit_code == 3


class TestParamsCommands:
    """Tests for `params show`, `params check` and `params derive-h`."""

    def test_show(self, runner):
        """Test printing a built-in set in file format."""
        result = runner.invoke(main, ["params", "show", "toy23"])
        assert result.exit_code == 0
        assert "p=17\nq=b\ng=2\nh=4\nname=toy23\n" in result.output

    def test_check_valid(self, runner, tmp_path):
        """Test checking a valid file."""
        path = tmp_path / "toy.params"
        path.write_text("p=17\nq=b\ng=2\nh=4\nname=toy23\n")
        result = runner.invoke(main, ["params", "check", str(path)])
        assert result.exit_code == 0
        assert "OK toy23" in result.output

    def test_check_lists_violations(self, runner, tmp_path):
        """Test every violated invariant is printed."""
        path = tmp_path / "bad.params"
        path.write_text("p=18\nq=9\ng=2\nh=2\nname=bad\n")
        result = runner.invoke(main, ["params", "check", str(path)])
        assert result.exit_code == 3
        assert "p is not prime" in result.output
        assert "q is not prime" in result.output

    def test_derive_h(self, runner):
        """Test deriving h for a built-in set."""
        from src.group import derive_h_value

        result = runner.invoke(main, ["params", "derive-h", "toy23"])
        assert result.exit_code == 0
        assert result.output.strip().endswith(f"{derive_h_value(2, 23, 11):x}")


class TestSessionCommands:
    """Tests for `server` and `client` option handling."""

    def test_two_password_sources(self, runner):
        """Test --password with --password-env is refused."""
        result = runner.invoke(
            main,
            ["client", "--params", "toy23", "--password", "pw", "--password-env", "PW"],
        )
        assert result.exit_code == 3

    def test_seed_with_modp(self, runner):
        """Test --seed is refused for full-size sets."""
        result = runner.invoke(
            main, ["client", "--params", "modp2048", "--password", "pw", "--seed", "1"]
        )
        assert result.exit_code == 3

    def test_bad_endpoint(self, runner):
        """Test a malformed --connect value is a usage error."""
        result = runner.invoke(main, ["client", "--connect", "nohost", "--password", "pw"])
        assert result.exit_code == 2

    def test_unreachable(self, runner):
        """Test an unreachable server exits 3 with REJECT transport."""
        import socket

        with socket.socket() as sock:
            sock.bind(("127.0.0.1", 0))
            port = sock.getsockname()[1]

        result = runner.invoke(
            main,
            ["client", "--connect", f"127.0.0.1:{port}", "--params", "toy23", "--password", "pw"],
        )
        assert result.exit_code == 3
        assert "REJECT transport" in result.output
        assert "Warning" in result.output

    def test_bind_failure(self, runner):
        """Test a port already in use exits 3."""
        import socket

        with socket.socket() as sock:
            sock.bind(("127.0.0.1", 0))
            sock.listen()
            port = sock.getsockname()[1]
            result = runner.invoke(
                main,
                ["server", "--listen", f"127.0.0.1:{port}", "--params", "toy23", "--password", "pw"],
            )
        assert result.exit_code == 3
