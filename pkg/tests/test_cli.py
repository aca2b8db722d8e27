"""Tests for the command-line front end."""

import csv
import io
import json
import math
import subprocess
import sys

import pytest

from landau_wigner import __version__
from landau_wigner.cli import (EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, OUTDIR_ENV, UsageError,
                               main, parse_range)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def data_rows(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.reader(io.StringIO("\n".join(lines)))
    header = next(reader)
    return header, [row for row in reader]


class TestParseRange:
    def test_forms(self):
        assert parse_range("0:1:0.25") == [0.0, 0.25, 0.5, 0.75, 1.0]
        assert parse_range("0,1,10") == [0.0, 1.0, 10.0]
        assert parse_range("2.5") == [2.5]
        assert len(parse_range("0:20:0.1")) == 201

    @pytest.mark.parametrize("bad", ["", "a", "0:1", "0:1:0", "1:0:0.1", "0:1:-1"])
    def test_rejects(self, bad):
        with pytest.raises(UsageError):
            parse_range(bad)


class TestExitCodes:
    def test_usage_errors(self, capsys):
        assert run_cli(capsys, "basis", "--bogus")[0] == EXIT_USAGE
        assert run_cli(capsys, "nonexistent")[0] == EXIT_USAGE
        assert run_cli(capsys, "fig1", "--level", "0")[0] == EXIT_USAGE
        assert run_cli(capsys, "state-info", "--state", "pure:0:1:+")[0] == EXIT_USAGE
        assert run_cli(capsys, "gaussian", "--z", "1.5")[0] == EXIT_USAGE
        assert run_cli(capsys, "thermo", "--mu", "1", "--kappa", "-1")[0] == EXIT_USAGE

    def test_numerical_failure(self, capsys):
        code, _, err = run_cli(capsys, "fig-thermal-info", "--mu", "1e-7", "--kappa", "0")
        assert code == EXIT_NUMERICAL and "numerical failure" in err

    def test_version(self, capsys):
        code, out, _ = run_cli(capsys, "--version")
        assert code == 0 and __version__ in out

    def test_gnuplot_needs_file(self, capsys, monkeypatch, tmp_path):
        monkeypatch.delenv(OUTDIR_ENV, raising=False)
        code = main(["fig-gaussian-info", "--z", "0,0.5", "--gnuplot", str(tmp_path / "x.gp")])
        assert code == EXIT_USAGE


class TestOutputs:
    def test_header_and_determinism(self, capsys):
        code, first, _ = run_cli(capsys, "gaussian", "--z", "0:0.9:0.3")
        _, second, _ = run_cli(capsys, "gaussian", "--z", "0:0.9:0.3")
        assert code == EXIT_OK and first == second
        assert first.startswith(f"# landau-wigner {__version__}")
        assert "# subcommand: gaussian" in first
        header, rows = data_rows(first)
        assert len(rows) == 4
        dev = header.index("max_abs_dev")
        assert all(float(r[dev]) < 1e-9 for r in rows)

    def test_basis_exact(self, capsys):
        code, out, _ = run_cli(capsys, "basis", "--nmax", "2", "--exact-only")
        assert code == EXIT_OK
        header, rows = data_rows(out)
        assert len(rows) > 0

    def test_state_info_identity(self, capsys):
        code, out, _ = run_cli(capsys, "state-info", "--state", "pure:2:1:+", "--state",
                               "mixed:2", "--state", "gaussian:0.5", "--m", "0.7")
        assert code == EXIT_OK
        header, rows = data_rows(out)
        idx = {k: header.index(k) for k in ("purity", "entropy_ps", "entropy_sp", "mutual_info")}
        for r in rows:
            p, ips, isp, m = (float(r[idx[k]]) for k in
                              ("purity", "entropy_ps", "entropy_sp", "mutual_info"))
            assert m == pytest.approx(ips + isp - (1 - p), abs=1e-11)
        assert float(rows[1][idx["purity"]]) == pytest.approx(0.25)

    def test_fig1_phi_symmetry(self, capsys):
        code, out, _ = run_cli(capsys, "fig1", "--massless", "--grid", "21")
        assert code == EXIT_OK
        header, rows = data_rows(out)
        assert len(rows) == 21
        for q in ("M", "C2", "C"):
            a = header.index(f"{q}_phi_sin2=0.25")
            b = header.index(f"{q}_phi_sin2=0.75")
            for r in rows:
                assert float(r[a]) == pytest.approx(float(r[b]), abs=1e-11)
        c2_cols = [i for i, h in enumerate(header) if h.startswith("C2_")]
        assert all(-1e-12 <= float(r[i]) <= 0.5 + 1e-12 for r in rows for i in c2_cols)

    def test_fig1_endpoints(self, capsys):
        _, out, _ = run_cli(capsys, "fig1", "--grid", "3")
        header, rows = data_rows(out)
        c2 = header.index("C2_theta_sin2=0")
        assert float(rows[0][c2]) == pytest.approx(0.0, abs=1e-12)
        assert float(rows[-1][c2]) == pytest.approx(0.5, abs=1e-12)
        # B = 1 (massless): theta = pi/4 is the disentangled superposition
        half = header.index("C2_theta_sin2=0.5")
        assert float(rows[-1][half]) == pytest.approx(0.0, abs=1e-12)

    def test_thermal_purity_range(self, capsys):
        code, out, _ = run_cli(capsys, "fig-thermal-purity", "--kappa", "0,1,10",
                               "--mu", "0:20:0.1")
        assert code == EXIT_OK
        header, rows = data_rows(out)
        assert len(rows) == 3 * 201
        col = header.index("purity")
        kcol = header.index("kappa")
        for kappa in ("0", "1", "10"):
            vals = [float(r[col]) for r in rows if r[kcol] == kappa]
            assert all(0.0 <= v <= 1.0 for v in vals)
            assert vals[-1] > vals[len(vals) // 2] > vals[1]

    def test_zeta_check(self, capsys):
        code, out, _ = run_cli(capsys, "zeta-check")
        assert code == EXIT_OK
        header, rows = data_rows(out)
        tcol, scol, dcol = header.index("table"), header.index("s"), header.index("abs_diff")
        residue = [r for r in rows if r[tcol] == "residue" and float(r[scol]) == 1.0]
        assert len(residue) == 3
        assert all(float(r[dcol]) < 1e-6 for r in residue)
        dual = [r for r in rows if r[tcol] == "dual"]
        assert dual and all(float(r[dcol]) < 1e-8 for r in dual)

    def test_thermo_rows(self, capsys):
        code, out, _ = run_cli(capsys, "thermo", "--mu", "0,1", "--kappa", "0")
        assert code == EXIT_OK
        header, rows = data_rows(out)
        assert header[:4] == ["mu", "kappa", "Z_direct", "Z_zeta"]
        assert "limit" in rows[0][header.index("flags")]
        assert float(rows[1][header.index("Z_direct")]) == pytest.approx(2.67040681797,
                                                                         rel=1e-11)

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "fig-gaussian-info", "--z", "0,0.5", "--format", "json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["provenance"]["version"] == __version__
        assert len(doc["rows"]) == 2 and "z" in doc["columns"]


class TestFiles:
    def test_outdir_env(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv(OUTDIR_ENV, str(tmp_path))
        assert main(["fig-thermo", "--mu", "0.5,1", "--kappa", "0"]) == EXIT_OK
        assert capsys.readouterr().out == ""
        text = (tmp_path / "fig-thermo.csv").read_text()
        header, rows = data_rows(text)
        assert header == ["mu", "kappa", "U", "C"] and len(rows) == 2

    def test_gnuplot(self, tmp_path):
        out, gp = tmp_path / "g.csv", tmp_path / "g.gp"
        assert main(["fig-gaussian-info", "--z", "0:0.9:0.1", "--out", str(out),
                     "--gnuplot", str(gp)]) == EXIT_OK
        script = gp.read_text()
        assert "'g.csv'" in script and "plot" in script

    def test_module_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "landau_wigner", "gaussian", "--z", "0.5"],
                              capture_output=True, text=True, check=False)
        assert proc.returncode == 0
        assert math.isfinite(float(proc.stdout.strip().splitlines()[-1].split(",")[1]))
