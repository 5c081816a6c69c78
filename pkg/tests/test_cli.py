import json

import numpy as np
import pytest

from tunneltimes.cli import main
from tunneltimes.units import angstrom_to_au, ev_to_au


def run_cli(argv, capsys):
    rc = main(argv)
    out, err = capsys.readouterr()
    return rc, out, err


def parse_kv(text):
    """Parse the aligned key-value stream of `times` and `oracle`."""
    pairs = {}
    for line in text.splitlines():
        parts = line.split(None, 1)
        if len(parts) == 2:
            pairs[parts[0]] = parts[1].strip()
    return pairs


class TestTimes:
    def test_rectangular(self, capsys):
        rc, out, _ = run_cli(
            ["times", "--barrier", "rect", "--v0", "1", "--length", "2",
             "--energy", "0.5"],
            capsys,
        )
        assert rc == 0
        kv = parse_kv(out)
        assert kv["barrier"] == "rect"
        assert float(kv["phi"]) == pytest.approx(2.0, rel=1e-9)
        assert float(kv["tau_c_au"]) == pytest.approx(2.0, rel=1e-9)
        assert float(kv["ett_au"]) == pytest.approx(0.1163056766916047, rel=1e-9)
        assert float(kv["p_t_exact"]) == pytest.approx(0.07065082485316446, rel=1e-9)
        assert "phase_time_au" in kv and "dwell_time_au" in kv
        assert kv["positivity_flag"] == "true"

    def test_laser_coulomb(self, capsys):
        rc, out, _ = run_cli(
            ["times", "--barrier", "laser-coulomb", "--field", "0.04",
             "--zeff", "kullie", "--energy", "-0.904"],
            capsys,
        )
        assert rc == 0
        kv = parse_kv(out)
        assert float(kv["x_left_au"]) == pytest.approx(1.64, abs=0.01)
        assert float(kv["x_right_au"]) == pytest.approx(20.96, abs=0.01)
        assert float(kv["tau_c_as"]) == pytest.approx(850.73, rel=0.01)
        assert "phase_time_au" not in kv

    def test_unit_flags(self, capsys):
        rc, out, _ = run_cli(
            ["times", "--barrier", "rect", "--v0", "1.5", "--length", "10",
             "--energy", "1", "--energy-unit", "ev", "--length-unit", "angstrom"],
            capsys,
        )
        assert rc == 0
        kv = parse_kv(out)
        assert float(kv["energy_au"]) == pytest.approx(ev_to_au(1.0), rel=1e-9)
        assert float(kv["x_right_au"]) == pytest.approx(angstrom_to_au(10.0), rel=1e-9)

    def test_tabulated_file(self, tmp_path, capsys):
        xs = np.linspace(1.64, 20.96, 801)
        vs = -1.375 / xs - 0.04 * xs + 0.904
        path = tmp_path / "barrier.dat"
        path.write_text(
            "# x V\n" + "\n".join(f"{x:.17g} {v:.17g}" for x, v in zip(xs, vs))
        )
        rc, out, _ = run_cli(
            ["times", "--barrier", "tabulated", "--file", str(path),
             "--energy", "0.2", "--quad-tol", "1e-8"],
            capsys,
        )
        assert rc == 0
        kv = parse_kv(out)
        assert float(kv["phi"]) == pytest.approx(6.8846533, rel=1e-5)
        assert float(kv["tau_c_au"]) == pytest.approx(31.60058, rel=1e-5)

    def test_tabulated_default_tolerance_too_tight(self, tmp_path, capsys):
        # sampled barriers cannot certify the 1e-10 default; the error must
        # say so rather than return an uncertified number
        xs = np.linspace(1.64, 20.96, 801)
        vs = -1.375 / xs - 0.04 * xs + 0.904
        path = tmp_path / "barrier.dat"
        path.write_text(
            "\n".join(f"{x:.17g} {v:.17g}" for x, v in zip(xs, vs))
        )
        rc, _, err = run_cli(
            ["times", "--barrier", "tabulated", "--file", str(path),
             "--energy", "0.2"],
            capsys,
        )
        assert rc == 3
        assert "QuadratureFailure" in err
        assert "quad_tol" in err

    def test_over_barrier_exit_code(self, capsys):
        rc, _, err = run_cli(
            ["times", "--barrier", "laser-coulomb", "--field", "0.04",
             "--zeff", "kullie", "--energy", "-0.1"],
            capsys,
        )
        assert rc == 3
        assert "OverBarrier" in err

    def test_bad_zeff_exit_code(self, capsys):
        rc, _, err = run_cli(
            ["times", "--barrier", "laser-coulomb", "--field", "0.04",
             "--zeff", "thomas-fermi", "--energy", "-0.904"],
            capsys,
        )
        assert rc == 3
        assert "DomainError" in err

    def test_missing_parameters_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["times", "--barrier", "rect", "--energy", "0.5"])
        assert exc.value.code == 2

    def test_missing_subcommand_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2


class TestTable1:
    def test_stdout_split_streams(self, capsys):
        rc, out, err = run_cli(["table1"], capsys)
        assert rc == 0
        csv_lines = out.splitlines()
        assert len(csv_lines) == 7
        assert csv_lines[0] == "model,field,x_L,x_R,tau_c_as,ett_as"
        assert err.count(" pass") == 24
        assert "all cells within tolerance" in err

    def test_output_file_moves_diff_to_stdout(self, tmp_path, capsys):
        target = tmp_path / "table1.csv"
        rc, out, err = run_cli(["table1", "--output", str(target)], capsys)
        assert rc == 0
        assert err == ""
        assert out.count(" pass") == 24
        assert len(target.read_text().splitlines()) == 7


class TestScans:
    def test_he_scan_header_and_determinism(self, tmp_path, capsys):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for p in paths:
            rc, _, _ = run_cli(["he-scan", "--output", str(p)], capsys)
            assert rc == 0
        first, second = (p.read_text() for p in paths)
        assert first == second
        lines = first.splitlines()
        assert len(lines) == 46
        assert lines[0] == (
            "field,model,ett_as,tau_c_as,exp_width,true_width,phi,keldysh_gamma"
        )

    def test_he_scan_custom_grid(self, capsys):
        rc, out, _ = run_cli(
            ["he-scan", "--steps", "3", "--models", "kullie", "--omega", "0.0228"],
            capsys,
        )
        assert rc == 0
        lines = out.splitlines()
        assert len(lines) == 4
        first = lines[1].split(",")
        assert float(first[0]) == 0.04
        assert float(first[-1]) == pytest.approx(0.7664327759171055, rel=1e-12)

    def test_et_scan_json(self, capsys):
        rc, out, _ = run_cli(["et-scan", "--format", "json"], capsys)
        assert rc == 0
        rows = json.loads(out)
        assert len(rows) == 130
        assert set(rows[0]) == {
            "delta_e_eff", "length_angstrom", "tau_c_fs", "ett_fs", "comparable_flag",
        }

    def test_et_scan_length_grid(self, capsys):
        rc, out, _ = run_cli(
            ["et-scan", "--delta-e", "0.5", "--length-min", "5",
             "--length-max", "10", "--length-steps", "2"],
            capsys,
        )
        assert rc == 0
        lines = out.splitlines()
        assert len(lines) == 3
        assert float(lines[1].split(",")[1]) == 5.0
        assert float(lines[2].split(",")[1]) == 10.0

    def test_et_scan_bad_steps_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["et-scan", "--length-steps", "1"])
        assert exc.value.code == 2


class TestOracle:
    def test_rectangular_cross_check(self, capsys):
        rc, out, _ = run_cli(
            ["oracle", "--barrier", "rect", "--v0", "1", "--length", "2",
             "--energy", "0.5"],
            capsys,
        )
        assert rc == 0
        kv = parse_kv(out)
        p_t = float(kv["p_t"])
        assert p_t == pytest.approx(float(kv["p_t_exact"]), rel=1e-6)
        assert float(kv["flux_error"]) < 1e-9
        assert int(kv["grid_points"]) == 4096

    def test_laser_coulomb_not_offered(self):
        with pytest.raises(SystemExit) as exc:
            main(["oracle", "--barrier", "laser-coulomb", "--field", "0.04",
                  "--energy", "-0.904"])
        assert exc.value.code == 2

    def test_evanescent_lead_exit_code(self, tmp_path, capsys):
        xs = np.linspace(0.0, 2.0, 21)
        path = tmp_path / "lifted.dat"
        path.write_text("\n".join(f"{x:.17g} 0.6" for x in xs))
        rc, _, err = run_cli(
            ["oracle", "--barrier", "tabulated", "--file", str(path),
             "--energy", "0.5"],
            capsys,
        )
        assert rc == 3
        assert "EvanescentLead" in err
