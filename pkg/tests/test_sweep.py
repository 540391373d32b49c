import csv
import math
import subprocess
import sys

import numpy as np
import pytest

from qswitch.cli import main, read_config
from qswitch.coherence import c_delta_closed, generic_l1
from qswitch.errors import InvalidSpec
from qswitch.sweep import PRESETS, SweepRow, SweepSpec, format_csv, preset, run_sweep, states_for, write_csv
from qswitch.switch import EXAMPLE_A, EXAMPLE_B


def read_rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


class TestSpec:
    @pytest.mark.parametrize(
        "changes,field",
        [
            ({"figure_id": "9z"}, "figure_id"),
            ({"measure": "bogus"}, "measure"),
            ({"t_range": (0.0, 1.0, 1)}, "t_range"),
            ({"t_range": (1.0, 0.0, 5)}, "t_range"),
            ({"a_range": (0.0, 1.0, 1)}, "a_range"),
            ({"dz": -0.1}, "dz"),
            ({"shots": 10}, "shots"),
        ],
    )
    def test_invalid(self, changes, field):
        with pytest.raises(InvalidSpec) as err:
            SweepSpec(**changes).validate()
        assert err.value.field == field

    def test_presets(self):
        assert preset("2d").dz == 0.5 and preset("2d").a_range is not None
        assert preset("2e").measure == "re" and preset("2e").a_range is None
        assert preset("3b").measure == "delta"
        assert set(PRESETS) == {"2a", "2b", "2c", "2d", "2e", "2f", "2g", "2h", "3a", "3b"}

    def test_parametrized_states(self):
        a, b = states_for(math.pi / 4)
        assert abs(a.alpha - b.alpha) < 1e-15 and abs(a.beta - b.beta) < 1e-15
        a, b = states_for(0.3)
        assert a.alpha == pytest.approx(math.sin(0.3)) and b.alpha == pytest.approx(math.cos(0.3))


class TestRunSweep:
    def test_2b_flat_at_quarter(self):
        rows = run_sweep(preset("2b", t_steps=21, a_steps=21))
        flat = [r.value for r in rows if abs(r.a - math.pi / 4) < 1e-12]
        assert len(flat) == 21
        assert max(flat) - min(flat) <= 1e-9
        assert flat[0] == pytest.approx(3, abs=1e-10)

    def test_2a_endpoints_and_symmetry(self):
        rows = run_sweep(preset("2a"))
        assert rows[0].value == pytest.approx(1.56, abs=1e-9)
        assert rows[-1].value == pytest.approx(1.56, abs=1e-9)
        vals = np.array([r.value for r in rows])
        np.testing.assert_allclose(vals, vals[::-1], atol=1e-9)

    def test_2e_symmetric(self):
        vals = np.array([r.value for r in run_sweep(preset("2e", t_steps=41))])
        np.testing.assert_allclose(vals, vals[::-1], atol=1e-9)

    def test_3a_zero_without_noise(self):
        rows = run_sweep(preset("3a", t_steps=11, dz=0.0))
        assert all(abs(r.value) <= 1e-12 for r in rows)

    def test_3a_matches_generic_difference(self):
        for r in run_sweep(preset("3a", t_steps=11)):
            generic = generic_l1(EXAMPLE_A, EXAMPLE_B, r.t) - generic_l1(EXAMPLE_A, EXAMPLE_B, r.t, 0.5)
            assert abs(r.value - abs(generic)) <= 1e-10
            assert abs(r.value - abs(c_delta_closed(EXAMPLE_A, EXAMPLE_B, r.t, 0.5))) <= 1e-10

    def test_ordering_t_outer(self):
        rows = run_sweep(preset("2d", t_steps=3, a_steps=4))
        assert [(r.t, r.a) for r in rows[:4]] == [(0.0, a) for a in np.linspace(0, math.pi / 2, 4)]

    @pytest.mark.parametrize("fid", sorted(PRESETS))
    def test_values_in_range(self, fid):
        for r in run_sweep(preset(fid, t_steps=9, a_steps=9)):
            assert math.isfinite(r.value) and r.value >= -1e-12

    def test_overlap_measure(self):
        spec = SweepSpec(measure="overlap", t_range=(0, math.pi / 2, 5))
        rows = run_sweep(spec)
        assert rows[0].value == pytest.approx(0.36, abs=1e-12)
        assert all(-1 <= r.value <= 1 for r in rows)
        sampled = run_sweep(SweepSpec(measure="overlap", t_range=(0, math.pi / 2, 5), shots=1000, seed=3))
        assert sampled == run_sweep(SweepSpec(measure="overlap", t_range=(0, math.pi / 2, 5), shots=1000, seed=3))

    def test_repeat_in_process(self):
        assert run_sweep(preset("2h", t_steps=5, a_steps=5)) == run_sweep(preset("2h", t_steps=5, a_steps=5))


class TestCsv:
    def test_single_row(self, tmp_path):
        p = tmp_path / "one.csv"
        write_csv([SweepRow(0.0, 0.0, 0.0, "l1", 0.0)], p)
        assert p.read_text().splitlines() == ["t,a,dz,measure,value", "0,0,0,l1,0"]

    def test_empty_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            write_csv([], tmp_path / "x.csv")

    def test_fixed_state_rows_leave_a_blank(self):
        text = format_csv(run_sweep(preset("2a", t_steps=2)))
        assert text.splitlines()[1] == "0,,0,l1,1.56"

    def test_full_grid_line_count(self, tmp_path):
        p = tmp_path / "grid.csv"
        write_csv(run_sweep(preset("2b")), p)
        assert len(p.read_text().splitlines()) == 101 * 101 + 1

    def test_twelve_significant_digits(self):
        line = format_csv([SweepRow(1 / 3, None, 2 / 3, "re", 0.5)]).splitlines()[1]
        assert line == "0.333333333333,,0.5,re,0.666666666667"


class TestCli:
    def test_figure_writes_file(self, tmp_path):
        out = tmp_path / "f2b.csv"
        assert main(["--figure", "2b", "--t-steps", "5", "--a-steps", "5", "--out", str(out)]) == 0
        rows = read_rows(out)
        assert len(rows) == 25 and rows[0].keys() == {"t", "a", "dz", "measure", "value"}

    def test_invalid_figure(self, capsys):
        assert main(["--figure", "9z"]) == 2
        assert "9z" in capsys.readouterr().err

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as err:
            main(["--nope"])
        assert err.value.code == 2

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for p in (a, b):
            assert main(["--figure", "3a", "--dz", "0.5", "--out", str(p)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_dz_override(self, tmp_path):
        out = tmp_path / "f3a.csv"
        assert main(["--figure", "3a", "--dz", "0", "--t-steps", "4", "--out", str(out)]) == 0
        assert all(abs(float(r["value"])) <= 1e-12 for r in read_rows(out))

    def test_io_failure(self, tmp_path):
        assert main(["--figure", "2a", "--out", str(tmp_path / "missing" / "x.csv")]) == 1

    def test_list_figures(self, capsys):
        assert main(["--list-figures"]) == 0
        out = capsys.readouterr().out
        assert all(fid in out for fid in PRESETS)

    def test_config_with_override(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# sweep\nfigure = 2c\nt_steps = 3\ndz=0.25  # weaker noise\nout = %s\n" % (tmp_path / "cfg.csv"))
        assert main(["--config", str(cfg), "--dz", "0.1"]) == 0
        rows = read_rows(tmp_path / "cfg.csv")
        assert len(rows) == 3 and {r["dz"] for r in rows} == {"0.1"}

    def test_config_errors(self, tmp_path):
        bad = tmp_path / "bad.cfg"
        bad.write_text("colour = blue\n")
        with pytest.raises(InvalidSpec):
            read_config(bad)
        assert main(["--config", str(bad)]) == 2
        assert main(["--config", str(tmp_path / "absent.cfg")]) == 1

    def test_custom_overlap_with_shots(self, tmp_path):
        out = tmp_path / "ov.csv"
        args = ["--figure", "custom", "--shots", "2000", "--seed", "4", "--t-steps", "4", "--out", str(out)]
        assert main(args) == 0
        rows = read_rows(out)
        assert {r["measure"] for r in rows} == {"overlap"}

    def test_extended_window(self, tmp_path):
        out = tmp_path / "ext.csv"
        assert main(["--figure", "2b", "--t-stop", str(math.pi), "--a-stop", str(math.pi), "--t-steps", "3", "--a-steps", "3", "--out", str(out)]) == 0
        assert float(read_rows(out)[-1]["t"]) == pytest.approx(math.pi, abs=1e-11)

    def test_module_entry_point(self, tmp_path):
        out = tmp_path / "m.csv"
        proc = subprocess.run(
            [sys.executable, "-m", "qswitch", "--figure", "2a", "--t-steps", "3", "--out", str(out)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        assert out.exists()
