import json
import math

import numpy as np
import pytest

from lorentz_cmc import (
    closed_form_maximal,
    load_obj,
    patch_to_csv,
    patch_from_function,
)
from lorentz_cmc.cli import (
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_UNSOLVABLE,
    EXIT_USAGE,
    dump_config,
    load_config,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def last_record(out):
    return json.loads(out.strip().splitlines()[-1])


class TestSolve:
    def test_solution_record(self, capsys):
        code, out, _ = run(capsys, "solve", "--r", "1", "--R", "2",
                           "--a", "0", "--b", "0.5", "--H", "1")
        assert code == EXIT_OK
        rec = last_record(out)
        assert rec["event"] == "solution"
        assert rec["regime"] == "PositiveC"
        assert rec["c"] > 0.0
        assert rec["residual"] <= 1e-9
        assert rec["flux"] == pytest.approx(2.0 * math.pi * rec["c"], abs=1e-9)

    def test_unsolvable_exits_2(self, capsys):
        code, out, err = run(capsys, "solve", "--r", "1", "--R", "2",
                             "--a", "0", "--b", "1.5", "--H", "1")
        assert code == EXIT_UNSOLVABLE
        assert json.loads(err.strip())["type"] == "NotSpacelikeSolvable"

    def test_degenerate_radii_exits_2(self, capsys):
        code, _, err = run(capsys, "solve", "--r", "2", "--R", "1",
                           "--a", "0", "--b", "0", "--H", "1")
        assert code == EXIT_UNSOLVABLE
        assert json.loads(err.strip())["type"] == "DegenerateRadii"

    def test_plane_solution(self, capsys):
        code, out, _ = run(capsys, "solve", "--r", "1", "--R", "2",
                           "--a", "0", "--b", "0", "--H", "0")
        assert code == EXIT_OK
        rec = last_record(out)
        assert rec["regime"] == "Plane"
        assert rec["c"] == 0.0
        assert rec["flux"] == 0.0

    def test_missing_parameter_is_usage_error(self, capsys):
        code, _, err = run(capsys, "solve", "--r", "1", "--R", "2")
        assert code == EXIT_USAGE
        assert "missing" in err

    def test_human_output(self, capsys):
        code, out, _ = run(capsys, "solve", "--r", "1", "--R", "2",
                           "--a", "0", "--b", "0.5", "--H", "1", "--human")
        assert code == EXIT_OK
        assert "regime" in out and "{" not in out


class TestClassify:
    def test_threshold_and_regime(self, capsys):
        code, out, _ = run(capsys, "classify", "--r", "1", "--R", "2",
                           "--a", "0", "--b", "0.5", "--H", "0.2")
        assert code == EXIT_OK
        rec = last_record(out)
        assert rec["H0"] == pytest.approx(1.0 / math.sqrt(6.5625), abs=1e-12)
        assert rec["regime"] == "NegativeC"
        assert rec["reflected"] is False

    def test_descending_data_reflects(self, capsys):
        code, out, _ = run(capsys, "classify", "--r", "1", "--R", "2",
                           "--a", "0.5", "--b", "0", "--H", "1")
        assert code == EXIT_OK
        rec = last_record(out)
        assert rec["reflected"] is True
        assert rec["regime"] == "PositiveC"


class TestFlux:
    def test_record(self, capsys):
        code, out, _ = run(capsys, "flux", "--r", "2", "--H", "1", "--c", "3")
        assert code == EXIT_OK
        rec = last_record(out)
        assert rec["flux"] == pytest.approx(6.0 * math.pi, abs=1e-12)
        assert rec["closed_numeric_gap"] < 1e-10

    def test_angular_mode(self, capsys):
        code, out, _ = run(capsys, "flux", "--r", "2", "--H", "1", "--c", "3",
                           "--angular")
        assert code == EXIT_OK
        assert last_record(out)["closed_numeric_gap"] < 1e-10


class TestVerify:
    def test_profile_patch(self, capsys):
        code, out, _ = run(capsys, "verify", "--H", "1", "--c", "0",
                           "--extent", "1", "--grid-step", str(1.0 / 64.0))
        assert code == EXIT_OK
        rec = last_record(out)
        assert rec["H_mean"] == pytest.approx(1.0, abs=1e-3)
        assert rec["points_checked"] > 100

    def test_csv_patch(self, tmp_path, capsys):
        xs = np.linspace(-1.0, 1.0, 65)
        fn = lambda X1, X2: (np.sqrt(1.0 + X1**2 + X2**2) - math.sqrt(2.0))
        path = tmp_path / "patch.csv"
        path.write_bytes(patch_to_csv(patch_from_function(fn, xs, xs)))
        code, out, _ = run(capsys, "verify", "--csv", str(path),
                           "--mode", "divergence")
        assert code == EXIT_OK
        rec = last_record(out)
        assert rec["mode"] == "divergence"
        assert rec["H_mean"] == pytest.approx(1.0, abs=2e-3)

    def test_plane_patch_reports_zero(self, tmp_path, capsys):
        xs = np.linspace(-1.0, 1.0, 33)
        patch = patch_from_function(lambda X1, X2: np.full(X1.shape, 0.3), xs, xs)
        path = tmp_path / "plane.csv"
        path.write_bytes(patch_to_csv(patch))
        code, out, _ = run(capsys, "verify", "--csv", str(path))
        assert code == EXIT_OK
        assert last_record(out)["H_mean"] == 0.0

    def test_solved_profile_patch(self, capsys):
        code, out, _ = run(capsys, "verify", "--H", "1", "--c", "3",
                           "--extent", "2.4", "--grid-step", "0.02",
                           "--min-radius", "0.8")
        assert code == EXIT_OK
        assert last_record(out)["H_mean"] == pytest.approx(1.0, abs=2e-3)

    def test_steep_patch_is_internal_error(self, tmp_path, capsys):
        xs = np.linspace(-1.0, 1.0, 17)
        patch = patch_from_function(lambda X1, X2: 1.5 * X1, xs, xs)
        path = tmp_path / "steep.csv"
        path.write_bytes(patch_to_csv(patch))
        code, _, err = run(capsys, "verify", "--csv", str(path))
        assert code == EXIT_INTERNAL
        assert json.loads(err.strip())["type"] == "SpacelikeViolation"


class TestMesh:
    def test_writes_obj(self, tmp_path, capsys):
        out_path = tmp_path / "m.obj"
        code, out, _ = run(capsys, "mesh", "--H", "1", "--c", "3",
                           "--t0", "1", "--t1", "4", "--nt", "8",
                           "--ntheta", "12", "--out", str(out_path))
        assert code == EXIT_OK
        rec = last_record(out)
        assert rec["vertices"] == 8 * 12
        assert rec["euler_characteristic"] == 0
        verts, faces = load_obj(out_path.read_bytes())
        assert verts.shape == (96, 3)


class TestFigures:
    def test_figure1_profile_matches_closed_form(self, tmp_path, capsys):
        code, out, _ = run(capsys, "figure", "1", "--out-dir", str(tmp_path))
        assert code == EXIT_OK
        rec = last_record(out)
        lines = (tmp_path / "figure1_profile.csv").read_text().strip().splitlines()
        assert lines[0] == "t,f,f_prime,first_integral_residual"
        body = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])
        ts = body[:, 0]
        pos = ts > 0
        expected = closed_form_maximal(ts[pos], 3.0, (1.0, 0.0))
        assert np.max(np.abs(body[pos, 1] - expected)) < 1e-12
        assert rec["f_end"] == pytest.approx(body[-1, 1])

    def test_figure2_endpoints(self, tmp_path, capsys):
        code, out, _ = run(capsys, "figure", "2", "--out-dir", str(tmp_path))
        assert code == EXIT_OK
        lines = (tmp_path / "figure2_profile.csv").read_text().strip().splitlines()
        body = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])
        assert body[0, 0] == 0.0 and body[-1, 0] == 4.0
        # rising branch: c < 0 means positive slope everywhere
        assert np.all(body[1:, 2] > 0.0)

    def test_figures_3_and_4_agree_on_shared_window(self, tmp_path, capsys):
        run(capsys, "figure", "3", "--out-dir", str(tmp_path))
        run(capsys, "figure", "4", "--out-dir", str(tmp_path))
        rows3 = {}
        for ln in (tmp_path / "figure3_profile.csv").read_text().strip().splitlines()[1:]:
            t, f, *_ = (float(v) for v in ln.split(","))
            rows3[t] = f
        matched = 0
        for ln in (tmp_path / "figure4_profile.csv").read_text().strip().splitlines()[1:]:
            t, f, *_ = (float(v) for v in ln.split(","))
            if t in rows3:
                matched += 1
                assert f == pytest.approx(rows3[t], abs=1e-10)
        assert matched >= 2  # shared endpoints at t = 1 and t = 4

    def test_figure_obj_written(self, tmp_path, capsys):
        code, out, _ = run(capsys, "figure", "4", "--out-dir", str(tmp_path))
        assert code == EXIT_OK
        rec = last_record(out)
        verts, faces = load_obj((tmp_path / "figure4_surface.obj").read_bytes())
        assert verts.shape[0] == 1 + 63 * 64
        assert rec["interior_minimum_radius"] == pytest.approx(math.sqrt(3.0))
        # the window reaches the axis: first CSV row carries the conical
        # limits (tangent to the lower light cone, slope -1)
        first = (tmp_path / "figure4_profile.csv").read_text().strip().splitlines()[1]
        t0, f0, fp0, _ = (float(v) for v in first.split(","))
        assert t0 == 0.0
        assert fp0 == -1.0
        assert f0 > 0.0

    def test_figures_deterministic(self, tmp_path, capsys):
        run(capsys, "figure", "1", "--out-dir", str(tmp_path / "a"))
        run(capsys, "figure", "1", "--out-dir", str(tmp_path / "b"))
        for name in ("figure1_profile.csv", "figure1_surface.obj"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


class TestConfig:
    def test_round_trip(self, tmp_path):
        values = {"r": 1, "R": 2.5, "b": 0.5, "note": "demo"}
        path = tmp_path / "job.cfg"
        path.write_text(dump_config(values))
        assert load_config(path) == values

    def test_config_file_supplies_parameters(self, tmp_path, capsys):
        cfg = tmp_path / "solve.cfg"
        cfg.write_text("r=1\nR=2\na=0\nb=0.5\nH=1\n")
        code, out, _ = run(capsys, "solve", "--config", str(cfg))
        assert code == EXIT_OK
        assert last_record(out)["regime"] == "PositiveC"

    def test_cli_flags_override_config(self, tmp_path, capsys):
        cfg = tmp_path / "solve.cfg"
        cfg.write_text("r=1\nR=2\na=0\nb=0.5\nH=0.1\n")
        code, out, _ = run(capsys, "solve", "--config", str(cfg), "--H", "1")
        assert code == EXIT_OK
        assert last_record(out)["regime"] == "PositiveC"

    def test_dump_config_records_effective_values(self, tmp_path, capsys):
        dump = tmp_path / "eff.cfg"
        code, _, _ = run(capsys, "solve", "--r", "1", "--R", "2", "--a", "0",
                         "--b", "0.5", "--H", "1", "--dump-config", str(dump))
        assert code == EXIT_OK
        eff = load_config(dump)
        assert eff["H"] == 1.0 and eff["R"] == 2.0

    def test_bad_config_line_rejected(self, tmp_path, capsys):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("this is not a key value pair\n")
        code, _, err = run(capsys, "solve", "--config", str(cfg))
        assert code == EXIT_INTERNAL


class TestEnvTolerance:
    def test_env_var_sets_defaults(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("LORENTZ_CMC_TOL", "1e-6")
        code, out, _ = run(capsys, "solve", "--r", "1", "--R", "2",
                           "--a", "0", "--b", "0.5", "--H", "1")
        assert code == EXIT_OK
        assert last_record(out)["residual"] <= 1e-5

    def test_explicit_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LORENTZ_CMC_TOL", "1e-3")
        code, out, _ = run(capsys, "solve", "--r", "1", "--R", "2",
                           "--a", "0", "--b", "0.5", "--H", "1",
                           "--quad-tol", "1e-10", "--root-tol", "1e-9")
        assert code == EXIT_OK
        assert last_record(out)["residual"] <= 1e-9


class TestUsage:
    def test_unknown_command(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == EXIT_USAGE

    def test_no_command(self, capsys):
        code, _, _ = run(capsys)
        assert code == EXIT_USAGE
