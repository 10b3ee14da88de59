import json
import math

import pytest

from schwarzlab import acceptance
from schwarzlab import robertson as rc
from schwarzlab.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBound:
    def test_alpha_zero(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--alpha", "0")
        assert code == 0
        rep = json.loads(out)
        assert rep["results"]["S_norm_bound"] == 2.0
        assert rep["results"]["P_norm_bound"] == 4.0
        assert rep["results"]["regime"] == "small"
        assert rep["results"]["delta"] is None

    def test_quarter_pi(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--alpha", "pi/4")
        rep = json.loads(out)
        assert abs(rep["results"]["S_norm_bound"] - 4.0) < 1e-12
        assert abs(rep["results"]["delta"] - (math.sqrt(2) - 1)) < 1e-12
        assert rep["results"]["regime"] == "large"

    def test_pi_sixth_branch_agreement(self, capsys):
        _, out, _ = run_cli(capsys, "bound", "--alpha", "pi/6")
        rep = json.loads(out)
        assert abs(rep["results"]["S_norm_bound"] - 2.0 * math.sqrt(3)) < 1e-12

    def test_pointwise_bound_with_z(self, capsys):
        _, out, _ = run_cli(capsys, "bound", "--alpha", "0", "--z", "0.5")
        rep = json.loads(out)
        assert abs(rep["results"]["pointwise_bound"] - 2.0 / 0.75**2) < 1e-12

    def test_alpha_out_of_range(self, capsys):
        code, _, err = run_cli(capsys, "bound", "--alpha", "pi/2")
        assert code == 2
        assert "alpha" in err


class TestNorm:
    def test_f0_schwarzian_sharpness(self, capsys):
        code, out, _ = run_cli(capsys, "norm", "--spec", "f0(alpha=pi/3)",
                               "--kind", "schwarzian")
        assert code == 0
        rep = json.loads(out)
        assert rep["results"]["ratio"] >= 0.99
        assert rep["results"]["boundary_attained"] is True

    def test_identity_pre(self, capsys):
        _, out, _ = run_cli(capsys, "norm", "--spec", "identity", "--kind", "pre")
        rep = json.loads(out)
        assert rep["results"]["value"] == 0.0
        assert rep["results"]["bound"] is None

    def test_extremal_interval(self, capsys):
        _, out, _ = run_cli(capsys, "norm", "--spec", "fz0p(alpha=0, z0=0.7)",
                            "--kind", "schwarzian")
        rep = json.loads(out)
        assert 2.0 * 0.99 <= rep["results"]["value"] <= 2.0 + 1e-3

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "norm", "--spec", "f0(alpha=", "--kind", "pre")
        assert code == 2
        assert "offset" in err

    def test_build_domain_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "norm", "--spec", "fz0p(alpha=pi/3, z0=0.5)",
                               "--kind", "schwarzian")
        assert code == 2
        assert "delta" in err

    def test_custom_grid_flags(self, capsys):
        code, out, _ = run_cli(capsys, "norm", "--spec", "f0(alpha=0.9)",
                               "--kind", "schwarzian", "--radii", "16",
                               "--angles", "32", "--rmax", "0.99")
        assert code == 0
        rep = json.loads(out)
        assert rep["params"]["radii"] == 16


class TestExtremal:
    def test_convex_case(self, capsys):
        code, out, _ = run_cli(capsys, "extremal", "--alpha", "0", "--z0", "0.5")
        assert code == 0
        rep = json.loads(out)
        assert abs(rep["results"]["b"] - 0.8) < 1e-14
        assert rep["results"]["p"] == -1
        assert abs(rep["results"]["s0"] - 0.25) < 1e-14
        assert abs(rep["results"]["attained_value"] - 32.0 / 9.0) < 1e-12
        assert rep["results"]["membership_min"] > -1e-9

    def test_gate_violation_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "extremal", "--alpha", "pi/3", "--z0", "0.5")
        assert code == 2
        assert "delta" in err


class TestSweep:
    def test_sweep_csv(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, out, _ = run_cli(capsys, "sweep", "--alpha-min=-pi/3",
                               "--alpha-max=pi/3", "--steps", "7",
                               "--out", str(out_path))
        assert code == 0
        text = out_path.read_text()
        lines = text.strip().split("\n")
        assert lines[0] == ("alpha,regime,delta,S_norm_bound,P_norm_bound,"
                            "numeric_S_norm_of_f0,numeric_sharpness_ratio")
        assert len(lines) == 8
        rows = [line.split(",") for line in lines[1:]]
        mid = rows[3]
        assert float(mid[0]) == 0.0
        assert float(mid[3]) == 2.0
        assert mid[2] == ""  # delta blank in the small regime
        # S bound column symmetric about alpha = 0 (up to the last-ulp
        # asymmetry of the linspace grid itself)
        for r_neg, r_pos in zip(rows, rows[::-1]):
            assert float(r_neg[0]) == pytest.approx(-float(r_pos[0]), abs=1e-15)
            assert float(r_neg[3]) == pytest.approx(float(r_pos[3]), rel=1e-14)
        for r in rows:
            if r[1] == "large":
                assert float(r[6]) >= 0.99

    def test_sweep_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run_cli(capsys, "sweep", "--alpha-min", "0.1", "--alpha-max", "0.9",
                "--steps", "3", "--out", str(a))
        run_cli(capsys, "sweep", "--alpha-min", "0.1", "--alpha-max", "0.9",
                "--steps", "3", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestVerify:
    def test_full_run_passes(self, capsys, tmp_path):
        out_path = tmp_path / "verify.json"
        code, out, err = run_cli(capsys, "verify", "--out", str(out_path))
        assert code == 0
        rep = json.loads(out)
        assert rep["passed"] is True
        assert rep["version"]
        assert rep["grid"]["n_radii"] == 64
        assert len(rep["criteria"]) == len(acceptance.criterion_names())
        assert out_path.read_text() == out
        assert err.count("PASS") == len(rep["criteria"])

    def test_injected_sign_error_fails_domination(self, monkeypatch):
        # mutation sanity: a wrong pointwise bound must be caught
        good = rc.pointwise_bound
        monkeypatch.setattr(rc, "pointwise_bound",
                            lambda alpha, r: good(alpha, r) - 0.5)
        result = acceptance.run_criterion("pointwise_domination", seed=0)
        assert not result.passed

    def test_failed_verify_exits_1(self, capsys, monkeypatch):
        failed = acceptance.AcceptanceReport(
            seed=0,
            results=(acceptance.CriterionResult("stub", False, "forced", 0.0),),
        )
        monkeypatch.setattr(acceptance, "run_all", lambda seed=None: failed)
        code, out, _ = run_cli(capsys, "verify")
        assert code == 1
        assert json.loads(out)["passed"] is False


class TestDeterminism:
    def test_bound_byte_identical(self, capsys):
        _, out1, _ = run_cli(capsys, "bound", "--alpha", "pi/5")
        _, out2, _ = run_cli(capsys, "bound", "--alpha", "pi/5")
        assert out1 == out2

    def test_norm_byte_identical(self, capsys):
        args = ("norm", "--spec", "f0(alpha=1.1)", "--kind", "schwarzian")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2


@pytest.fixture(scope="module")
def server_url():
    import threading
    import time

    import uvicorn

    from schwarzlab.service import app

    config = uvicorn.Config(app, host="127.0.0.1", port=8731, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    for _ in range(100):
        if server.started:
            break
        time.sleep(0.05)
    assert server.started
    yield "http://127.0.0.1:8731"
    server.should_exit = True
    thread.join(timeout=3)


class TestRemoteServer:
    def test_remote_matches_in_process(self, capsys, server_url):
        code, remote_out, _ = run_cli(capsys, "bound", "--alpha", "pi/4",
                                      "--server", server_url)
        assert code == 0
        _, local_out, _ = run_cli(capsys, "bound", "--alpha", "pi/4")
        assert remote_out == local_out

    def test_remote_domain_error_exits_2(self, capsys, server_url):
        code, _, err = run_cli(capsys, "extremal", "--alpha", "pi/3",
                               "--z0", "0.5", "--server", server_url)
        assert code == 2
        assert "delta" in err


class TestSeedHandling:
    def test_env_seed_default(self, monkeypatch):
        monkeypatch.setenv("SCHWARZIAN_LAB_SEED", "7")
        assert acceptance.seed_from_env() == 7
        monkeypatch.delenv("SCHWARZIAN_LAB_SEED")
        assert acceptance.seed_from_env() == 0

    def test_criterion_deterministic_for_fixed_seed(self):
        a = acceptance.run_criterion("dieudonne_equality", seed=3)
        b = acceptance.run_criterion("dieudonne_equality", seed=3)
        assert a.detail == b.detail
