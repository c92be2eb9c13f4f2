"""Command-line interface: subcommands, output formats, exit codes."""

import json

import pytest

from gradelab.cli import main, parse_model, parse_prior
from gradelab.dist import triangular_kernel, truncated_normal_prior, zero_noise


class TestSpecParsing:
    def test_prior_specs(self):
        assert parse_prior("uniform").kind == "uniform"
        assert parse_prior("tnorm:0.65:0.12") == truncated_normal_prior(0.65, 0.12)
        with pytest.raises(ValueError):
            parse_prior("tnorm:0.65")

    def test_model_specs(self):
        assert parse_model("tri:0.1") == triangular_kernel(0.1)
        assert parse_model("tri:0.1:raw") == triangular_kernel(0.1, renormalize=False)
        assert parse_model("tnorm:0.015").gamma_noise == 0.015
        assert parse_model("zero") == zero_noise()
        with pytest.raises(ValueError):
            parse_model("cauchy:0.1")


class TestPerf:
    def test_monte_carlo_json(self, capsys):
        code = main(
            "perf --model tri:0.1 --scheme ulg:4 --alpha-m 0.7 --alpha-d 0.2 "
            "--n 500 --seed 4".split()
        )
        assert code == 0
        out = json.loads(capsys.readouterr().out)
        assert out["method"] == "monte_carlo" and out["n"] == 500
        assert out["ci95_lo"] <= out["mean"] <= out["ci95_hi"]

    def test_quadrature_path(self, capsys):
        code = main("perf --model tri:0.1 --scheme ns --alpha-m 0.5 --alpha-d 0.5 --method quad".split())
        assert code == 0
        out = json.loads(capsys.readouterr().out)
        assert out["method"] == "quadrature" and abs(out["mean"]) < 1e-8

    def test_validation_error_exits_1(self, capsys):
        assert main("perf --alpha-m 1.5".split()) == 1
        assert "error:" in capsys.readouterr().err

    def test_convergence_failure_exits_2(self, capsys):
        code = main(
            "perf --prior tnorm:0.65:0.12 --model tnorm:0.015 --scheme ulg:8 "
            "--alpha-m 0.7 --alpha-d 0.2 --method quad --tol 1e-30".split()
        )
        assert code == 2
        assert "error:" in capsys.readouterr().err


class TestCheck:
    def test_report_to_stdout(self, capsys):
        code = main("check --theorem t1 --model tri:0.1 --T 8 --alpha-m 0.7 --alpha-d 0.2".split())
        assert code == 0
        out = json.loads(capsys.readouterr().out)
        assert out["theorem"] == "t1" and out["status"] == "verified"

    def test_report_to_file(self, tmp_path, capsys):
        path = tmp_path / "verdict.json"
        code = main(
            f"check --theorem t4 --model rect:0.02:raw --T 8 --alpha-m 0.2 --alpha-d 0.8 --out {path}".split()
        )
        assert code == 0
        report = json.loads(path.read_text())
        assert report["hypotheses_pass"] is True
        assert report["status"] == "verified"


class TestSweepAndReproduce:
    def test_sweep_from_config_file(self, tmp_path, capsys):
        cfg = {
            "prior": {"kind": "uniform"},
            "model": {"kind": "symmetric_kernel", "shape": "triangular", "width": 0.1},
            "schemes": ["ns", "ulg:4"],
            "alpha_m": [0.2, 0.8],
            "alpha_d": 0.5,
            "r": [2],
            "n": 100,
            "seed": 0,
            "scale": 1,
            "sweep": {"axis": "alpha_m"},
        }
        cfg_path = tmp_path / "cfg.json"
        cfg_path.write_text(json.dumps(cfg))
        out_path = tmp_path / "rows.csv"
        assert main(["sweep", "--config", str(cfg_path), "--out", str(out_path)]) == 0
        lines = out_path.read_text().strip().splitlines()
        assert len(lines) == 5  # header + 2 values x 2 schemes

    def test_bad_config_exits_1(self, tmp_path, capsys):
        cfg_path = tmp_path / "cfg.json"
        cfg_path.write_text("{\"prior\": {\"kind\": \"beta\"}}")
        assert main(["sweep", "--config", str(cfg_path), "--out", str(tmp_path / "x.csv")]) == 1

    def test_missing_config_exits_1(self, tmp_path):
        assert main(["sweep", "--config", str(tmp_path / "nope.json"), "--out", str(tmp_path / "x.csv")]) == 1

    def test_reproduce_writes_csv(self, tmp_path, capsys):
        assert main(["reproduce", "--figure", "fig1d", "--out-dir", str(tmp_path), "--seed", "2"]) == 0
        printed = capsys.readouterr().out.strip()
        assert printed.endswith("fig1d.csv")
        assert (tmp_path / "fig1d.csv").exists()
        assert (tmp_path / "fig1d.config.json").exists()
