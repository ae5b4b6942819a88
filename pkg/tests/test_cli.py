import json

import numpy as np
import pandas as pd
import pytest
from typer.testing import CliRunner

from fracperiod import __version__
from fracperiod.cli import app, parse_grid
from fracperiod.operators.operator import THREADS_VARIABLE

runner = CliRunner()

HARMONICS = {
    "period": 3.0,
    "harmonics": [
        {"k": 0, "re": 0.5, "im": 0.0},
        {"k": 1, "re": 0.0, "im": -0.5},
        {"k": -1, "re": 0.0, "im": 0.5},
    ],
}


@pytest.fixture(autouse=True)
def single_thread(monkeypatch):
    monkeypatch.setenv(THREADS_VARIABLE, "1")


def invoke(*args):
    return runner.invoke(app, [str(arg) for arg in args])


class TestParseGrid:
    def test_valid(self):
        assert parse_grid("0:50:200") == (0.0, 50.0, 200)
        assert parse_grid("1e-3:1e3:7") == (0.001, 1000.0, 7)

    @pytest.mark.parametrize(
        "text", ["0:50", "0:50:2:1", "a:1:2", "0:1:2.5"]
    )
    def test_invalid(self, text):
        with pytest.raises(ValueError):
            parse_grid(text)


class TestEval:
    def test_offset_signal_growth(self, tmp_path):
        blue, red = tmp_path / "blue.csv", tmp_path / "red.csv"
        common = ["--alpha", 0.5, "--op", "rl-integral", "--t", "0:50:500"]
        result = invoke("eval", "--builtin", "sin", *common, "--out", blue)
        assert result.exit_code == 0
        result = invoke(
            "eval",
            "--builtin",
            "sin",
            "--offset",
            1,
            *common,
            "--out",
            red,
        )
        assert result.exit_code == 0

        blue_frame, red_frame = pd.read_csv(blue), pd.read_csv(red)
        assert list(blue_frame.columns) == ["t", "value"]
        assert len(blue_frame) == 500
        assert blue_frame["value"].between(-1.2, 1.5).all()
        gap = red_frame["value"].iloc[-1] - blue_frame["value"].iloc[-1]
        assert gap >= 5
        assert red_frame["t"].iloc[-1] == 50

    def test_zero_signal(self, tmp_path):
        out = tmp_path / "zero.csv"
        result = invoke(
            "eval",
            "--builtin",
            "const",
            "--amplitude",
            0,
            "--t",
            "0:20:11",
            "--out",
            out,
        )
        assert result.exit_code == 0
        assert (pd.read_csv(out)["value"] == 0).all()

    def test_deterministic(self, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            result = invoke(
                "eval",
                "--builtin",
                "square-wave-truncated",
                "--alpha",
                0.3,
                "--t",
                "0:30:31",
                "--out",
                path,
            )
            assert result.exit_code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_stdout(self):
        result = invoke("eval", "--builtin", "cos", "--t", "0:1:3")
        assert result.exit_code == 0
        assert "t,value\n0,0\n" in result.output

    def test_json(self, tmp_path):
        out = tmp_path / "samples.json"
        result = invoke(
            "eval",
            "--builtin",
            "sin",
            "--op",
            "caputo",
            "--alpha",
            0.5,
            "--t",
            "1:10:4",
            "--log",
            "--format",
            "json",
            "--out",
            out,
        )
        assert result.exit_code == 0
        data = json.loads(out.read_text())
        assert data["operator"] == "caputo"
        assert data["alpha"] == 0.5
        assert data["signal"]["builtin"] == "sin"
        ts = [sample[0] for sample in data["samples"]]
        assert ts == pytest.approx(np.geomspace(1, 10, 4).tolist())

    def test_signal_file(self, tmp_path):
        path = tmp_path / "signal.json"
        path.write_text(json.dumps(HARMONICS))
        out = tmp_path / "weyl.csv"
        result = invoke(
            "eval",
            "--signal",
            path,
            "--op",
            "weyl",
            "--t",
            "0:3:4",
            "--out",
            out,
        )
        # The signal has a non-zero mean.
        assert result.exit_code == 2
        assert not out.exists()

    def test_tolerance_not_met(self):
        result = invoke(
            "eval",
            "--builtin",
            "sin",
            "--t",
            "1:50:3",
            "--panels",
            8,
            "--max-refinements",
            0,
        )
        assert result.exit_code == 3

    @pytest.mark.parametrize(
        "args",
        [
            ["--builtin", "triangle"],
            ["--builtin", "sin", "--alpha", 2.5],
            ["--builtin", "sin", "--alpha", 0],
            ["--builtin", "sin", "--t", "0:50"],
            ["--builtin", "sin", "--t", "5:1:10"],
            ["--builtin", "sin", "--t", "0:1:1"],
            ["--builtin", "sin", "--log"],
            ["--builtin", "sin", "--op", "marchaud"],
            ["--builtin", "sin", "--format", "xml"],
            ["--builtin", "sin", "--verbose", 3],
            ["--builtin", "sin", "--op", "rl-derivative", "--t", "0:1:3"],
            ["--alpha", 0.5],
        ],
    )
    def test_invalid_input(self, args):
        assert invoke("eval", *args).exit_code == 2

    def test_signal_and_builtin(self, tmp_path):
        path = tmp_path / "signal.json"
        path.write_text(json.dumps(HARMONICS))
        result = invoke("eval", "--signal", path, "--builtin", "sin")
        assert result.exit_code == 2

    def test_non_conjugate_signal(self, tmp_path):
        path = tmp_path / "signal.json"
        path.write_text(
            json.dumps(
                {"period": 1.0, "harmonics": [{"k": 1, "re": 1.0}]}
            )
        )
        assert invoke("eval", "--signal", path).exit_code == 2

    def test_missing_signal_file(self, tmp_path):
        path = tmp_path / "missing.json"
        assert invoke("eval", "--signal", path).exit_code == 2


class TestDiagnose:
    def test_bounded(self, tmp_path):
        out = tmp_path / "report.json"
        result = invoke(
            "diagnose",
            "--builtin",
            "sin",
            "--t",
            "20:200:17",
            "--log",
            "--out",
            out,
        )
        assert result.exit_code == 0
        assert "Bounded; asymptotically 2π-periodic" in result.output
        report = json.loads(out.read_text())
        assert report["verdict"]["kind"] == "Bounded"
        assert report["signal"]["builtin"] == "sin"

    def test_divergent(self):
        result = invoke(
            "diagnose",
            "--builtin",
            "sin",
            "--offset",
            1,
            "--t",
            "20:200:17",
            "--log",
        )
        assert result.exit_code == 0
        assert "Diverges (+); growth exponent ≈ " in result.output

    def test_zero(self):
        result = invoke(
            "diagnose",
            "--builtin",
            "const",
            "--amplitude",
            0,
            "--t",
            "0:10:5",
        )
        assert result.exit_code == 0

    def test_caputo(self):
        result = invoke(
            "diagnose",
            "--builtin",
            "sin",
            "--op",
            "caputo",
            "--t",
            "20:200:17",
            "--log",
        )
        assert result.exit_code == 0
        assert "Bounded" in result.output

    def test_weyl(self):
        result = invoke("diagnose", "--builtin", "sin", "--op", "weyl")
        assert result.exit_code == 2


class TestVerify:
    def test_empty(self, tmp_path):
        out = tmp_path / "checks.csv"
        result = invoke("verify", "--checks", "", "--out", out)
        assert result.exit_code == 0
        assert out.read_text() == "check,passed,detail\n"

    def test_json(self, tmp_path):
        out = tmp_path / "checks.json"
        result = invoke(
            "verify",
            "--checks",
            "lemma-bound",
            "--format",
            "json",
            "--out",
            out,
        )
        assert result.exit_code == 0
        records = json.loads(out.read_text())
        assert [r["check"] for r in records] == ["lemma-bound"]
        assert records[0]["passed"] is True

    def test_failed_check(self, tmp_path):
        out = tmp_path / "checks.csv"
        result = invoke(
            "verify",
            "--checks",
            "scheme-agreement",
            "--panels",
            8,
            "--max-refinements",
            0,
            "--out",
            out,
        )
        assert result.exit_code == 1
        assert "scheme-agreement,False" in out.read_text()

    @pytest.mark.parametrize(
        "args",
        [
            ["--checks", "marchaud"],
            ["--checks", "", "--format", "xml"],
            ["--checks", "", "--verbose", 5],
        ],
    )
    def test_invalid_input(self, args):
        assert invoke("verify", *args).exit_code == 2


def test_version():
    result = invoke("--version")
    assert result.exit_code == 0
    assert result.output.strip() == __version__ == "0.1.0"
