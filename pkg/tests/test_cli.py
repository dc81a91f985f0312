from __future__ import annotations

import json
import subprocess
import sys

import pytest

from freiman import __version__
from freiman.cli import run

J_TEXT = "x1^2\nx2^2\nx3^2\nx1*x2\nx1*x3\n"


@pytest.fixture
def j_file(tmp_path):
    p = tmp_path / "j.txt"
    p.write_text(J_TEXT)
    return str(p)


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json(capsys, j_file):
    code, out, _ = call(capsys, "analyze", j_file, "--echo")
    data = json.loads(out)
    assert code == 0
    assert (data["mu"], data["mu2"], data["spread"], data["delta"]) == (5, 13, 3, 1)
    assert data["h"] == [1, 2, 1] and data["height"] == 3
    assert data["classification"]["freiman"] is False
    assert data["generators"][0] == "x1^2"


def test_analyze_text(capsys, j_file):
    code, out, _ = call(capsys, "analyze", j_file, "--format", "text")
    assert code == 0
    assert "delta: 1" in out.splitlines()
    assert "classification.freiman: false" in out.splitlines()


def test_analyze_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO("x1^2\nx1*x2\nx2^2\n"))
    code, out, _ = call(capsys, "analyze", "-")
    assert code == 0 and json.loads(out)["freiman"] is True


def test_power_and_hvec(capsys, j_file):
    code, out, _ = call(capsys, "power", j_file, "-k", "2")
    assert code == 0 and json.loads(out)["mu_k"] == 13
    code, out, _ = call(capsys, "hvec", j_file, "-K", "3")
    data = json.loads(out)
    assert code == 0 and data["h"][:3] == [1, 2, 1] and data["mu"][:3] == [1, 5, 13]


def test_borel(capsys):
    code, out, _ = call(capsys, "borel", "x3*x4", "-n", "4")
    data = json.loads(out)
    assert code == 0 and data["mu"] == 9 and data["closed_form"]["borel_deg2_delta"] == data["delta"] == 1
    code, out, _ = call(capsys, "borel", "x2*x3^2")
    data = json.loads(out)
    assert data["closed_form"]["borel_3vars_delta"] == data["delta"] == 1


def test_hibi(capsys, tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("elements: 2\n")
    code, out, _ = call(capsys, "hibi", str(p))
    data = json.loads(out)
    assert code == 0 and data["freiman"] and data["predicate"] and data["spread"] == 3


def test_veronese(capsys):
    code, out, _ = call(capsys, "veronese", "-n", "4", "-d", "2", "--bounds", "1,1,1,1")
    data = json.loads(out)
    assert code == 0 and data["delta"] == 1 and data["squarefree_mu2_formula"] == data["mu2"]
    code, out, _ = call(capsys, "veronese", "-n", "3", "-d", "2", "--bounds", "1,1,1")
    data = json.loads(out)
    assert data["topminus1_f"] == 0 and data["freiman"]


def test_census(capsys):
    code, out, _ = call(capsys, "census", "-n", "3", "-d", "2", "--height-max")
    data = json.loads(out)
    assert code == 0 and (data["total"], data["freiman_count"]) == (8, 5)


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "borel-deg2", "--range", "i=1..3,n=i..4")
    assert code == 0 and json.loads(out)["pass"] is True


@pytest.mark.parametrize(
    "argv, code",
    [
        (["census", "-n", "4", "-d", "3", "--cap", "1000"], 3),
        (["veronese", "-n", "2", "-d", "3", "--bounds", "1,x"], 2),
        (["analyze", "/nonexistent/file"], 2),
        (["verify", "borel-deg2", "--range", "z=1..2"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert call(capsys, *argv)[0] == code


def test_non_equigenerated_is_usage_error(capsys, tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("x1\nx2^2\n")
    code, _, err = call(capsys, "analyze", str(p))
    assert code == 2 and "equigenerated" in err


def test_parse_error_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("x1\nz9\n")
    code, _, err = call(capsys, "analyze", str(p))
    assert code == 2 and "line 2" in err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "freiman", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and __version__ in out.stdout
    bad = subprocess.run([sys.executable, "-m", "freiman", "census"], capture_output=True, text=True)
    assert bad.returncode == 2


def test_echo_round_trip(capsys, j_file):
    from freiman.textio import parse_ideal

    _, out, _ = call(capsys, "analyze", j_file, "--echo")
    echoed = "\n".join(json.loads(out)["generators"])
    assert parse_ideal(echoed, 3) == parse_ideal(J_TEXT, 3)


@pytest.mark.parametrize("argv", [["analyze", "J"], ["veronese", "-n", "4", "-d", "2"], ["borel", "x2*x4"]])
def test_text_and_json_agree(capsys, j_file, argv):
    argv = [j_file if a == "J" else a for a in argv]
    _, js, _ = call(capsys, *argv)
    _, text, _ = call(capsys, *argv, "--format", "text")
    flat = dict(line.split(": ", 1) for line in text.splitlines())

    def walk(d, prefix=""):
        for k, v in d.items():
            if isinstance(v, dict):
                yield from walk(v, f"{prefix}{k}.")
            else:
                yield f"{prefix}{k}", v

    for key, value in walk(json.loads(js)):
        assert json.loads(flat[key]) == value
