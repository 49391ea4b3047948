"""Command line interface: subcommands, outputs, exit codes."""

import json
import math

import pytest

from harmonicph.cli import main

from test_formats import REFERENCE_FILE

MULTIPLICITY_TWO_FILE = """\
0 0
0 1
0 2
1 0 1
1 1 2
"""


@pytest.fixture
def reference_file(tmp_path):
    path = tmp_path / "reference.flt"
    path.write_text(REFERENCE_FILE)
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_betti_command(capsys, reference_file):
    code, out, _ = _run(capsys, ["betti", reference_file])
    assert code == 0
    data = json.loads(out)
    assert data["0"] == {"betti": 1, "harmonic_dim": 1, "agree": True}
    assert data["1"]["betti"] == 1 and data["1"]["agree"]
    assert data["2"]["betti"] == 0


def test_harmonic_command(capsys, reference_file):
    code, out, _ = _run(capsys, ["harmonic", reference_file, "--p", "1"])
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 1
    assert data["columns"] == [[0, 1], [0, 2], [0, 3], [1, 2], [2, 3]]
    coeffs = data["basis"][0]
    # proportional to a+b+2c-3d+3e in the lexicographic basis (a,c,d,b,e)
    ratio = coeffs[0]
    scaled = [c / ratio for c in coeffs]
    assert [round(x, 6) for x in scaled] == [1.0, 2.0, -3.0, 1.0, 3.0]


def test_harmonic_command_at_index(capsys, reference_file):
    code, out, _ = _run(capsys, ["harmonic", reference_file, "--p", "1",
                                 "--at", "3"])
    data = json.loads(out)
    assert code == 0 and data["dim"] == 1 and data["at"] == 3


def test_barcode_command(capsys, reference_file, tmp_path):
    json_path = tmp_path / "bars.json"
    svg_path = tmp_path / "bars.svg"
    code, out, _ = _run(capsys, [
        "barcode", reference_file, "--p", "1",
        "--json", str(json_path), "--svg", str(svg_path),
    ])
    assert code == 0
    data = json.loads(json_path.read_text())
    assert [(d["s"], d["t"]) for d in data] == [(3, 5), (6, "inf")]
    svg_first = svg_path.read_text()
    # deterministic output across runs
    code, _, _ = _run(capsys, [
        "barcode", reference_file, "--p", "1",
        "--json", str(json_path), "--svg", str(svg_path),
    ])
    assert code == 0
    assert svg_path.read_text() == svg_first
    assert json.loads(json_path.read_text()) == data


def test_barcode_to_stdout(capsys, reference_file):
    code, out, _ = _run(capsys, ["barcode", reference_file, "--p", "0"])
    assert code == 0
    data = json.loads(out)
    assert [(d["s"], d["t"]) for d in data] == [
        (0, "inf"), (1, 3), (2, 3), (4, 6),
    ]


def test_essential_command(capsys, reference_file):
    code, out, _ = _run(capsys, [
        "essential", reference_file, "--p", "1", "--bar", "6,inf",
    ])
    assert code == 0
    data = json.loads(out)
    assert data["essential"] == [[0, 3], [2, 3]]
    assert abs(data["content"] - math.sqrt(3.0 / 4.0)) < 1e-9
    code, out, _ = _run(capsys, [
        "essential", reference_file, "--p", "1", "--bar", "3,5",
    ])
    data = json.loads(out)
    assert code == 0 and data["content"] == 1.0
    assert data["essential"] == [[0, 1], [0, 2], [1, 2]]


def test_essential_missing_bar_fails(capsys, reference_file):
    code, _, err = _run(capsys, [
        "essential", reference_file, "--p", "1", "--bar", "0,2",
    ])
    assert code == 1
    assert "error" in json.loads(err)


def test_distance_step_zero_on_same_file(capsys, reference_file):
    code, out, _ = _run(capsys, [
        "distance", reference_file, reference_file, "--p", "1",
    ])
    assert code == 0
    first_line = out.splitlines()[0]
    assert abs(float(first_line)) < 1e-10
    assert out.splitlines()[1] == "t,distance"


def test_distance_persistent_and_barcode_kinds(capsys, reference_file):
    for kind in ("persistent", "barcode"):
        code, out, _ = _run(capsys, [
            "distance", reference_file, reference_file, "--p", "1",
            "--kind", kind,
        ])
        assert code == 0
        assert abs(float(out.splitlines()[0])) < 1e-9


def test_stability_same_file_all_theorems(capsys, reference_file):
    for theorem in ("stable", "persistent", "barcode"):
        code, out, _ = _run(capsys, [
            "stability", reference_file, reference_file, "--p", "1",
            "--theorem", theorem,
        ])
        assert code == 0
        data = json.loads(out)
        assert data["holds"]
        assert abs(data["lhs"]) < 1e-9


def test_ladder_command(capsys):
    code, out, _ = _run(capsys, ["ladder", "--n", "50", "--m", "10"])
    assert code == 0
    data = json.loads(out)
    assert data["abs_diff"] < 1e-9
    assert data["alpha"] == 0.2


def test_exit_code_usage_error(capsys, reference_file):
    code, _, err = _run(capsys, ["essential", reference_file, "--p", "1",
                                 "--bar", "nonsense"])
    assert code == 1
    assert json.loads(err)["error"] == "UsageError"
    code, _, err = _run(capsys, ["betti", reference_file, "--tol", "-1"])
    assert code == 1


def test_exit_code_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.flt"
    bad.write_text("0.5 2 1\n")
    code, _, err = _run(capsys, ["betti", str(bad)])
    assert code == 2
    assert json.loads(err)["error"] == "ParseError"
    dup = tmp_path / "dup.flt"
    dup.write_text("0 0\n1 0\n")
    code, _, err = _run(capsys, ["betti", str(dup)])
    assert code == 2


def test_exit_code_hypothesis_violation(capsys, tmp_path):
    path = tmp_path / "mult2.flt"
    path.write_text(MULTIPLICITY_TWO_FILE)
    code, _, err = _run(capsys, [
        "stability", str(path), str(path), "--p", "0", "--theorem", "barcode",
    ])
    assert code == 3
    assert json.loads(err)["error"] == "HypothesisViolated"


def test_missing_file_fails_cleanly(capsys):
    code, _, err = _run(capsys, ["betti", "/nonexistent/file.flt"])
    assert code == 1
    assert "error" in json.loads(err)


def test_closure_repair_warning_and_quiet(capsys, tmp_path):
    path = tmp_path / "repair.flt"
    path.write_text("4 0 1 2\n2 5\n")
    code, _, err = _run(capsys, ["betti", str(path)])
    assert code == 0
    assert "inserted missing face" in err
    code, _, err = _run(capsys, ["--quiet", "betti", str(path)])
    assert code == 0
    assert err == ""
