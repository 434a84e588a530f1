import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from mncascade.cli import main
from mncascade.engine import orthogonality_holds, table_from_dict

WORKED_MATRIX = """000101001001
000101011000
000111010000
010111000000
110011000000
110110000000
111100000000
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("lam, mu, expected", [
    ("2,2", "2,2", "2"),
    ("3", "1,1,1", "1"),
    ("2,2", "3,1", "-1"),
])
def test_char(capsys, lam, mu, expected):
    code, out, _ = run(capsys, "char", "--lambda", lam, "--mu", mu)
    assert code == 0 and out == expected + "\n"


def test_char_json(capsys):
    code, out, _ = run(capsys, "char", "--lambda", "2,2", "--mu", "2,2", "--format", "json")
    assert json.loads(out) == {"lambda": "2,2", "mu": "2,2", "value": "2"}


@pytest.mark.parametrize("argv", [
    ["char", "--lambda", "2,4", "--mu", "3,3"],
    ["char", "--lambda", "2,2", "--mu", "3"],
    ["char", "--lambda", "2,x", "--mu", "3"],
    ["char", "--lambda", "2"],
    ["bogus"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_table_csv_single_cell(capsys):
    code, out, _ = run(capsys, "table", "--n", "1", "--format", "csv", "--threads", "1")
    assert code == 0
    assert out.splitlines() == ["lambda\\mu,1", "1,1"]


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--format", "json", "--threads", "1")
    assert json.loads(out)["values"] == [["1", "1", "1"], ["-1", "0", "2"], ["1", "-1", "1"]]
    code, out, _ = run(capsys, "table", "--n", "5", "--format", "json", "--threads", "1")
    assert orthogonality_holds(table_from_dict(json.loads(out)))


def test_table_bound(capsys):
    code, _, err = run(capsys, "table", "--n", "9", "--max-n", "8")
    assert code == 3 and "bound" in err


def test_table_thread_independent(capsys):
    outs = [run(capsys, "table", "--n", "6", "--format", "json", "--threads", t)[1] for t in ("1", "4")]
    assert outs[0] == outs[1]


def test_cascades_worked_example(capsys):
    code, out, _ = run(capsys, "cascades", "--lambda", "8,6,4,3", "--content", "4,4,6,3,2,2", "--format", "json")
    data = json.loads(out)
    (worked,) = [c for c in data["cascades"] if c["rows"] == WORKED_MATRIX.split()]
    assert worked["weight"] == -1 and worked["crossings"] == 9 and worked["cycles"] == "(2 4)"
    assert data["count"] == len(data["cascades"])


def test_cascades_empty(capsys):
    code, out, _ = run(capsys, "cascades", "--lambda", "2,2", "--content", "4")
    assert code == 0 and out.startswith("0 cascades")


def test_cascades_render_ascii(capsys):
    code, out, _ = run(capsys, "cascades", "--lambda", "1", "--content", "1", "--render", "ascii")
    assert out.splitlines() == [
        "1 cascades, weight sum 1",
        "cascade 1: weight +1, crossings 0, permutation () = (1,)",
        "  01",
        "  10",
        "  1",
        ". o",
        "/-/",
        "o .",
        "1",
        "tableau:",
        "1",
    ]


def test_cascades_render_svg(capsys):
    code, out, _ = run(capsys, "cascades", "--lambda", "2,2", "--content", "2,2", "--render", "svg")
    svgs = out.split("<svg")[1:]
    assert len(svgs) == 2
    for body in svgs:
        ET.fromstring("<svg" + body[: body.index("</svg>") + 6])


def test_cascades_requires_arguments(capsys):
    code, _, err = run(capsys, "cascades", "--lambda", "2,2")
    assert code == 2


def test_cascades_check_file(capsys, tmp_path):
    path = tmp_path / "c.txt"
    path.write_text(WORKED_MATRIX)
    code, out, _ = run(capsys, "cascades", "--check", str(path), "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["shape"] == "8,6,4,3" and data["content"] == [4, 4, 6, 3, 2, 2]
    assert data["row_crossings"] == [1, 2, 3, 1, 1, 1]
    assert data["paths"][3] == [12, 8, 8, 2, 2, 2, 2]
    path.write_text("11\n11\n")
    code, _, err = run(capsys, "cascades", "--check", str(path))
    assert code == 1 and "condition 1" in err


def test_orbits(capsys):
    code, out, _ = run(capsys, "orbits", "--lambda", "1", "--d", "2", "--content", "2,2")
    data = json.loads(out)
    assert code == 0
    assert [o["size"] for o in data["orbits"]] == [2]
    assert data["shape"] == "2,2"


def test_orbits_d1(capsys):
    code, out, _ = run(capsys, "orbits", "--lambda", "2,1", "--d", "1", "--content", "1,1,1")
    data = json.loads(out)
    assert code == 0 and [o["size"] for o in data["orbits"]] == [1, 1]


def test_orbits_content_size_mismatch(capsys):
    code, out, _ = run(capsys, "orbits", "--lambda", "3,2", "--d", "3", "--content", "3,3,6,6,3,3,6,9,3")
    data = json.loads(out)
    assert code == 0 and data["orbits"] == []
    assert any("sums to 42" in note for note in data["notes"])


def test_orbits_size_six(capsys):
    code, out, _ = run(capsys, "orbits", "--lambda", "3,2", "--d", "3", "--content", "3,3,6,12,3,3,6,9", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["orbits"]
    assert {o["size"] for o in data["orbits"]} == {6}


def test_orbits_divisibility(capsys):
    code, _, err = run(capsys, "orbits", "--lambda", "1", "--d", "2", "--content", "3,1")
    assert code == 2 and "not divisible" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "1", "--n", "2", "--d", "2", "--threads", "1")
    assert code == 0 and json.loads(out)["all_passed"] is True
    code, out, _ = run(capsys, "verify", "--theorem", "3", "--n", "2", "--d", "2")
    data = json.loads(out)
    assert code == 0 and data["cases"] == [] and "hypothesis not met" in data["notes"][0]
    code, out, _ = run(capsys, "verify", "--theorem", "3", "--n", "3", "--d", "2", "--threads", "1")
    data = json.loads(out)
    assert code == 0 and all(c["cascades"] == 0 for c in data["cases"])
    code, out, _ = run(capsys, "verify", "--theorem", "prime-break", "--n", "5", "--p", "3")
    assert code == 0 and json.loads(out)["claim"] == "prime_break"
    code, out, _ = run(capsys, "verify", "--theorem", "2", "--n", "2", "--d", "2", "--format", "text")
    assert code == 0 and "all passed" in out


def test_verify_errors(capsys):
    assert run(capsys, "verify", "--theorem", "1", "--n", "2")[0] == 2
    assert run(capsys, "verify", "--theorem", "prime-break", "--n", "4", "--p", "4")[0] == 2
    assert run(capsys, "verify", "--theorem", "1", "--n", "6", "--d", "3", "--max-size", "10")[0] == 3


def test_verify_thread_independent(capsys):
    outs = [
        run(capsys, "verify", "--theorem", "1", "--n", "3", "--d", "2", "--threads", t)[1]
        for t in ("1", "3")
    ]
    assert outs[0] == outs[1]


def test_module_entry_point_and_stdin():
    result = subprocess.run(
        [sys.executable, "-m", "mncascade", "cascades", "--check", "-"],
        input=WORKED_MATRIX, capture_output=True, text=True, check=False,
    )
    assert result.returncode == 0
    assert "valid cascade of shape (8,6,4,3)" in result.stdout
    assert "weight -1, crossings 9, permutation (2 4)" in result.stdout
    result = subprocess.run(
        [sys.executable, "-m", "mncascade", "char", "--lambda", "3,3", "--mu", "2,2,1,1"],
        capture_output=True, text=True, check=True,
    )
    assert result.stdout.strip() == "1"
