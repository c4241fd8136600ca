import io
import json
import subprocess
import sys

import pytest

from chordal_extremal.cli import main
from chordal_extremal.graph import complete_graph, cycle_graph, empty_graph, path_graph
from chordal_extremal.graph6 import parse_graph6, to_graph6


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue().splitlines()


@pytest.mark.parametrize(
    "n, k, expected",
    [
        (7, 2, {"phi": 8, "g": 8}),
        (6, 2, {"phi": 6, "g": 7}),
        (4, 3, {"phi": 6, "g": None, "note": "g requires n ≥ k+2"}),
    ],
)
def test_phi(n, k, expected):
    code, lines = run(["phi", str(n), str(k)])
    assert code == 0 and json.loads(lines[0]) == expected


def test_phi_invalid():
    code, _ = run(["phi", "2", "5"])
    assert code == 2


def test_construct_q_6_2():
    code, lines = run(["construct", "q", "6", "2"])
    assert code == 0
    g = parse_graph6(lines[0])
    assert g.size == 6 and set(g.degrees()) == {2}
    meta = json.loads(lines[1])
    assert meta["family_tag"] == "r0" and meta["size"] == 6


def test_construct_b_6_2():
    code, lines = run(["construct", "b", "6", "2"])
    g = parse_graph6(lines[0])
    assert g.size == 7
    assert json.loads(lines[1])["designated_cut_edge"] == [0, 3]


def test_construct_invalid():
    assert run(["construct", "b", "3", "2"])[0] == 2


def test_check_c4_and_k1(monkeypatch):
    stdin = f"{to_graph6(cycle_graph(4))}\n{to_graph6(empty_graph(1))}\n"
    code, lines = run(["check"], stdin, monkeypatch)
    assert code == 0
    c4, k1 = map(json.loads, lines)
    assert c4["is_chordal"] is False and c4["witness_cycle"] == [0, 1, 2, 3]
    assert c4["meets_lower_bound"] is None
    assert k1["order"] == 1 and k1["is_chordal"] and k1["is_connected"]


def test_check_report_fields(monkeypatch):
    code, lines = run(["check"], to_graph6(path_graph(3)) + "\n", monkeypatch)
    rep = json.loads(lines[0])
    assert rep["cut_edges"] == [[0, 1], [1, 2]]
    assert rep["simplicial_vertices"] == [0, 2]
    assert rep["phi_lower_bound"] == 2 and rep["meets_lower_bound"] is True


def test_check_malformed_line_continues(monkeypatch):
    stdin = "D?|\nC~\n"
    code, lines = run(["check"], stdin, monkeypatch)
    assert code == 1
    assert "error" in json.loads(lines[0])
    assert json.loads(lines[1])["size"] == 6


def test_check_reads_file(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(to_graph6(complete_graph(4)) + "\n")
    code, lines = run(["check", str(f)])
    assert code == 0 and json.loads(lines[0])["min_degree"] == 3


def test_oracle_5():
    code, lines = run(["oracle", "5"])
    assert code == 0
    rows = [json.loads(line) for line in lines]
    assert all(r["match"] for r in rows)
    assert set(rows[0]) == {
        "n", "k", "connected", "formula_value", "oracle_value", "match",
        "witness_graph6", "witnesses_at_min", "graphs_examined",
    }


def test_oracle_guard():
    assert run(["oracle", "9"])[0] == 2


def test_reduce_and_augment():
    code, lines = run(["reduce", to_graph6(complete_graph(4)), "2"])
    assert code == 0 and parse_graph6(lines[0]).size == 5
    assert len(json.loads(lines[1])["steps"]) == 1
    code, lines = run(["augment", to_graph6(path_graph(3)), "0"])
    assert parse_graph6(lines[0]) == complete_graph(3)
    assert json.loads(lines[1])["y"] == 2


def test_edit_precondition_failures():
    assert run(["augment", to_graph6(path_graph(3)), "1"])[0] == 2
    assert run(["reduce", to_graph6(cycle_graph(4)), "1"])[0] == 2
    assert run(["reduce", "D?|", "1"])[0] == 2


def test_random_is_deterministic():
    a = run(["random", "40", "0.5", "--seed", "7"])[1]
    b = run(["random", "40", "0.5", "--seed", "7"])[1]
    assert a == b and parse_graph6(a[0]).order == 40


def _shell(args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "chordal_extremal", *args],
        input=stdin, capture_output=True, text=True, check=False,
    )


@pytest.mark.parametrize("family, n, k", [("q", 8, 2), ("b", 9, 2), ("q", 17, 4), ("b", 15, 4), ("q", 9, 1)])
def test_pipeline_closure(family, n, k):
    made = _shell(["construct", family, str(n), str(k)])
    assert made.returncode == 0
    checked = _shell(["check"], made.stdout)
    assert checked.returncode == 0
    (rep,) = [json.loads(line) for line in checked.stdout.splitlines()]
    assert rep["is_chordal"] and rep["order"] == n and rep["min_degree"] == k
    assert rep["meets_lower_bound"] is True
    meta = json.loads(made.stdout.splitlines()[1])
    assert rep["size"] == meta["predicted_size"]


def test_help_lists_every_subcommand():
    res = _shell(["--help"])
    for cmd in ["phi", "construct", "check", "oracle", "reduce", "augment", "random"]:
        assert cmd in res.stdout
