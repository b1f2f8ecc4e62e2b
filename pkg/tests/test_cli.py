import json

import pytest

from ramseylab.cli import main
from ramseylab import parse_coloring, parse_hypergraph, find_mono_loose_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_then_verify(tmp_path, capsys):
    target = tmp_path / "c.col"
    code, _, _ = run(capsys, "construct", "star-clique", "--k", "3", "--r", "2", "-o", str(target))
    assert code == 0
    coloring = parse_coloring(target.read_text())
    assert coloring.class_sizes() == {1: 15, 2: 20}
    code, _, _ = run(capsys, "verify-coloring", str(target))
    assert code == 0


def test_ramsey_exit_codes(tmp_path, capsys):
    witness = tmp_path / "w.col"
    code, _, _ = run(capsys, "ramsey", "--k", "2", "--r", "2", "--n", "4",
                     "--witness-out", str(witness))
    assert code == 1
    coloring = parse_coloring(witness.read_text())
    assert find_mono_loose_path(coloring, 3) is None
    code, _, _ = run(capsys, "ramsey", "--k", "2", "--r", "2", "--n", "5")
    assert code == 0
    code, _, _ = run(capsys, "ramsey", "--k", "2", "--r", "3", "--n", "6", "--budget", "5")
    assert code == 2


def test_ramsey_json_payload_reproducible(capsys):
    code, out1, _ = run(capsys, "ramsey", "--k", "2", "--r", "2", "--n", "5", "--json")
    assert code == 0
    code, out2, _ = run(capsys, "ramsey", "--k", "2", "--r", "2", "--n", "5", "--json")
    r1, r2 = json.loads(out1), json.loads(out2)
    assert r1["payload"] == r2["payload"]
    assert r1["payload"]["verdict"] == "holds"
    assert set(r1) == {"command", "parameters", "payload", "timing_ms", "seed"}


def test_detect_patterns(tmp_path, capsys):
    star_file = tmp_path / "star.hg"
    run(capsys, "construct", "full-star", "--k", "3", "--n", "6", "-o", str(star_file))
    code, _, _ = run(capsys, "detect", "--input", str(star_file), "--pattern", "loose-path-3")
    assert code == 0  # stars never carry the length-3 pattern
    code, _, _ = run(capsys, "detect", "--input", str(star_file), "--pattern", "loose-path-2")
    assert code == 1  # two star edges meeting only at the center
    code, out, _ = run(capsys, "detect", "--input", str(star_file), "--pattern", "star", "--json")
    assert code == 1
    payload = json.loads(out)["payload"]
    assert payload["center"] == 0 and payload["full_star"] is True


def test_detect_on_coloring(tmp_path, capsys):
    coloring_file = tmp_path / "c.col"
    run(capsys, "construct", "star-clique", "--k", "3", "--r", "3", "-o", str(coloring_file))
    code, _, _ = run(capsys, "detect", "--input", str(coloring_file),
                     "--pattern", "loose-path-3", "--coloring")
    assert code == 0


def test_turan_command(capsys):
    code, out, _ = run(capsys, "turan", "--k", "3", "--n", "6", "--pattern", "loose-path-3", "--json")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["max_edges"] == 20 and payload["status"] == "exact"
    extremal = parse_hypergraph(payload["extremal"])
    assert len(extremal) == 20


def test_construct_pair_cover(tmp_path, capsys):
    target = tmp_path / "pc.hg"
    code, _, _ = run(capsys, "construct", "pair-cover", "--k", "4", "--n", "6",
                     "--pair", "0", "1", "-o", str(target))
    assert code == 0
    assert len(parse_hypergraph(target.read_text())) == 6


def test_cnf_command(tmp_path, capsys):
    target = tmp_path / "i.cnf"
    code, out, _ = run(capsys, "cnf", "--k", "2", "--r", "2", "--n", "4", "-o", str(target), "--json")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["variables"] == 12 and payload["clauses"] == 30
    lines = target.read_text().splitlines()
    assert "p cnf 12 30" in lines


def test_constants_command(capsys):
    code, out, _ = run(capsys, "constants", "--k", "167", "--json")
    assert code == 0
    records = json.loads(out)["payload"]["records"]
    by_name = {rec["name"]: rec for rec in records}
    assert by_name["k_below_geometric"]["holds"] == "yes"


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "bounds", "--k", "3", "--r", "5", "--json")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert (payload["lower"], payload["upper_kr"], payload["upper_250r"]) == (11, 15, 1250)


def test_machinery_peel(tmp_path, capsys):
    source = tmp_path / "h.hg"
    source.write_text("2 4 4\n0 1\n0 2\n1 2\n2 3\n")
    code, out, _ = run(capsys, "machinery", "peel", "--input", str(source), "--json")
    assert code == 0
    result = parse_hypergraph(json.loads(out)["payload"]["result"])
    assert result.edges == ((0, 1), (0, 2), (1, 2))


def test_machinery_prune(tmp_path, capsys):
    source = tmp_path / "b.json"
    source.write_text(json.dumps({
        "left": ["a", "b"],
        "right": ["c", "d", "e", "f"],
        "edges": [["a", "c"], ["a", "d"], ["a", "e"], ["a", "f"], ["b", "c"]],
    }))
    code, out, _ = run(capsys, "machinery", "prune", "--input", str(source), "--json")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["left"] == ["a"] and len(payload["edges"]) == 4


def test_machinery_tripartition(tmp_path, capsys):
    source = tmp_path / "w.json"
    source.write_text(json.dumps({"weights": {"a": "5", "b": "4", "c": "3", "d": "2", "e": "1"}}))
    code, out, _ = run(capsys, "machinery", "tripartition", "--input", str(source), "--json")
    assert code == 0
    assert json.loads(out)["payload"]["sums"] == ["5", "5", "5"]


def test_machinery_split(tmp_path, capsys):
    source = tmp_path / "s.json"
    source.write_text(json.dumps({"n": 2, "k": 2, "assignments": [[[1], 0]]}))
    code, out, _ = run(capsys, "machinery", "split", "--input", str(source), "--json")
    assert code == 0
    payload = json.loads(out)["payload"]
    assert payload["u1"] == [0] and payload["proper_count"] == 1
    assert payload["expectation"] == "1/4"


def test_usage_errors(capsys):
    assert run(capsys, "nonsense")[0] == 64
    assert run(capsys, "ramsey", "--k", "2")[0] == 64
    assert run(capsys, "construct", "star-clique", "--k", "3", "-o", "/tmp/x")[0] == 64
    assert run(capsys, "detect", "--input", "/nonexistent", "--pattern", "star")[0] == 64


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.hg"
    bad.write_text("3 5 1\n0 1 7\n")
    code, _, err = run(capsys, "detect", "--input", str(bad), "--pattern", "loose-path-3")
    assert code == 65
    assert "line 2" in err


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
