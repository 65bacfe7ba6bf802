import json

import pytest

from sftgroups.cli import main

GOLDEN = {"vertices": ["a", "b"], "edges": [
    {"id": "e", "src": "a", "dst": "a"},
    {"id": "f", "src": "a", "dst": "b"},
    {"id": "g", "src": "b", "dst": "a"}]}
FULL2 = {"vertices": ["v"], "edges": [
    {"id": "0", "src": "v", "dst": "v"},
    {"id": "1", "src": "v", "dst": "v"}]}
FULL3 = {"vertices": ["v"], "edges": [
    {"id": "0", "src": "v", "dst": "v"},
    {"id": "1", "src": "v", "dst": "v"},
    {"id": "2", "src": "v", "dst": "v"}]}


@pytest.fixture
def files(tmp_path):
    paths = {}

    def write(name, doc):
        p = tmp_path / name
        p.write_text(json.dumps(doc))
        paths[name] = str(p)
        return str(p)

    write("golden.json", GOLDEN)
    write("full2.json", FULL2)
    write("full3.json", FULL3)
    write("swap.json", {"graph": "full2.json", "ambient": "X", "pieces": [
        {"range": {"anchor": "v", "edges": ["1"]}, "domain": {"anchor": "v", "edges": ["0"]}},
        {"range": {"anchor": "v", "edges": ["0"]}, "domain": {"anchor": "v", "edges": ["1"]}}]})
    write("c0.json", {"words": [{"anchor": "v", "edges": ["0"]}]})
    write("c12.json", {"words": [{"anchor": "v", "edges": ["1"]},
                                 {"anchor": "v", "edges": ["2"]}]})
    write("point.json", {"preperiod": {"anchor": "v", "edges": ["0", "0"]},
                         "cycle": {"anchor": "v", "edges": ["1"]}})
    write("loop.json", {"vertices": ["a"], "edges": [{"id": "e", "src": "a", "dst": "a"}]})
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_invariants_text(files, capsys):
    code, out = run(capsys, "invariants", files["golden.json"])
    assert code == 0
    assert out.splitlines() == [
        "H0: 0", "H1 rank: 0", "Bowen-Franks: 0", "det: -1",
        "unit class: 0", "abelianization: 0"]


def test_invariants_json(files, capsys):
    code, out = run(capsys, "--format", "json", "invariants", files["golden.json"])
    assert code == 0
    assert json.loads(out)["det"] == -1


def test_classify(files, capsys):
    code, out = run(capsys, "classify", files["golden.json"], "X",
                    files["full2.json"], "X")
    assert code == 0
    assert out.strip() == "verdict: SufficientConditionHolds"


def test_index_of_transposition(files, capsys):
    code, out = run(capsys, "index", files["swap.json"])
    assert code == 0
    assert out.splitlines()[0] == "index: 0"


def test_validation_error_exit_2(files, capsys):
    code, out = run(capsys, "invariants", files["loop.json"])
    assert code == 2
    assert out.splitlines()[0] == "error: IsPermutation"


def test_operation_error_exit_3(files, capsys):
    code, out = run(capsys, "hopf", files["full3.json"], files["c0.json"],
                    files["c12.json"])
    assert code == 3
    assert out.splitlines()[0] == "error: ClassesDiffer"


def test_unknown_verb_exit_2(files, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", files["golden.json"]])
    assert exc.value.code == 2


def test_missing_file_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["invariants", "no-such-file.json"])
    assert exc.value.code == 2


def test_compose_apply_roundtrip(files, capsys):
    code, out = run(capsys, "apply", files["swap.json"], files["point.json"])
    assert code == 0
    assert out.strip() == "point: v|1.0(v|1)*"


def test_hopf_text(files, capsys):
    code, out = run(capsys, "hopf", files["full2.json"], files["c0.json"], "X")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "source: {v|0}"
    assert lines[1] == "range: {v|}"


def test_realize_index_roundtrip(files, capsys, tmp_path):
    rank1 = {"vertices": ["a", "b"], "edges": [
        {"id": "aa0", "src": "a", "dst": "a"}, {"id": "aa1", "src": "a", "dst": "a"},
        {"id": "ab", "src": "a", "dst": "b"}, {"id": "ba", "src": "b", "dst": "a"},
        {"id": "bb0", "src": "b", "dst": "b"}, {"id": "bb1", "src": "b", "dst": "b"}]}
    path = tmp_path / "rank1.json"
    path.write_text(json.dumps(rank1))
    code, out = run(capsys, "--format", "json", "realize-index", str(path), "1")
    assert code == 0
    element = json.loads(out)
    assert element["graph"] == rank1  # output round-trips as an element file
    elpath = tmp_path / "realized.json"
    elpath.write_text(json.dumps(element))
    code, out = run(capsys, "index", str(elpath))
    assert code == 0
    assert out.splitlines()[0] == "index: (1)"


def test_examples_all_pass(files, capsys):
    code, out = run(capsys, "examples")
    assert code == 0
    assert out.splitlines()[-1] == "all rows pass"
    assert out.count("| PASS") == 8


def test_byte_identical_output(files, capsys):
    _, first = run(capsys, "generators", files["full2.json"], "X")
    _, second = run(capsys, "generators", files["full2.json"], "X")
    assert first == second
    assert first.splitlines()[0] == "count: 295"
