import json

import pytest

from maninalg.cli import main, operator_from_json, operator_to_json
from maninalg.idempotents import hecke_minus


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out = capsys.readouterr().out
        return code, json.loads(out) if out.strip() else None
    return _run


def test_catalog_emits_nine_by_nine(run):
    code, doc = run("catalog", "--family", "A_n", "--n", "3")
    assert code == 0
    assert len(doc["matrix"]) == 9
    assert all(len(row) == 9 for row in doc["matrix"])


def test_operator_json_roundtrip():
    op = hecke_minus(3, 2)
    doc = operator_to_json("RhatMinus", op)
    assert operator_from_json(doc) == op
    # the serialized strings themselves are reproducible
    assert operator_to_json("RhatMinus", operator_from_json(doc)) == doc


def test_check_idempotent_exit_codes(run, tmp_path):
    code, doc = run("check-idempotent", "--family", "RhatMinus",
                    "--n", "2", "--q", "2")
    assert code == 0 and doc["idempotent"] and doc["rank_equals_trace"]
    spec = tmp_path / "p.json"
    spec.write_text(json.dumps({"family": "P_n", "n": 2, "params": {}}))
    code, doc = run("check-idempotent", "--spec", str(spec))
    assert code == 1 and not doc["idempotent"]


def test_dims_table(run):
    code, doc = run("dims", "--family", "Aq", "--n", "3", "--q", "2",
                    "--variant", "Xi", "--max-degree", "4")
    assert code == 0
    assert doc["dims"] == [1, 3, 3, 1, 0]


def test_equiv(run, tmp_path):
    left = tmp_path / "left.json"
    right = tmp_path / "right.json"
    left.write_text(json.dumps({"family": "Aq", "n": 2, "params": {"q": "2"}}))
    right.write_text(json.dumps({"family": "RhatMinus", "n": 2,
                                 "params": {"q": "2"}}))
    code, doc = run("equiv", "--left", str(left), "--right", str(right),
                    "--mode", "left")
    assert code == 0 and doc["left_equivalent"] and not doc["right_equivalent"]


def manin_inputs(tmp_path, relations):
    pair = tmp_path / "pair.json"
    pair.write_text(json.dumps({
        "A": {"family": "Aq", "n": 2, "params": {"q": "2"}},
        "B": {"family": "A_n", "n": 2, "params": {}}}))
    matrix = tmp_path / "m.txt"
    matrix.write_text("x[1]; 0\n0; x[2]\n")
    rel = tmp_path / "rel.txt"
    rel.write_text(relations)
    return str(pair), str(matrix), str(rel)


def test_manin_check_passes(run, tmp_path):
    pair, matrix, rel = manin_inputs(tmp_path, "x[2]*x[1] - 2*x[1]*x[2]\n")
    code, doc = run("manin-check", "--pair", pair, "--matrix", matrix,
                    "--relations", rel)
    assert code == 0 and doc["manin"]


def test_manin_check_fails(run, tmp_path):
    pair, matrix, rel = manin_inputs(tmp_path, "x[1]*x[2] - x[2]*x[1]\n")
    code, doc = run("manin-check", "--pair", pair, "--matrix", matrix,
                    "--relations", rel)
    assert code == 1 and not doc["manin"]


def test_manin_check_bad_input(run, tmp_path, capsys):
    pair, matrix, _ = manin_inputs(tmp_path, "")
    assert main(["manin-check", "--pair", pair, "--matrix", matrix,
                 "--relations", str(tmp_path / "missing.txt")]) == 2
    capsys.readouterr()


def test_pairing_command(run, tmp_path):
    spec = tmp_path / "rm.json"
    spec.write_text(json.dumps({"family": "RhatMinus", "n": 2,
                                "params": {"q": "2"}}))
    code, doc = run("pairing", "--spec", str(spec), "--k", "3",
                    "--kind", "A", "--method", "hecke")
    assert code == 0 and doc["exists"]
    assert doc["operator"]["axioms"]["pass"]
    assert doc["operator"]["provenance"] == "hecke"


def test_pairing_not_exists(run):
    code, doc = run("pairing", "--family", "FourParam", "--a", "1", "--b", "2",
                    "--c", "1", "--kappa", "1", "--k", "3", "--kind", "A",
                    "--method", "closed")
    assert code == 1 and not doc["exists"]


def test_minor_command(run, tmp_path):
    pair = tmp_path / "pair.json"
    pair.write_text(json.dumps({
        "A": {"family": "A_n", "n": 2, "params": {}},
        "B": {"family": "A_n", "n": 2, "params": {}}}))
    matrix = tmp_path / "m.txt"
    matrix.write_text("a; b\nc; d\n")
    code, doc = run("minor", "--pair", str(pair), "--matrix", str(matrix),
                    "--k", "2", "--kind", "A")
    assert code == 0
    assert doc["entries"][1][1] == "1/2*a*d - 1/2*c*b"


def test_scenario_commands(run, tmp_path):
    code, doc = run("scenario", "bcd", "--family", "D", "--n", "2")
    assert code == 0 and doc["pass"]
    code, doc = run("scenario", "fourparam", "--a", "1", "--b", "1",
                    "--c", "1", "--kappa", "1")
    assert code == 0 and doc["pass"]
    sc = tmp_path / "sl2.json"
    sc.write_text(json.dumps({
        "dim": 3,
        "brackets": [[1, 2, 3, "1"], [2, 1, 3, "-1"], [3, 1, 1, "2"],
                     [1, 3, 1, "-2"], [3, 2, 2, "-2"], [2, 3, 2, "2"]]}))
    code, doc = run("scenario", "lie", "--sc", str(sc))
    assert code == 0 and doc["pass"]


def test_verify_suite_command(run):
    code, doc = run("verify-suite", "--suite", "negative")
    assert code == 0 and doc["pass"]
    assert all(item["pass"] for item in doc["results"])


def test_bad_json_is_input_error(run, tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["catalog", "--spec", str(bad)]) == 2
    capsys.readouterr()


def test_unknown_suite_is_input_error(capsys):
    assert main(["verify-suite", "--suite", "nope"]) == 2
    capsys.readouterr()


def test_pairing_group_method(run):
    code, doc = run("pairing", "--family", "A_n", "--n", "2", "--k", "3",
                    "--kind", "S", "--method", "group")
    assert code == 0 and doc["operator"]["axioms"]["pass"]
    assert doc["operator"]["provenance"] == "group_average"


def test_pairing_brauer_method(run):
    code, doc = run("pairing", "--family", "B_n", "--n", "3", "--k", "2",
                    "--kind", "S", "--method", "brauer")
    assert code == 0 and doc["operator"]["provenance"] == "brauer"


def test_minor_s_kind(run, tmp_path):
    pair = tmp_path / "pair.json"
    pair.write_text(json.dumps({
        "A": {"family": "A_n", "n": 2, "params": {}},
        "B": {"family": "A_n", "n": 2, "params": {}}}))
    matrix = tmp_path / "m.txt"
    matrix.write_text("a; b\nc; d\n")
    code, doc = run("minor", "--pair", str(pair), "--matrix", str(matrix),
                    "--k", "2", "--kind", "S")
    assert code == 0
    assert doc["entries"][0][1] == "1/2*a*b + 1/2*b*a"


def test_catalog_inline_params(run):
    code, doc = run("catalog", "--family", "Aqhat",
                    "--params", '{"qhat": [["1","2"],["1/2","1"]]}')
    assert code == 0 and len(doc["matrix"]) == 4


def test_wrong_method_for_family(run, capsys):
    assert main(["pairing", "--family", "A_n", "--n", "2", "--k", "2",
                 "--kind", "S", "--method", "hecke"]) == 2
    capsys.readouterr()


def test_reports_are_deterministic(run):
    outputs = set()
    for _ in range(2):
        code, doc = run("pairing", "--family", "RhatMinus", "--n", "2",
                        "--q", "2", "--k", "2", "--kind", "A",
                        "--method", "generic")
        assert code == 0
        outputs.add(json.dumps(doc, sort_keys=True))
    assert len(outputs) == 1
