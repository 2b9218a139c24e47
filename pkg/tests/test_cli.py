import json
import subprocess
import sys

import pytest

from ccavkit import io
from ccavkit.cli import main
from ccavkit.core import Election
from ccavkit.hardness import gen_3dm


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.mark.parametrize("literal, expected", [
    ("8,7,6,5", "[3,2,1,0]"), ("0,0", "[0,0]"), ("1,1/2,1/3", "[4,1,0]"),
])
def test_normalize(capsys, literal, expected):
    code, out, _ = run(capsys, "normalize", "--vector", literal)
    assert code == 0 and out.strip() == expected


def test_normalize_parse_failure(capsys):
    code, _, err = run(capsys, "normalize", "--vector", "1,x")
    assert code == 2 and "not a rational" in err


def test_classify(capsys, tmp_path):
    f5 = write(tmp_path, "f5.json", {"kind": "pattern", "prefix": ["2"], "middle": "1", "suffix": ["0"]})
    borda = write(tmp_path, "borda.json", io.envelope("generator", {"kind": "builtin", "name": "borda"}))
    p31 = write(tmp_path, "p31.json", {"kind": "pattern", "prefix": ["3"], "middle": "1", "suffix": ["0"]})
    tab = write(tmp_path, "tab.json", {"kind": "tabulated", "vectors": [["1", "0"]]})
    assert json.loads(run(capsys, "classify", f5)[1]) == {"outcome": "poly", "case": "ApproveVeto"}
    assert json.loads(run(capsys, "classify", borda)[1]) == {"outcome": "np-complete", "witness": "Thm48"}
    assert json.loads(run(capsys, "classify", p31)[1])["witness"] == "Thm410_2"
    assert run(capsys, "classify", tab)[0] == 3


def test_solve_exit_codes(capsys, tmp_path):
    won = write(tmp_path, "won.json", {
        "candidates": ["p", "a"], "registered": [{"order": ["p", "a"]}],
        "unregistered": [], "preferred": "p", "budget": 0})
    code, out, _ = run(capsys, "solve", won, "--vector", "1,0")
    assert code == 0 and json.loads(out)["witness"] == []
    lost = write(tmp_path, "lost.json", {
        "candidates": ["p", "a"], "registered": [{"order": ["a", "p"], "count": 3}],
        "unregistered": [{"order": ["p", "a"]}], "preferred": "p", "budget": 1})
    code, out, _ = run(capsys, "solve", lost, "--vector", "1,0")
    assert code == 1 and json.loads(out) == {"decision": False, "method": "1-approval"}


def test_solve_brute_matches_auto(capsys, tmp_path):
    inst = write(tmp_path, "i.json", {
        "candidates": ["p", "a", "b", "c"],
        "registered": [{"order": ["a", "b", "p", "c"], "count": 2}],
        "unregistered": [{"order": ["p", "c", "a", "b"]}, {"order": ["c", "p", "b", "a"], "count": 2}],
        "preferred": "p", "budget": 3})
    spec = write(tmp_path, "f5.json", {"kind": "pattern", "prefix": ["2"], "middle": "1", "suffix": ["0"]})
    auto = json.loads(run(capsys, "solve", inst, spec)[1])
    brute = json.loads(run(capsys, "solve", inst, spec, "--method", "brute")[1])
    assert auto["method"] == "approve-veto" and brute["method"] == "brute"
    assert auto["decision"] == brute["decision"]


def test_solve_bound_exceeded(capsys, tmp_path):
    inst = write(tmp_path, "i.json", {
        "candidates": ["p", "a", "b"], "registered": [],
        "unregistered": [{"order": o} for o in (["p", "a", "b"], ["a", "b", "p"], ["b", "a", "p"])],
        "preferred": "p", "budget": 2})
    assert run(capsys, "solve", inst, "--vector", "3,1,0", "--method", "brute",
               "--max-distinct", "2")[0] == 4


def test_solve_needs_one_vector_source(capsys, tmp_path):
    inst = write(tmp_path, "i.json", {"candidates": ["p"], "registered": [], "unregistered": [],
                                      "preferred": "p", "budget": 0})
    assert run(capsys, "solve", inst)[0] == 2
    assert run(capsys, "solve", str(tmp_path / "missing.json"), "--vector", "1")[0] == 2


def test_distinguish(capsys):
    assert json.loads(run(capsys, "distinguish", "--v1", "2,1,0", "--v2", "4,2,0")[1]) == {"equivalent": True}
    code, out, _ = run(capsys, "distinguish", "--v1", "1,1,0", "--v2", "1,0,0")
    doc = json.loads(out)
    election = io.election_from_json(doc["election"])
    assert election.winners((1, 1, 0)) != election.winners((1, 0, 0))
    assert doc["verification"]["v1_winners"] == sorted(election.winners((1, 1, 0)))
    code, out, _ = run(capsys, "distinguish", "--v1", "1,0", "--v2", "0,0")
    assert code == 0 and not json.loads(out)["equivalent"]
    assert run(capsys, "distinguish", "--v1", "1,0", "--v2", "1,0,0")[0] == 2


def test_gen3dm_output_is_reproducible(capsys):
    _, first, _ = run(capsys, "gen3dm", "--k", "2", "--n", "4", "--planted", "--seed", "7")
    _, second, _ = run(capsys, "gen3dm", "--k", "2", "--n", "4", "--planted", "--seed", "7")
    assert first == second
    assert io.threedm_from_json(json.loads(first)) == gen_3dm(2, 4, True, 7)
    assert run(capsys, "gen3dm", "--k", "1", "--n", "5")[0] == 2


def test_reduce(capsys, tmp_path):
    tdm = write(tmp_path, "in.3dm.json", io.envelope("threedm", io.threedm_to_json(gen_3dm(2, 4, True, 7))))
    borda = write(tmp_path, "borda.json", {"kind": "builtin", "name": "borda"})
    code, out, _ = run(capsys, "reduce", tdm, "--case", "auto", "--generator", borda, "--check")
    doc = json.loads(out)
    assert code == 0 and doc["num_candidates"] == 12 and doc["check"]["agree"]
    assert io.ccav_from_json(doc["instance"]).m == 12
    code, out, _ = run(capsys, "reduce", tdm, "--case", "case2", "--coeffs", "3,1")
    assert code == 0 and json.loads(out)["kind"] == "case2-wide"


def test_reduce_precondition_failures(capsys, tmp_path):
    small = write(tmp_path, "k1.json", io.threedm_to_json(gen_3dm(1, 1, True, 0)))
    veto = write(tmp_path, "veto.json", {"kind": "builtin", "name": "k-veto", "k": 3})
    assert run(capsys, "reduce", small, "--case", "veto-style", "--generator", veto)[0] == 5
    assert run(capsys, "reduce", small, "--case", "case2", "--coeffs", "2,1")[0] == 5
    assert run(capsys, "reduce", small, "--case", "case1", "--coeffs", "3,2")[0] == 5
    assert run(capsys, "reduce", small, "--case", "auto")[0] == 5


def test_validate(capsys, tmp_path):
    tab = write(tmp_path, "tab.json", {"kind": "tabulated", "vectors": [["1", "0"], ["3", "2", "0"]]})
    doc = json.loads(run(capsys, "validate", tab, "--up-to", "5")[1])
    assert (doc["pure"], doc["flexible_pure"]) == (False, True)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ccavkit", "normalize", "--vector", "8,7,6,5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "[3,2,1,0]"


def test_election_json_uses_count_field():
    election = Election(("a", "b"), io.votes_from_json([{"order": ["a", "b"], "count": 2}]))
    assert io.election_to_json(election)["votes"] == [{"order": ["a", "b"], "count": 2}]
