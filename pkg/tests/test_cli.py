import csv
import io
import json

import pytest

from eccenergy import lab
from eccenergy.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_energy_graph6(capsys):
    code, out, _ = run(capsys, "energy", "--graph6", "E~~w")
    assert code == 0
    rows = {r["matrix"]: r for r in csv.DictReader(io.StringIO(out))}
    assert rows["eps"]["energy"] == "10.000000"


def test_spectrum_sizes_with_deletion(capsys):
    code, out, _ = run(capsys, "spectrum", "--sizes", "2,2", "--delete", "0,2", "--matrix", "eps", "--format", "json")
    assert code == 0
    vals = [r["eigenvalue"] for r in json.loads(out)]
    assert vals == [4.0, 1.0, -1.0, -4.0]


def test_spectrum_reports_multiplicity(capsys):
    code, out, _ = run(capsys, "spectrum", "--sizes", "3,3", "--matrix", "eps")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["eigenvalue"]: r["multiplicity"] for r in rows} == {"4.000000": "2", "-2.000000": "4"}


def test_compare_edge_file(capsys, tmp_path):
    f = tmp_path / "k6.txt"
    f.write_text("n 6\n" + "\n".join(f"{u} {v}" for u in range(6) for v in range(u + 1, 6)))
    code, out, _ = run(capsys, "compare", "--edges", str(f), "--edge", "0,1", "--format", "json")
    assert code == 0
    [r] = json.loads(out)
    assert r["eps_class"] == "increase" and abs(r["eps_after"] - 10.7446) < 5e-4


def test_compare_all_edges(capsys):
    code, out, _ = run(capsys, "compare", "--graph6", "Cr")
    assert code == 0
    assert len(list(csv.DictReader(io.StringIO(out)))) == 4


def test_sweeps(capsys):
    code, out, _ = run(capsys, "sweep-bipartite", "--m-max", "3", "--n-max", "5")
    assert code == 0 and len(out.strip().splitlines()) == 1 + 4 + 3
    code, out, _ = run(capsys, "sweep-kpartite", "--n-total-max", "6", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 7


def test_verify_default_names(capsys):
    code, out, _ = run(capsys, "verify", "lemma1", "main3", "--limit", "6")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["check"], r["passed"]) for r in rows] == [("lemma1", "true"), ("main3", "true")]


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(lab.VERIFIERS, "lemma2", (lambda hi: ["(2,9): forced"], 9))
    code, out, _ = run(capsys, "verify", "lemma2")
    assert code == 1 and "forced" in out


def test_search_file(capsys, tmp_path):
    f = tmp_path / "corpus.g6"
    f.write_text("Cr\nE~~w\n")
    code, out, _ = run(capsys, "search", "--input", str(f), "--predicate", "eps-increase")
    assert code == 0
    ids = {r["graph_id"] for r in csv.DictReader(io.StringIO(out))}
    assert "E~~w" in ids


@pytest.mark.parametrize("argv", [
    ("energy", "--graph6", "A"),                         # malformed graph6
    ("energy", "--graph6", "A?"),                        # disconnected
    ("compare", "--sizes", "2,2", "--edge", "0,1"),      # absent edge
    ("compare", "--graph6", "Bg", "--edge", "0,1"),      # P3 bridge: disconnects
    ("energy", "--edges", "/nonexistent/file"),
    ("sweep-kpartite", "--n-total-max", "3"),
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_search_bad_line_exit_2(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("A_\nA\n")
    code, _, err = run(capsys, "search", "--input", str(f), "--predicate", "eps-equal")
    assert code == 2 and "line 2" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["energy"])
    assert exc.value.code == 2


def test_verify_without_names_runs_all(capsys):
    code, out, _ = run(capsys, "verify", "--limit", "5")
    assert code == 0
    assert [r["check"] for r in csv.DictReader(io.StringIO(out))] == list(lab.VERIFIERS)
