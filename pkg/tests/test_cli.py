import json
import subprocess
import sys

import pytest

from kcircular.cli import main
from kcircular.families import complete_graph, cycle_graph


@pytest.fixture
def graphs(tmp_path):
    paths = {}
    for name, g in (("k4", complete_graph(4)), ("k5", complete_graph(5)), ("tri", cycle_graph(3))):
        p = tmp_path / f"{name}.json"
        p.write_text(g.to_json())
        paths[name] = str(p)
    empty = tmp_path / "empty.json"
    empty.write_text("")
    paths["empty"] = str(empty)
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["1"], "edges": [{"id": "a", "ends": ["1", "7"]}]}')
    paths["bad"] = str(bad)
    return paths


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_k4(graphs, capsys):
    code, out, _ = run(capsys, "analyze", "--input", graphs["k4"], "--k", "1")
    rep = json.loads(out)
    assert code == 0
    assert (rep["rho"], rep["rho_star"]) == (4, 2)
    assert [s["status"] for s in rep["stars"]] == ["tight"] * 4
    assert rep["connected"] and rep["cactus"] and rep["delta"] == 2


def test_analyze_triangle_is_trivial(graphs, capsys):
    code, out, _ = run(capsys, "analyze", "-i", graphs["tri"])
    rep = json.loads(out)
    assert code == 0 and rep["nontrivial"] is False and rep["note"] == "M_1 trivial"


@pytest.mark.parametrize("name", ["empty", "bad"])
def test_parse_errors(graphs, capsys, name):
    code, out, err = run(capsys, "analyze", "-i", graphs[name])
    assert code == 2 and out == "" and err.startswith("kcirc:")


def test_missing_file_and_bad_flags(capsys, tmp_path):
    assert run(capsys, "analyze", "-i", str(tmp_path / "nope.json"))[0] == 2
    assert run(capsys, "analyze", "--format", "yaml")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_infeasible_k(graphs, capsys):
    assert run(capsys, "analyze", "-i", graphs["k4"], "--k", "-1")[0] == 3


def test_enumerate_examples(graphs, capsys):
    code, out, _ = run(capsys, "enumerate", "circuits", "-i", graphs["k4"])
    rep = json.loads(out)
    assert code == 0 and rep["count"] == 6 and all(len(c) == 5 for c in rep["sets"]) and rep["agree"]
    rep = json.loads(run(capsys, "enumerate", "bases", "-i", graphs["k4"])[1])
    assert rep["count"] == 15 and rep["agree"]
    rep = json.loads(run(capsys, "enumerate", "nonsep", "-i", graphs["k5"])[1])
    assert rep["count"] == 5 and rep["agree"]
    rep = json.loads(run(capsys, "enumerate", "cocircuits", "-i", graphs["k4"], "--k", "2")[1])
    assert rep["count"] == 15 and rep["agree"]


def test_enumerate_limits(graphs, capsys, monkeypatch):
    assert run(capsys, "enumerate", "circuits", "-i", graphs["k5"], "--max-edges", "8")[0] == 4
    monkeypatch.setenv("KCIRC_MAX_EDGES", "5")
    assert run(capsys, "enumerate", "circuits", "-i", graphs["k4"])[0] == 4
    assert run(capsys, "enumerate", "circuits", "-i", graphs["k4"], "--max-edges", "6")[0] == 0


def test_enumerate_nonsep_needs_connected(graphs, capsys):
    assert run(capsys, "enumerate", "nonsep", "-i", graphs["tri"])[0] == 5


def test_certify_examples(graphs, capsys):
    code, out, _ = run(capsys, "certify", "-i", graphs["k5"])
    cert = json.loads(out)
    assert code == 0 and cert["verdict"] == "certified" and cert["theorem"] == "G3-conAllSmallUniq"
    cert = json.loads(run(capsys, "certify", "-i", graphs["k4"], "--k", "2")[1])
    assert cert["verdict"] == "unknown"
    code, out, _ = run(capsys, "certify", "--search", "-i", graphs["k4"])
    cert = json.loads(out)
    assert code == 0 and cert["verdict"] == "not_unique" and cert["search_complete"]
    assert sorted(e["id"] for e in cert["counterexample"]["edges"]) == sorted(complete_graph(4).edges)


def test_certify_disconnected(graphs, capsys):
    assert run(capsys, "certify", "-i", graphs["tri"])[0] == 5


def test_certify_search_timeout(graphs, capsys, monkeypatch):
    # an unfinished search with no hit is a resource-limit outcome
    from kcircular import uniqueness
    monkeypatch.setattr(uniqueness, "search_equal_matroid",
                        lambda ctx, bounds: uniqueness.SearchResult(graphs=[], complete=False))
    code, out, _ = run(capsys, "certify", "--search", "-i", graphs["k4"], "--max-time", "0.5")
    cert = json.loads(out)
    assert code == 4 and cert["verdict"] == "unknown" and cert["search_complete"] is False


def test_partial_search_hit_is_definitive(graphs, capsys):
    code, out, _ = run(capsys, "certify", "--search", "-i", graphs["k4"], "--k", "2", "--max-time", "0.0001")
    cert = json.loads(out)
    assert code == 0 and cert["verdict"] == "not_unique"


def test_formats(graphs, capsys):
    dot = run(capsys, "analyze", "-i", graphs["k4"], "--format", "dot")[1]
    assert dot.startswith("graph G {") and dot.count("fillcolor=gold") == 4
    assert '"1" -- "2" [label="12"];' in dot
    text = run(capsys, "analyze", "-i", graphs["k4"], "--format", "text")[1]
    assert "rho: 4" in text and "rho_star: 2" in text
    assert run(capsys, "certify", "-i", graphs["k4"], "--format", "dot")[0] == 2


def test_output_is_deterministic(graphs, capsys):
    for args in (("analyze", "-i", graphs["k5"]), ("enumerate", "cocircuits", "-i", graphs["k4"]),
                 ("certify", "--search", "-i", graphs["k4"]), ("analyze", "-i", graphs["k4"], "--format", "text")):
        first = run(capsys, *args)[1]
        assert run(capsys, *args)[1] == first


def test_corpus_small_and_mutant(capsys):
    code, out, _ = run(capsys, "corpus", "--max-edges", "4")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "corpus", "--max-edges", "4", "--mutant")
    rep = json.loads(out)
    assert code == 1 and not rep["ok"]
    bad = [c for c in rep["checks"] if not c["passed"]]
    assert [c["name"] for c in bad] == ["connectivity"]
    witness = bad[0]["witness"]
    assert witness["k"] >= 1 and len(witness["graph"]["edges"]) <= 4


def test_corpus_with_random_graphs(capsys):
    code, out, _ = run(capsys, "corpus", "--max-edges", "3", "--seed", "7", "--random", "10")
    rep = json.loads(out)
    assert code == 0 and rep["graphs"] > 10


def test_default_corpus_via_module():
    proc = subprocess.run([sys.executable, "-m", "kcircular", "corpus", "--format", "text"],
                          capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stdout[-2000:]
    assert "ok: true" in proc.stdout
