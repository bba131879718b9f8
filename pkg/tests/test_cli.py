from __future__ import annotations

import io
import json
from fractions import Fraction

import pytest
from conftest import FIXTURES, load_corpus

from forcing_lab.builders import recognize_family, tfset_clawfree
from forcing_lab.cli import main, ratio_rows
from forcing_lab.codecs import from_graph6, to_graph6
from forcing_lab.families import complete_graph, prism
from forcing_lab.verify import read_corpus, verify_corpus

CORPUS = str(FIXTURES / "clawfree_cubic_le14.g6")


def run(argv, capsys, monkeypatch, stdin: str = ""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_both(capsys, monkeypatch):
    code, out, _ = run(["compute"], capsys, monkeypatch, to_graph6(prism()))
    js = json.loads(out)
    assert code == 0 and js["F"]["value"] == 3 and js["F_t"]["value"] == 3
    assert json.loads(json.dumps(js)) == js


def test_compute_edgelist_ft(capsys, monkeypatch, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("4\n0 1\n1 2\n2 3\n")
    code, out, _ = run(["compute", "--ft", "--format", "edgelist", "--input", str(path)], capsys, monkeypatch)
    assert code == 0 and json.loads(out)["value"] == 2


@pytest.mark.parametrize(
    "argv, stdin, code",
    [
        (["compute"], "not graph6 !!", 2),
        (["compute"], "", 2),
        (["compute", "--f"], to_graph6(from_graph6("X" + "?" * 50)), 3),
        (["certify"], "C~", 4),
        (["certify"], to_graph6(from_graph6("Es\\o")), 4),
        (["generate", "necklace", "1"], "", 2),
        (["generate", "nosuch"], "", 2),
        (["ratio-scan", "1"], "", 2),
        (["frobnicate"], "", 2),
    ],
)
def test_exit_codes(argv, stdin, code, capsys, monkeypatch):
    assert run(argv, capsys, monkeypatch, stdin)[0] == code


def test_generate_named(capsys, monkeypatch):
    code, out, _ = run(["generate", "necklace", "2"], capsys, monkeypatch)
    assert code == 0 and from_graph6(out.strip()).n == 8
    code, out, _ = run(["generate", "prism"], capsys, monkeypatch)
    assert from_graph6(out.strip()) == prism()
    code, out, _ = run(["generate", "k4"], capsys, monkeypatch)
    assert from_graph6(out.strip()) == complete_graph(4)


def test_generate_expand_triple_edge(capsys, monkeypatch):
    code, out, _ = run(["generate", "expand", "--multigraph", "-"], capsys, monkeypatch, "2\n0 1 3\n")
    G = from_graph6(out.strip())
    assert code == 0 and G.n == 6 and G.edge_count == 9
    code, out, _ = run(["compute", "--f"], capsys, monkeypatch, out)
    assert json.loads(out)["value"] == 3


def test_verify_corpus_passes(capsys, monkeypatch):
    code, out, _ = run(["verify-theorems", "--input", CORPUS, "--json"], capsys, monkeypatch)
    js = json.loads(out)
    assert code == 0 and js["pass"]
    assert json.loads(json.dumps(js, sort_keys=True)) == js
    statuses = [r["status"] for r in js["records"]]
    assert statuses.count("skipped") == 1 and statuses.count("checked") == 9


def test_corrupted_certificate_is_caught(capsys, monkeypatch, tmp_path):
    (G,) = [g for g in load_corpus() if str(recognize_family(g)) == "Necklace(3)"]
    bad = tmp_path / "bad.jsonl"
    # one vertex short of a minimum TF-set, so it cannot be a TF-set
    claimed = tfset_clawfree(G).vertices.to_list()[1:]
    bad.write_text(json.dumps({"graph6": to_graph6(G), "set": claimed}) + "\n")
    code, out, _ = run(
        ["verify-theorems", "--input", CORPUS, "--json", "--certificates", str(bad)], capsys, monkeypatch
    )
    js = json.loads(out)
    assert code == 1 and not js["pass"]
    (ce,) = js["theorems"]["certificate"]["counterexamples"]
    assert ce["graph6"] == to_graph6(G) and ce["provenance"] == "claimed"


def test_unparsable_corpus_line_is_reported(capsys, monkeypatch):
    code, out, _ = run(["verify-theorems", "--json"], capsys, monkeypatch, "C~\n!!bad\nE{Sw\n")
    js = json.loads(out)
    assert code == 0
    assert [r["graph_id"] for r in js["records"]] == ["line1", "line2", "line3"]
    assert js["records"][1]["reason"].startswith("ParseError")


def test_verify_order_independent_of_workers():
    graphs, _ = read_corpus((FIXTURES / "clawfree_cubic_le14.g6").read_text().splitlines())
    one = verify_corpus(graphs, workers=1).to_json()
    two = verify_corpus(graphs, workers=2).to_json()
    assert one == two


def test_ratio_scan_table(capsys, monkeypatch):
    code, out, _ = run(["ratio-scan", "8"], capsys, monkeypatch)
    assert code == 0 and "6/5" in out


def test_ratio_rows_long_range():
    rows = ratio_rows(200, exact_up_to=3)
    assert all(r["matches"] for r in rows)
    row = rows[198 - 2]
    assert Fraction(row["ratio"]) == Fraction(198, 100) and float(Fraction(row["ratio"])) == 1.98
