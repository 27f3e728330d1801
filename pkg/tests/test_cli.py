"""CLI grammar, output determinism, and the exit-code contract."""

from __future__ import annotations

import io
import json

import pytest

from spanwalk.cli import run


def _run(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


def _run_json(argv):
    code, text = _run(argv)
    return code, json.loads(text)


def test_complexity_of_named_complements():
    for name, want in (
        ("petersen", "2048000"),
        ("paper-h", "2080524"),
        ("paper-bipartite", "2034010"),
    ):
        code, doc = _run_json(["complexity", "--named", name, "--complement"])
        assert code == 0
        assert doc["spanning_trees"] == want


def test_complexity_accepts_graph6_and_edge_list(tmp_path):
    code, doc = _run_json(["complexity", "--graph6", "C~"])
    assert code == 0 and doc["spanning_trees"] == "16"
    p = tmp_path / "g.txt"
    p.write_text("3\n0 1\n1 2\n2 0\n")
    code, doc = _run_json(["complexity", "--edge-list", str(p)])
    assert code == 0 and doc["spanning_trees"] == "3"


def test_graph_info_and_export():
    code, doc = _run_json(["graph", "info", "--named", "paper-bipartite"])
    assert code == 0
    assert doc == {
        "n": 10,
        "size": 15,
        "directed": False,
        "regular_degree": 3,
        "bipartite": True,
    }
    code, doc = _run_json(["graph", "export", "--named", "petersen"])
    assert code == 0
    assert doc["edge_list"].startswith("10\n0 1\n")
    # exported text round-trips through the edge-list input
    code2, doc2 = _run_json(["graph", "info", "--named", "petersen"])
    assert doc2["regular_degree"] == 3


def test_walks_output():
    code, doc = _run_json(["walks", "--named", "paper-bipartite", "--max-k", "6"])
    assert code == 0
    assert doc == {"max_k": 6, "counts": ["0", "30", "0", "190", "0", "1530"]}


def test_series_eval_output():
    code, doc = _run_json(["series", "--eval", "--max-k", "6", "--named", "petersen"])
    assert code == 0
    assert doc["n"] == 10 and doc["d"] == 3
    assert len(doc["partials"]) == 6
    assert abs(doc["partials"][-1] - 14.53221) < 5e-5
    assert doc["rounding_bound"] < 1e-12


def test_series_identify_output():
    code, doc = _run_json(["series", "--identify", "--named", "paper-bipartite"])
    assert code == 0
    assert doc["t_complement"] == "2034010"
    assert doc["terms_used"] >= 4
    assert doc["precision_bits"] >= 64
    assert 0 < doc["bracket_width"] < 1


def test_series_identify_precision_flag_and_env(monkeypatch):
    code, doc = _run_json(
        ["series", "--identify", "--precision-bits", "128", "--named", "petersen"]
    )
    assert code == 0 and doc["precision_bits"] == 128
    monkeypatch.setenv("SPANWALK_PRECISION_BITS", "256")
    code, doc = _run_json(["series", "--identify", "--named", "petersen"])
    assert code == 0 and doc["precision_bits"] == 256
    # flag overrides environment
    code, doc = _run_json(
        ["series", "--identify", "--precision-bits", "128", "--named", "petersen"]
    )
    assert code == 0 and doc["precision_bits"] == 128


def test_bounds_subcommands(tmp_path):
    # the complement of a perfect matching on 10 vertices is 8-regular: dense
    # enough for the degree-only bound
    matching = tmp_path / "matching.txt"
    matching.write_text("10\n0 1\n2 3\n4 5\n6 7\n8 9\n")
    code, doc = _run_json(["bounds", "prop1", "--edge-list", str(matching), "--complement"])
    assert code == 0
    assert doc["name"] == "prop1" and doc["target"] == "t(G)"
    assert doc["preconditions_ok"] is True
    assert abs(doc["linear_value"] - 3.1804258e7) < 2e2

    code, doc = _run_json(["bounds", "prop2", "--named", "paper-h", "--complement"])
    assert code == 0
    assert doc["parameters"]["s"] == pytest.approx(0.8051748)
    assert abs(doc["log_value"] - 14.31436) < 1e-4

    code, doc = _run_json(["bounds", "thm2", "--named", "paper-h", "--m", "3"])
    assert code == 0
    assert abs(doc["log_value"] - 14.31436) < 1e-4

    code, doc = _run_json(["bounds", "thm3", "--named", "paper-bipartite", "--m", "6", "--k", "6"])
    assert code == 0
    assert abs(doc["lower"]["linear_value"] - 2034010) < 2
    assert abs(doc["upper"]["linear_value"] - 2034012) < 2


def test_bounds_precondition_failure_reports_without_values():
    code, doc = _run_json(["bounds", "thm2", "--named", "petersen", "--m", "2"])
    assert code == 0
    assert doc["preconditions_ok"] is False
    assert "log_value" not in doc and "linear_value" not in doc
    assert doc["reason"]


def test_bounds_thm3_csv():
    code, text = _run(
        ["bounds", "thm3", "--named", "paper-bipartite", "--m", "2", "--k", "2", "--format", "csv"]
    )
    assert code == 0
    header, row, trailer = text.split("\n")
    assert header == "m,k,lower,upper"
    cells = row.split(",")
    assert cells[:2] == ["2", "2"]
    assert abs(float(cells[2]) - 2029504) < 2
    assert abs(float(cells[3]) - 2039113) < 2
    assert trailer == ""


def test_construct_g_family():
    code, doc = _run_json(["construct", "--g-family", "2", "0"])
    assert code == 0
    assert doc["n"] == 9 and doc["regular_degree"] == 4
    assert doc["origin"] == {"family": "g", "k": 2, "l": 0}
    assert len(doc["edges"]) == 9 * 4 // 2


def test_construct_random_is_deterministic():
    code1, doc1 = _run_json(["construct", "--random", "10", "3", "42"])
    code2, doc2 = _run_json(["construct", "--random", "10", "3", "42"])
    assert code1 == code2 == 0
    assert doc1 == doc2
    assert doc1["regular_degree"] == 3


def test_synchrony_exhaustive_json():
    code, doc = _run_json(
        ["synchrony", "--named", "petersen", "--t", "1", "--k", "1"]
    )
    assert code == 0
    assert doc["mode"] == "exhaustive"
    assert doc["p_k"] == "1"
    assert doc["e_k"] == "1/2"
    assert doc["i_star_histogram"] == {"2": 10}
    assert doc["p_k_stderr"] is None


def test_synchrony_mc_json_and_csv():
    argv = [
        "synchrony", "--graph6", "C~", "--t", "1", "--k", "2",
        "--mode", "mc", "--samples", "200", "--seed", "11",
    ]
    code, doc = _run_json(argv)
    assert code == 0
    assert doc["mode"] == "monte-carlo"
    assert doc["samples"] == 200
    assert doc["p_k"] == 1.0
    code, text = _run(argv + ["--format", "csv"])
    assert code == 0
    assert text == "i_star,count\n1,200\ninf,0\n"


def test_output_is_byte_identical_across_runs():
    for argv in (
        ["series", "--eval", "--max-k", "8", "--named", "paper-h"],
        ["bounds", "thm3", "--named", "paper-bipartite", "--m", "3", "--k", "4"],
        ["synchrony", "--named", "paper-bipartite", "--t", "2", "--k", "3"],
        ["construct", "--random", "12", "3", "5"],
    ):
        _, first = _run(argv)
        _, second = _run(argv)
        assert first == second, argv


def test_domain_errors_exit_2_with_error_document():
    code, doc = _run_json(["series", "--identify", "--graph6", "C~"])
    assert code == 2
    assert doc["error"]["code"] == "convergence-domain"

    code, doc = _run_json(["bounds", "thm3", "--named", "petersen", "--m", "2", "--k", "2"])
    assert code == 2
    assert doc["error"]["code"] == "bipartite-required"

    code, doc = _run_json(["series", "--identify", "--edge-list", "/nonexistent/file.txt"])
    assert code == 2
    assert doc["error"]["code"] == "io-error"

    code, doc = _run_json(["construct", "--g-family", "2", "2"])
    assert code == 2
    assert doc["error"]["code"] == "invalid-parameter"

    code, doc = _run_json(["walks", "--named", "petersen", "--complement", "--max-k", "3"])
    assert code == 0  # complement of petersen is fine for walks


def test_parse_error_reports_line_number(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3\n0 0\n")
    code, doc = _run_json(["complexity", "--edge-list", str(p)])
    assert code == 2
    assert doc["error"]["code"] == "parse-error"
    assert "line 2" in doc["error"]["message"]


def test_usage_errors_exit_64():
    cases = [
        ["nosuch"],
        ["complexity"],  # missing input source
        ["complexity", "--named", "petersen", "--graph6", "C~"],  # conflicting sources
        ["complexity", "--named", "nosuchgraph"],
        ["walks", "--named", "petersen"],  # missing --max-k
        ["walks", "--named", "petersen", "--max-k", "0"],
        ["series", "--named", "petersen"],  # neither --eval nor --identify
        ["series", "--eval", "--named", "petersen"],  # --eval without --max-k
        ["series", "--identify", "--max-k", "4", "--named", "petersen"],
        ["series", "--eval", "--max-k", "4", "--precision-bits", "96", "--named", "petersen"],
        ["bounds", "thm2", "--named", "petersen"],  # missing --m
        ["bounds", "thm3", "--named", "petersen", "--m", "2"],  # missing --k
        ["synchrony", "--named", "petersen", "--t", "1", "--k", "2", "--samples", "5"],
        ["synchrony", "--named", "petersen", "--t", "1", "--k", "2", "--mode", "mc"],
        ["construct"],
        ["--threads", "0", "complexity", "--named", "petersen"],
    ]
    for argv in cases:
        code, _ = _run(argv)
        assert code == 64, argv


def test_threads_flag_accepted_and_results_identical():
    _, a = _run(["--threads", "1", "complexity", "--named", "petersen", "--complement"])
    _, b = _run(["--threads", "4", "complexity", "--named", "petersen", "--complement"])
    assert a == b


def test_reals_serialize_with_17_significant_digits():
    code, text = _run(["bounds", "thm2", "--named", "paper-h", "--m", "3"])
    assert code == 0
    doc = json.loads(text)
    # re-parsing the printed real recovers the exact float
    printed = text.split('"log_value": ')[1].split(",")[0].strip()
    assert float(printed) == doc["log_value"]
    assert len(printed.replace(".", "").replace("-", "").lstrip("0")) >= 16
