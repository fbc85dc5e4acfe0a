"""Smoke tests for the python module and the command-line tool."""

import json
import os
import subprocess
import sys

import pytest

import dwl

C3 = dwl.Digraph(3, [(0, 1), (1, 2), (2, 0)])


def test_core_predicates():
    assert dwl.scc_condensation(C3) == [[0, 1, 2]]
    assert dwl.reachable_set(C3, [0], [1]) == [0]
    assert dwl.is_guarding(dwl.Digraph(2, [(0, 1)]), [0], [1])
    assert dwl.is_normal(C3, [0], [1])
    assert not dwl.is_normal(C3, [0], [])


def test_validators_and_width():
    d = dwl.DirectedPathDecomposition([[0], [0, 1], [0, 2]])
    assert dwl.validate_dpd(C3, d).ok
    assert d.width() == 2
    bad = dwl.DirectedPathDecomposition([[0, 1], [1, 2]])
    report = dwl.validate_dpd(C3, bad)
    assert not report.ok
    assert ("DPW", False, "arc(2,0)") in report.verdicts


def test_conversions_preserve_width():
    d = dwl.normalize_dpd(dwl.DirectedPathDecomposition([[0], [0, 1], [0, 2]]))
    kelly = dwl.dpd_to_kelly_path(d)
    assert dwl.validate_kelly(C3, kelly).ok
    assert kelly.width() == d.width()
    back = dwl.kelly_path_to_dpd(kelly)
    assert back.bags == d.bags


def test_separators():
    r = dwl.find_sep_exact(C3, [0, 1, 2], "3/4")
    assert r.S == [0]
    assert dwl.validate_separator(C3, [0, 1, 2], "3/4", r)
    assert dwl.dsn(C3, "3/4") == 1
    h = dwl.find_sep_heuristic(C3, [0, 1, 2], "7/8", seed=1)
    assert dwl.validate_separator(C3, [0, 1, 2], "7/8", h)


def test_approximations_validate():
    dec, tele = dwl.make_dpdec(C3, [0, 1, 2], threshold=1)
    assert dwl.validate_dpd(C3, dec).ok
    assert dec.width() <= tele.recursion_depth * tele.max_separator_size + 1
    arb, _ = dwl.make_arbdec(C3, [0, 1, 2], [])
    assert dwl.validate_arboreal(C3, arb).ok
    assert arb.width() <= 2


def test_refine_glue():
    r = dwl.refine(C3, [1, 2], [0], [1])
    assert r.parts == [([2], [2])]
    child = dwl.trivial_arboreal(C3, [2])
    glued = dwl.glue([child], r, debug_graph=C3)
    assert dwl.validate_arboreal(C3, glued).ok
    assert glued.universe == [1, 2]


def test_oracles():
    assert dwl.dpw_by_ordering(C3)[0] == 2
    assert dwl.dagwidth_by_game(C3) == 2
    assert dwl.kellywidth_by_game(C3) == 2
    assert dwl.kellywidth_by_elimination(C3)[0] == 2
    w, cert = dwl.dtw_exact_small(C3)
    assert w == 1
    assert dwl.validate_arboreal(C3, cert).ok
    with pytest.raises(RuntimeError):
        dwl.dtw_exact_small(dwl.Digraph(6), 5)


def test_json_round_trip():
    text = dwl.decomposition_to_json(dwl.trivial_dpd(C3))
    doc = json.loads(text)
    assert doc["kind"] == "dpd"
    assert doc["nodes"][0]["bag"] == [0, 1, 2]
    back = dwl.decomposition_from_json(text)
    assert dwl.decomposition_to_json(back) == text
    with pytest.raises(ValueError):
        dwl.decomposition_from_json('{"kind":"dpd"}')


def test_graph_files():
    g = dwl.parse_digraph("3 3\n0 1\n1 2\n2 0\n")
    assert g == C3
    assert dwl.serialize_digraph(g) == "3 3\n0 1\n1 2\n2 0\n"
    with pytest.raises(ValueError):
        dwl.parse_digraph("2 1\n0 0\n")


def test_families():
    t2 = dwl.gen_family("biorient-ternary-tree", [2])
    assert t2.n == 13 and len(t2.arcs) == 24
    a = dwl.gen_family("random-digraph", [6, 0.4], seed=3)
    b = dwl.gen_family("random-digraph", [6, 0.4], seed=3)
    assert a == b


# --- command-line tool ---

CLI = os.environ.get("DWL_CLI")
needs_cli = pytest.mark.skipif(CLI is None, reason="DWL_CLI not set")


def run_cli(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr + proc.stdout
    return proc.stdout


@needs_cli
def test_cli_end_to_end(tmp_path):
    graph = tmp_path / "c3.graph"
    run_out = run_cli("gen", "--family", "directed-cycle", "--params", "3", "-o", str(graph))
    assert graph.read_text() == "3 3\n0 1\n1 2\n2 0\n"
    assert run_out == ""

    out = run_cli("oracle", "--param", "dtw", "-i", str(graph))
    assert json.loads(out)["width"] == 1
    assert json.loads(run_cli("oracle", "--param", "dagw", "-i", str(graph)))["width"] == 2
    kw = json.loads(run_cli("oracle", "--param", "kw", "-i", str(graph)))
    assert kw["width"] == 2 and kw["width_subtract_one"] == 1

    cert = tmp_path / "dpw-cert.json"
    dpw = json.loads(run_cli("oracle", "--param", "dpw", "-i", str(graph), "-o", str(cert)))
    assert dpw["width"] == 2 and dpw["certificate"] == str(cert)
    report = json.loads(run_cli("validate", "--kind", "dpd", "-g", str(graph), "-d", str(cert)))
    assert report["pass"] is True
    # Game oracles carry no certificate.
    run_cli("oracle", "--param", "dagw", "-i", str(graph), "-o", str(cert), expect=2)

    dec = tmp_path / "dec.json"
    out = json.loads(run_cli("compute", "--param", "dpw", "--algo", "approx", "--strategy",
                             "exact", "--threshold", "1", "-i", str(graph), "-o", str(dec)))
    assert out["width"] <= 2
    report = json.loads(run_cli("validate", "--kind", "dpd", "-g", str(graph), "-d", str(dec)))
    assert report["pass"] is True

    kelly = tmp_path / "kelly.json"
    run_cli("convert", "--from", "dpd", "--to", "kelly", "-d", str(dec), "-o", str(kelly))
    report = json.loads(run_cli("validate", "--kind", "kelly", "-g", str(graph), "-d", str(kelly)))
    assert report["pass"] is True


@needs_cli
def test_cli_validation_failure_and_witness(tmp_path):
    graph = tmp_path / "c3.graph"
    graph.write_text("3 3\n0 1\n1 2\n2 0\n")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "kind": "dpd", "universe": [0, 1, 2],
        "nodes": [{"id": 0, "bag": [0, 1]}, {"id": 1, "bag": [1, 2]}],
        "arcs": [{"from": 0, "to": 1}],
    }))
    out = run_cli("validate", "--kind", "dpd", "-g", str(graph), "-d", str(bad), expect=1)
    report = json.loads(out)
    dpw = [v for v in report["verdicts"] if v["condition"] == "DPW"][0]
    assert dpw["pass"] is False
    assert dpw["witness"] == "arc(2,0)"


@needs_cli
def test_cli_sep_and_compare(tmp_path):
    graph = tmp_path / "c3.graph"
    graph.write_text("3 3\n0 1\n1 2\n2 0\n")
    subset = tmp_path / "u.txt"
    subset.write_text("0 1 2\n")
    out = json.loads(run_cli("sep", "--alpha", "3/4", "--subset", str(subset), "-i", str(graph)))
    assert out["S"] == [0] and out["valid"] is True

    table = run_cli("compare", "-i", str(graph), "--threshold", "1")
    assert "dpw" in table and "dtw" in table and "ratio" in table


@needs_cli
def test_cli_usage_and_capability_exits(tmp_path):
    run_cli("compute", "--param", "nope", "-i", "missing.graph", expect=2)
    big = tmp_path / "big.graph"
    big.write_text("30 0\n")
    run_cli("oracle", "--param", "dtw", "-i", str(big), expect=3)


@needs_cli
def test_cli_compute_validate_round_trip_all_params(tmp_path):
    for seed in (11, 12):
        graph = tmp_path / f"g{seed}.graph"
        graph.write_text(run_cli("gen", "--family", "random-digraph", "--params", "6", "0.3",
                                 "--seed", str(seed)))
        for param, kind in [("dpw", "dpd"), ("dagw", "dag"), ("kw", "kelly"),
                            ("dtw", "arboreal")]:
            for strategy in ("exact", "heuristic", "trivial"):
                dec = tmp_path / f"{param}-{strategy}-{seed}.json"
                run_cli("compute", "--param", param, "--strategy", strategy, "--threshold", "2",
                        "--seed", "1", "-i", str(graph), "-o", str(dec))
                run_cli("validate", "--kind", kind, "-g", str(graph), "-d", str(dec))


@needs_cli
def test_cli_caps_env(tmp_path):
    graph = tmp_path / "g.graph"
    graph.write_text(run_cli("gen", "--family", "random-dag", "--params", "6", "0.3",
                             "--seed", "2"))
    run_cli("oracle", "--param", "dtw", "-i", str(graph), expect=3)
    env = dict(os.environ, DWL_EXACT_CAPS="dtw=6,games=8,orderings=12")
    proc = subprocess.run([CLI, "oracle", "--param", "dtw", "-i", str(graph)],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["width"] == 0  # acyclic


@needs_cli
def test_cli_deterministic_bytes(tmp_path):
    graph = tmp_path / "g.graph"
    graph.write_text(run_cli("gen", "--family", "random-digraph", "--params", "7", "0.3",
                             "--seed", "5"))
    a = run_cli("compute", "--param", "dpw", "--strategy", "heuristic", "--seed", "9",
                "--threshold", "2", "-i", str(graph))
    b = run_cli("compute", "--param", "dpw", "--strategy", "heuristic", "--seed", "9",
                "--threshold", "2", "-i", str(graph))
    assert a == b
