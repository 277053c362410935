import itertools
import json
import os
import pathlib
import subprocess

import pytest

twotree = pytest.importorskip("twotree")

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "schemas" / "run_report.schema.json").read_text())


def subset_count(n, edges):
    """Spanning trees by checking every (n-1)-subset with union-find."""
    total = 0
    for pick in itertools.combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in pick:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        total += ok
    return total


def test_generated_graphs_are_two_trees():
    for family in ("book", "path-square", "fan", "chain", "random"):
        n, edges = twotree.generate(family, 9, seed=4)
        assert n == 9
        assert len(edges) == 2 * n - 3
        assert twotree.is_two_tree(n, edges)


def test_counts_match_subset_oracle():
    for seed in range(6):
        n, edges = twotree.generate("random", 7, seed=seed)
        assert twotree.kirchhoff_count(n, edges) == subset_count(n, edges)


def test_closed_forms_are_exact_ints():
    assert twotree.count_book(20) == 2621440
    assert twotree.count_two_simplicial(16) == 832040
    assert twotree.fibonacci(100) == 354224848179261915075
    n, edges = twotree.generate("book", 40)
    assert twotree.kirchhoff_count(n, edges) == 40 * 2**37


def test_spanning_trees_are_distinct_and_complete():
    n, edges = twotree.generate("random", 7, seed=11)
    trees = twotree.spanning_trees(n, edges)
    assert len({tuple(sorted(t)) for t in trees}) == len(trees) == subset_count(n, edges)
    assert len(twotree.spanning_trees(n, edges, limit=5)) == 5


def test_relabelled_input_round_trips():
    n, edges = twotree.generate("fan", 6)
    perm = [3, 5, 0, 4, 1, 2]
    moved = [tuple(sorted((perm[u], perm[v]))) for u, v in edges]
    trees = twotree.spanning_trees(n, moved)
    edge_set = set(moved)
    assert all(set(t) <= edge_set for t in trees)
    assert len(trees) == 55


def test_errors():
    with pytest.raises(twotree.NotTwoTreeError):
        twotree.elimination_order(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    with pytest.raises(twotree.TwoTreeError):
        twotree.generate("book", 1)
    n, edges = twotree.generate("book", 6)
    with pytest.raises(twotree.TwoTreeError):
        twotree.improve_min(n, edges)


def test_surgeries_and_survey():
    n, edges = twotree.generate("fan", 6)
    split = twotree.improve_min(n, edges)
    assert split["t_g"] == 55
    assert min(split["t_g1"], split["t_g2"]) < 55
    assert 2 * split["t_g"] == split["t_g1"] + split["t_g2"] + 2 * split["gamma"]

    n, edges = twotree.generate("book", 5)
    assert twotree.improve_max(n, edges)["t_gprime"] == 21

    summary = twotree.survey_extremal(6)
    assert (summary["min"], summary["max"]) == (48, 55)
    assert summary["min_attainers_all_books"]


def test_verify_suites():
    assert twotree.verify("bounds", n_max=12, trials=100, seed=1)["passed"]
    assert twotree.verify("oracle", n_max=6)["passed"]


def cli():
    path = os.environ.get("TWOTREE_CLI", str(ROOT / "build" / "tools" / "twotree"))
    if not os.path.exists(path):
        pytest.skip("twotree CLI not built")
    return path


@pytest.mark.parametrize(
    "args, code",
    [
        (["count", "--family", "book", "--n", "12"], 0),
        (["count", "--family", "path-square", "--n", "9", "--method", "closed-form"], 0),
        (["verify", "bounds", "--trials", "50", "--seed", "1"], 0),
        (["survey", "--n", "6"], 0),
        (["order", "--family", "random", "--n", "8", "--seed", "2"], 0),
        (["enumerate", "--family", "book", "--n", "5", "--out", os.devnull], 0),
        (["verify", "extremal", "--n-max", "9"], 2),
        (["improve", "max", "--family", "path-square", "--n", "7", "--out", os.devnull], 2),
    ],
)
def test_cli_json_reports_validate(args, code):
    jsonschema = pytest.importorskip("jsonschema")
    run = subprocess.run([cli(), "--json", *args], capture_output=True, text=True)
    assert run.returncode == code
    report = json.loads(run.stdout)
    jsonschema.validate(report, SCHEMA)
    assert report["exit_code"] == code


def test_cli_mismatch_report(tmp_path):
    jsonschema = pytest.importorskip("jsonschema")
    n, edges = twotree.generate("path-square", 6)
    graph = tmp_path / "g.edges"
    graph.write_text(f"{n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in sorted(edges)))
    run = subprocess.run([cli(), "--json", "count", "--in", str(graph), "--family", "book"],
                         capture_output=True, text=True)
    assert run.returncode == 4
    report = json.loads(run.stdout)
    jsonschema.validate(report, SCHEMA)
    assert report["outputs"]["kirchhoff"] == "55"
    assert not all(c["passed"] for c in report["checks"])
