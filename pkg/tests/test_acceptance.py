"""Acceptance gate: eleven criteria, one pass/fail line each.

Every test prints exactly one ``criterion NN ...: PASS/FAIL`` line and then
asserts it, so `pytest -v` reads as a checklist.  The heavy corpora (the
exhaustive small-graph sweeps and the random batches) are built once per
module and shared by the criteria that re-examine the same runs.
"""

import random
from fractions import Fraction
from math import log2

import pytest

from helpers import (
    connected_bipartite_edge_sets,
    connected_graph_edge_sets,
    graph_from_edges,
)
from qgraph.baselines import (
    brute_force_max_matching,
    classical_bfs_layers,
    decompose_symmetric_difference,
    edmonds_karp,
)
from qgraph.bench import (
    SweepSpec,
    parse_density,
    render_csv,
    run_once,
    run_sweep,
)
from qgraph.bipartite import max_bipartite_matching
from qgraph.blossom import max_general_matching
from qgraph.flow import max_flow_integer, residual_flow_bound
from qgraph.generators import (
    gen_gnm_digraph,
    gen_majority_hard_instance,
    gen_random_bipartite,
    gen_random_graph,
    gen_random_network,
)
from qgraph.graphs import Model
from qgraph.grover import (
    Amplification,
    OracleConfig,
    ceil_sqrt,
    grover_find_all,
    make_run_ledger,
)
from qgraph.layers import assign_layers

# labeled connected bipartite graphs on n vertices, and connected graphs
EXPECTED_BIPARTITE_COUNTS = {2: 1, 3: 3, 4: 19, 5: 195, 6: 3031, 7: 67263}
EXPECTED_CONNECTED_COUNTS = {2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}

RANDOM_BATCH = 1000


def _criterion(num: int, label: str, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num:02d} {label}: {status} ({detail})")
    assert ok, f"criterion {num:02d} {label}: FAIL ({detail})"


# -- shared corpora --------------------------------------------------------


@pytest.fixture(scope="module")
def bipartite_runs():
    """One pass over every criterion-1 instance, shared by criteria 1/4/5.

    Collects size mismatches against brute force, iteration-budget
    violations, and shortfalls in the disjoint-augmenting-path count that
    every intermediate matching must admit toward the final one.
    """
    out = {
        "by_n": {},
        "random": 0,
        "size_mismatches": [],
        "iteration_violations": [],
        "augment_gap_violations": [],
        "augment_checks": 0,
    }

    def check(g, tag, seed):
        matching, report = max_bipartite_matching(
            g, OracleConfig(seed=seed), keep_matchings=True
        )
        oracle = brute_force_max_matching(g).size()
        if matching.size() != oracle:
            out["size_mismatches"].append(tag)
        if report.iterations > report.iteration_bound():
            out["iteration_violations"].append(tag)
        s2 = matching.size()
        for inter in report.intermediate_matchings:
            out["augment_checks"] += 1
            diff = decompose_symmetric_difference(inter, matching)
            if diff.augmenting_for_first < s2 - inter.size():
                out["augment_gap_violations"].append(tag)

    for n in range(2, 8):
        count = 0
        for edges in connected_bipartite_edge_sets(n):
            check(graph_from_edges(n, edges), f"exh-n{n}-{count}", 0)
            count += 1
        out["by_n"][n] = count
    rng = random.Random(20260819)
    for i in range(RANDOM_BATCH):
        n1 = rng.randint(1, 7)
        n2 = rng.randint(1, 7)
        p = rng.uniform(0.1, 0.9)
        check(gen_random_bipartite(n1, n2, p, seed=i), f"rand-{i}", i)
        out["random"] += 1
    return out


@pytest.fixture(scope="module")
def flow_runs():
    """Criterion-3 instances, shared by criteria 3 and 6."""
    out = {
        "total": 0,
        "value_mismatches": [],
        "formula_mismatches": [],
        "phase_checks": 0,
        "residual_violations": [],
    }

    def check(net, tag, seed, expected=None):
        flow, report = max_flow_integer(net, OracleConfig(seed=seed))
        flow.validate(net)
        oracle = edmonds_karp(net).value
        out["total"] += 1
        if flow.value != oracle:
            out["value_mismatches"].append(tag)
        if expected is not None and flow.value != expected:
            out["formula_mismatches"].append(tag)
        for phase in report.phases:
            out["phase_checks"] += 1
            remaining = oracle - phase.flow_before
            bound = residual_flow_bound(net.n, net.m, net.U, phase.depth)
            if remaining > bound:
                out["residual_violations"].append(f"{tag}@d{phase.depth}")

    rng = random.Random(4242)
    for i in range(500):
        n = rng.randint(3, 12)
        max_m = n * (n - 1) // 2
        m = rng.randint(min(n - 1, max_m), max_m)
        u_cap = rng.randint(1, 4)
        check(gen_random_network(n, m, u_cap, seed=i), f"rand-{i}", i)
    for p in range(1, 11):
        for extra in (0, 1):
            net = gen_majority_hard_instance(p, extra, seed=p)
            check(net, f"majority-p{p}-x{extra}", p, expected=p * p // 2 + extra)
    return out


# -- criteria ---------------------------------------------------------------


def test_criterion_01_bipartite_sizes_match_brute_force(bipartite_runs):
    assert bipartite_runs["by_n"] == EXPECTED_BIPARTITE_COUNTS
    exhaustive = sum(bipartite_runs["by_n"].values())
    _criterion(
        1,
        "bipartite matching equals brute force",
        not bipartite_runs["size_mismatches"],
        f"{exhaustive} exhaustive + {bipartite_runs['random']} random instances, "
        f"{len(bipartite_runs['size_mismatches'])} mismatches",
    )


def test_criterion_02_general_sizes_match_brute_force():
    by_n = {}
    mismatches = []
    for n in range(2, 7):
        count = 0
        for edges in connected_graph_edge_sets(n):
            g = graph_from_edges(n, edges)
            matching, _ = max_general_matching(g, OracleConfig(seed=0))
            if matching.size() != brute_force_max_matching(g).size():
                mismatches.append(f"exh-n{n}-{count}")
            count += 1
        by_n[n] = count
    assert by_n == EXPECTED_CONNECTED_COUNTS
    rng = random.Random(977)
    randoms = 0
    for i in range(RANDOM_BATCH):
        n = rng.randint(2, 14)
        p = rng.uniform(0.15, 0.9)
        g = gen_random_graph(n, p, seed=i)
        matching, _ = max_general_matching(g, OracleConfig(seed=i))
        if matching.size() != brute_force_max_matching(g).size():
            mismatches.append(f"rand-{i}")
        randoms += 1
    exhaustive = sum(by_n.values())
    _criterion(
        2,
        "general matching equals brute force",
        not mismatches,
        f"{exhaustive} exhaustive + {randoms} random instances, "
        f"{len(mismatches)} mismatches",
    )


def test_criterion_03_flow_values_match_reference_and_formula(flow_runs):
    bad = flow_runs["value_mismatches"] + flow_runs["formula_mismatches"]
    _criterion(
        3,
        "integer max flow equals the reference solver",
        not bad,
        f"{flow_runs['total']} networks (500 random + 20 hard), "
        f"{len(flow_runs['value_mismatches'])} value and "
        f"{len(flow_runs['formula_mismatches'])} formula mismatches",
    )


def test_criterion_04_bipartite_iteration_budget_holds(bipartite_runs):
    violations = list(bipartite_runs["iteration_violations"])
    checked = sum(bipartite_runs["by_n"].values()) + bipartite_runs["random"]
    for n in (100, 400, 900):
        for seed in (0, 1):
            g = gen_random_bipartite(n // 2, n // 2, 0.5, seed=seed)
            _, report = max_bipartite_matching(g, OracleConfig(seed=seed))
            checked += 1
            if report.iterations > report.iteration_bound():
                violations.append(f"dense-n{n}-s{seed}")
    _criterion(
        4,
        "bipartite iterations within ceil(2 sqrt n) + 1",
        not violations,
        f"{checked} runs including dense n in (100, 400, 900), "
        f"{len(violations)} violations",
    )


def test_criterion_05_intermediate_matchings_admit_disjoint_augmenting_paths(
    bipartite_runs,
):
    _criterion(
        5,
        "symmetric difference yields enough disjoint augmenting paths",
        not bipartite_runs["augment_gap_violations"],
        f"{bipartite_runs['augment_checks']} intermediate matchings checked, "
        f"{len(bipartite_runs['augment_gap_violations'])} shortfalls",
    )


def test_criterion_06_residual_gap_within_depth_bound(flow_runs):
    _criterion(
        6,
        "residual flow bounded by the layering-depth formula",
        not flow_runs["residual_violations"],
        f"{flow_runs['phase_checks']} phases checked, "
        f"{len(flow_runs['residual_violations'])} violations",
    )


def test_criterion_07_layer_assignment_equals_classical_bfs():
    mismatches = 0
    total = 0
    rng = random.Random(11)
    for model in (Model.LIST, Model.ADJACENCY):
        for i in range(200):
            n = rng.randint(2, 200)
            max_m = n * (n - 1)
            m = rng.randint(min(n - 1, max_m), min(max_m, 3 * n))
            g = gen_gnm_digraph(n, m, seed=i, model=model)
            config = OracleConfig(seed=i)
            la = assign_layers(g, 0, config, make_run_ledger(config, g.n))
            if la.layer != classical_bfs_layers(g, 0):
                mismatches += 1
            total += 1
    _criterion(
        7,
        "layer assignment equals classical BFS",
        mismatches == 0,
        f"{total} digraphs across both models, {mismatches} mismatches",
    )


def test_criterion_08_dense_bipartite_scaling_slope_near_two():
    spec = SweepSpec(
        algorithm="bipartite",
        model=Model.ADJACENCY,
        sizes=(64, 128, 256, 512, 1024),
        density=parse_density("p:0.25"),
        seeds=3,
        amplification=Amplification.LOG_N,
        family="half",
    )
    result = run_sweep(spec)
    ratios = [float(c) / (n * n * log2(n)) for n, c in result.medians]
    drift = max(
        ratios[j] / ratios[i]
        for i in range(len(ratios))
        for j in range(i + 1, len(ratios))
    )
    slope_ok = 1.65 <= result.fit.slope <= 2.35
    _criterion(
        8,
        "dense bipartite charge scales like n^2 with bounded ratio drift",
        slope_ok and drift <= 2.0,
        f"slope {result.fit.slope:.4f} in [1.65, 2.35], "
        f"charge/(n^2 log2 n) upward drift {drift:.3f}x <= 2x",
    )


def test_criterion_09_sparse_layering_scaling_slope_near_one():
    spec = SweepSpec(
        algorithm="layers",
        model=Model.LIST,
        sizes=(128, 256, 512, 1024, 2048, 4096),
        density=parse_density("m:4n"),
        seeds=2,
    )
    result = run_sweep(spec)
    _criterion(
        9,
        "sparse layering charge scales like sqrt(n m) = n",
        0.75 <= result.fit.slope <= 1.35,
        f"slope {result.fit.slope:.4f} in [0.75, 1.35] over n = 128..4096",
    )


def test_criterion_10_search_charges_exact_and_results_match_scan():
    trials_by_domain = {16: 60000, 64: 25000, 256: 10000, 1024: 5000}
    config = OracleConfig(seed=0)
    bad_charges = 0
    bad_results = 0
    total = 0
    for domain, trials in trials_by_domain.items():
        ks = (0, 1, domain // 4, domain)
        per_k = trials // len(ks)
        rng = random.Random(domain)
        for k in ks:
            ledger = make_run_ledger(config, domain)
            expected = ceil_sqrt(k * domain) + ceil_sqrt(domain)
            before = ledger.charged_queries
            for _ in range(per_k):
                marked = set(rng.sample(range(domain), k))
                found = grover_find_all(domain, marked.__contains__, config, ledger)
                after = ledger.charged_queries
                if after - before != expected:
                    bad_charges += 1
                before = after
                if sorted(found) != sorted(marked):
                    bad_results += 1
                total += 1
    _criterion(
        10,
        "search charge is exactly ceil(sqrt(k l)) + ceil(sqrt(l))",
        bad_charges == 0 and bad_results == 0 and total == 100000,
        f"{total} trials over l in (16, 64, 256, 1024), "
        f"{bad_charges} charge and {bad_results} result deviations",
    )


def _determinism_run_rows() -> str:
    records = []
    for i in range(25):
        g = gen_random_bipartite(3 + i % 5, 3 + (i * 2) % 5, 0.5, seed=i)
        records.append(
            run_once("bipartite", g, OracleConfig(seed=i), verify=True, seed=i, sweep_id="redo")
        )
    for i in range(15):
        g = gen_random_graph(4 + i % 8, 0.45, seed=i)
        records.append(
            run_once("general", g, OracleConfig(seed=i), verify=True, seed=i, sweep_id="redo")
        )
    for i in range(15):
        n = 6 + i % 7
        net = gen_random_network(n, n + 3 + i % 4, 1 + i % 4, seed=i)
        records.append(
            run_once("flow", net, OracleConfig(seed=i), verify=True, seed=i, sweep_id="redo")
        )
    for i in range(15):
        n = 6 + i % 10
        g = gen_gnm_digraph(n, 2 * n + i % 5, seed=i)
        records.append(
            run_once("layers", g, OracleConfig(seed=i), verify=True, seed=i, sweep_id="redo")
        )
    return render_csv(records)


def _determinism_sweep_rows(spec: SweepSpec) -> str:
    result = run_sweep(spec)
    fit_line = f"{result.fit.slope!r},{result.fit.intercept!r},{result.fit.residual!r}"
    return render_csv(result.records) + fit_line


def _determinism_search_rows() -> str:
    config = OracleConfig(seed=0)
    rows = []
    for domain in (16, 64, 256):
        rng = random.Random(domain)
        ledger = make_run_ledger(config, domain)
        for k in (0, 1, domain // 4):
            marked = set(rng.sample(range(domain), k))
            found = grover_find_all(domain, marked.__contains__, config, ledger)
            rows.append(
                f"{domain};{k};{ledger.charged_queries};" + ",".join(map(str, found))
            )
    return "\n".join(rows)


def test_criterion_11_identical_seeds_reproduce_byte_identical_reports():
    half_spec = SweepSpec(
        algorithm="bipartite",
        model=Model.ADJACENCY,
        sizes=(8, 12, 16),
        density=parse_density("p:0.25"),
        seeds=2,
        amplification=Amplification.LOG_N,
        family="half",
    )
    layers_spec = SweepSpec(
        algorithm="layers",
        model=Model.LIST,
        sizes=(16, 32, 64),
        density=parse_density("m:4n"),
        seeds=2,
    )
    sections = [
        ("single runs", _determinism_run_rows),
        ("dense bipartite sweep", lambda: _determinism_sweep_rows(half_spec)),
        ("layering sweep", lambda: _determinism_sweep_rows(layers_spec)),
        ("search ledger", _determinism_search_rows),
    ]
    unstable = [name for name, build in sections if build() != build()]
    _criterion(
        11,
        "identical seeds reproduce byte-identical reports",
        not unstable,
        f"{len(sections)} report sections rendered twice, "
        f"unstable: {unstable or 'none'}",
    )
