import random
from itertools import combinations

import pytest

from rsize.arrowing import (
    ArrowVerdict,
    BUDGET_ENV_VAR,
    EdgeColoring,
    UndecidedError,
    arrows_hyper,
    arrows_pair,
    is_good_coloring,
    lower_bound_coloring,
    lower_bound_coloring_hyper,
    matching_numbers,
    min_size_ramsey_bruteforce,
    verify_graph_ramsey,
    verify_hyper_ramsey,
)
from rsize.graphs import (
    Graph,
    Hypergraph,
    complete,
    complete_r,
    disjoint_union,
    hyper_matching,
    max_matching,
)
from rsize.values import g, iter_partitions


def random_graph(rng: random.Random, n: int, m: int) -> Graph:
    return Graph(n, rng.sample(list(combinations(range(n), 2)), m))


# ---------------------------------------------------------------- colorings

def test_edge_coloring_splits_edges():
    host = complete(3)
    col = EdgeColoring(host, 0b101)
    assert col.blue_edges() == [(0, 1), (1, 2)]
    assert col.red_edges() == [(0, 2)]
    with pytest.raises(ValueError):
        EdgeColoring(host, 1 << 3)
    with pytest.raises(ValueError):
        EdgeColoring(host, -1)


def test_is_good_coloring():
    host = complete(4)
    # blue star at vertex 0 leaves the red triangle {1,2,3}
    star = sum(1 << i for i, (u, v) in enumerate(host.edges()) if u == 0)
    assert not is_good_coloring(EdgeColoring(host, star), 3, 2)
    # blue triangle {0,1,2}: red is a star at 3, matching of blue is 1
    tri = sum(1 << i for i, (u, v) in enumerate(host.edges()) if u < 3 and v < 3)
    assert is_good_coloring(EdgeColoring(host, tri), 3, 2)
    assert not is_good_coloring(EdgeColoring(host, tri), 3, 1)


def test_verdict_reverifies_counterexample():
    host = complete(4)
    star = sum(1 << i for i, (u, v) in enumerate(host.edges()) if u == 0)
    with pytest.raises(ValueError):
        ArrowVerdict(
            arrows=False,
            counterexample=EdgeColoring(host, star),
            n=3,
            t=2,
            mode="naive",
            nodes=1,
        )
    with pytest.raises(ValueError):
        ArrowVerdict(arrows=True, counterexample=EdgeColoring(host, 0), n=3, t=2, mode="naive", nodes=1)


# ------------------------------------------------------- matching-number DP

def test_matching_numbers_against_solver():
    rng = random.Random(41)
    for _ in range(40):
        nv = rng.randint(2, 8)
        pool = list(combinations(range(nv), 2))
        m = rng.randint(1, min(9, len(pool)))
        edges = rng.sample(pool, m)
        masks = [(1 << u) | (1 << v) for u, v in edges]
        nu = matching_numbers(masks)
        assert nu[(1 << m) - 1] == max_matching(Graph(nv, edges))
        for _ in range(20):
            sub = rng.randrange(1 << m)
            chosen = [edges[i] for i in range(m) if sub >> i & 1]
            assert nu[sub] == max_matching(Graph(nv, chosen)), (edges, sub)


def test_matching_numbers_on_hyperedges():
    h = complete_r(6, 3)
    nu = matching_numbers(h.edge_masks)
    assert nu[(1 << h.edge_count()) - 1] == hyper_matching(h) == 2


# ------------------------------------------------------------ pinned arrows

def test_single_edge_targets_arrow():
    for k in (2, 3, 4, 5):
        assert arrows_pair(complete(k), k, 1).arrows


def test_two_triangles_arrow_for_two_matchings():
    v = arrows_pair(disjoint_union([complete(3), complete(3)]), 3, 2)
    assert v.arrows and v.mode == "naive"


def test_k4_fails_and_counterexample_is_checked():
    v = arrows_pair(complete(4), 3, 2)
    assert not v.arrows
    # naive scans masks in increasing order; the first good coloring of K_4
    # is the blue triangle on {0,1,2}
    assert v.counterexample.blue_edges() == [(0, 1), (0, 2), (1, 2)]
    assert is_good_coloring(v.counterexample, 3, 2)


def test_k5_arrows_triangle_two_matching():
    assert arrows_pair(complete(5), 3, 2).arrows


def test_hyper_pinned_cases():
    assert arrows_hyper(complete_r(6, 3), 3, 2).arrows
    v = arrows_hyper(complete_r(5, 3), 3, 2)
    assert not v.arrows
    assert arrows_hyper(complete_r(4, 3), 4, 1).arrows


def test_hostless_targets_fail_immediately():
    # no n-clique at all: the all-red coloring is already good
    v = arrows_pair(Graph(3, [(0, 1)]), 3, 1)
    assert not v.arrows and v.counterexample.blue_edges() == []
    v = arrows_hyper(Hypergraph(4, 3, [(0, 1, 2)]), 4, 1)
    assert not v.arrows


# ------------------------------------------------------- search equivalence

def test_reduced_equals_naive_on_random_hosts():
    rng = random.Random(43)
    for _ in range(60):
        nv = rng.randint(2, 10)
        pool = list(combinations(range(nv), 2))
        m = rng.randint(1, min(14, len(pool)))
        host = Graph(nv, rng.sample(pool, m))
        for n in (2, 3, 4, 5):
            for t in (1, 2, 3):
                a = arrows_pair(host, n, t, search="naive")
                b = arrows_pair(host, n, t, search="reduced")
                assert a.arrows == b.arrows, (host, n, t)


def test_reduced_equals_naive_on_random_hypergraphs():
    rng = random.Random(47)
    for _ in range(30):
        nv = rng.randint(3, 8)
        pool = list(combinations(range(nv), 3))
        m = rng.randint(1, min(12, len(pool)))
        host = Hypergraph(nv, 3, rng.sample(pool, m))
        for n in (3, 4):
            for t in (1, 2):
                a = arrows_hyper(host, n, t, search="naive")
                b = arrows_hyper(host, n, t, search="reduced")
                assert a.arrows == b.arrows, (host, n, t)


def test_jobs_do_not_change_the_result():
    for jobs in (2, 3):
        base = arrows_pair(complete(7), 3, 3, search="reduced", jobs=1)
        par = arrows_pair(complete(7), 3, 3, search="reduced", jobs=jobs)
        assert (base.arrows, base.nodes) == (par.arrows, par.nodes)
    base = arrows_pair(complete(4), 3, 2, search="reduced", jobs=1)
    par = arrows_pair(complete(4), 3, 2, search="reduced", jobs=2)
    assert base.counterexample.blue == par.counterexample.blue
    assert base.nodes == par.nodes


# ----------------------------------------------------- clique constructions

def test_disjoint_clique_constructions_arrow():
    # unions of K_{n+2s-2} over any parts summing to >= t always arrow
    for n in (3, 4):
        for t in (1, 2, 3):
            hosts = []
            for total in range(t, 9):
                for parts in iter_partitions(total, total):
                    edges = sum((n + 2 * s - 2) * (n + 2 * s - 3) // 2 for s in parts)
                    if edges <= 24:
                        hosts.append(parts)
            for parts in hosts:
                host = disjoint_union([complete(n + 2 * s - 2) for s in parts])
                assert arrows_pair(host, n, t).arrows, (n, t, parts)


# --------------------------------------------------------------- lower side

def test_lower_bound_coloring_examples():
    col = lower_bound_coloring(3, 2)
    assert col.host.n == 4
    assert col.blue_edges() == [(1, 2), (1, 3), (2, 3)]
    col = lower_bound_coloring(4, 1)
    assert col.host.n == 3 and col.blue_edges() == []
    col = lower_bound_coloring(2, 3)
    assert col.host.n == 5 and col.red_edges() == []
    assert is_good_coloring(col, 2, 3)


def test_lower_bound_coloring_grid_is_good():
    for n in range(2, 8):
        for t in range(1, 5):
            assert is_good_coloring(lower_bound_coloring(n, t), n, t)


def test_hyper_lower_bound_coloring():
    col = lower_bound_coloring_hyper(3, 3, 2)
    assert col.host.n == 5 and col.red_edges() == []
    assert is_good_coloring(col, 3, 2)
    col = lower_bound_coloring_hyper(4, 3, 2)
    assert col.host.n == 6
    assert is_good_coloring(col, 4, 2)
    # degenerate: single-edge target leaves a host below the uniformity
    col = lower_bound_coloring_hyper(3, 3, 1)
    assert col.host.n == 2 and col.host.edge_count() == 0


# -------------------------------------------------------------- end-to-end

def test_verify_graph_ramsey_small():
    for n, t in [(2, 1), (2, 2), (2, 3), (3, 2), (4, 1), (4, 2), (5, 1), (3, 3)]:
        assert verify_graph_ramsey(n, t), (n, t)


def test_verify_hyper_ramsey_naive_case():
    assert verify_hyper_ramsey(3, 3, 2)


def test_verify_hyper_ramsey_single_edge_targets():
    for r in (2, 3, 4):
        assert verify_hyper_ramsey(r, r, 1)


@pytest.mark.slow
def test_verify_hyper_ramsey_reduced_case():
    assert verify_hyper_ramsey(4, 3, 2)


def test_min_size_bruteforce_matches_formula():
    assert min_size_ramsey_bruteforce(2, 2, 4) == 2 == g(2, 2).value
    assert min_size_ramsey_bruteforce(3, 1, 4) == 3 == g(3, 1).value
    assert min_size_ramsey_bruteforce(3, 2, 6) == 6 == g(3, 2).value
    assert min_size_ramsey_bruteforce(3, 3, 4) is None  # g(3,3) = 9 > 4


def test_min_size_bruteforce_rejects_large_budget():
    with pytest.raises(ValueError):
        min_size_ramsey_bruteforce(3, 1, 9)


# ------------------------------------------------------------------ budgets

def test_over_budget_is_undecided_not_guessed():
    with pytest.raises(UndecidedError):
        arrows_pair(complete(9), 3, 1)  # 36 edges > default budget
    with pytest.raises(UndecidedError):
        arrows_pair(complete(7), 3, 3, search="naive")  # 21 > naive cap


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "40")
    assert arrows_pair(complete(9), 3, 1, search="reduced").arrows
    monkeypatch.setenv(BUDGET_ENV_VAR, "ten")
    with pytest.raises(ValueError):
        arrows_pair(complete(9), 3, 1, search="reduced")


def test_argument_validation():
    with pytest.raises(ValueError):
        arrows_pair(complete(3), 1, 1)
    with pytest.raises(ValueError):
        arrows_pair(complete(3), 3, 0)
    with pytest.raises(ValueError):
        arrows_pair(complete(3), 3, 1, jobs=0)
    with pytest.raises(ValueError):
        arrows_pair(complete(3), 3, 1, search="fast")
    with pytest.raises(TypeError):
        arrows_pair(complete_r(4, 3), 3, 1)
    with pytest.raises(ValueError):
        arrows_hyper(complete_r(4, 3), 2, 1)  # n below uniformity
    with pytest.raises(TypeError):
        arrows_hyper(complete(4), 3, 1)
