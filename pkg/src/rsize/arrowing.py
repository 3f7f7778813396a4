"""Decide whether a host forces a red n-clique or a blue t-edge matching.

Convention, fixed across the package: red carries the clique side, blue
carries the matching side.  A host F "arrows" (n, t) when every red/blue
coloring of its edges contains a red complete subgraph on n vertices or t
pairwise disjoint blue edges.  Equivalently F fails to arrow exactly when
some blue set B has matching number at most t-1 while meeting the edge
set of every n-clique of F; the searches below look for such a B.

Two search modes are provided and cross-checked in the test suite:

* naive -- table the matching number of every one of the 2^m edge subsets
  (a bytearray DP), then scan all subsets.  Independent of the pruned
  search; memory-bound, so capped at modest edge counts.
* reduced -- DFS over edges deciding blue/red with three prunes: a blue
  decision that pushes the matching number to t is abandoned; a red
  decision completing an all-red clique is abandoned; and the branch is
  reported as a counterexample as soon as every clique has a blue edge
  (the all-red completion of the current prefix is then a good coloring).

The reduced DFS always splits at a fixed depth into prefix subtrees that
are processed in discovery order, so the verdict, the counterexample, and
the explored-node count are identical whatever `jobs` is.  Node counts
mean: reduced, one per blue/red branch entered; naive, subsets scanned.

Hosts larger than the search budget raise UndecidedError rather than
guessing; the default reduced budget can be lifted through the
RSIZE_BUDGET_EDGES environment variable.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graphs import (
    Graph,
    Hypergraph,
    complete,
    complete_r,
    has_clique,
    has_red_complete_r,
    hyper_matching,
    max_matching,
)

NAIVE_MAX_EDGES = {"graph": 20, "hyper": 24}
AUTO_NAIVE_MAX_EDGES = {"graph": 16, "hyper": 20}
REDUCED_MAX_EDGES = {"graph": 28, "hyper": 36}
BUDGET_ENV_VAR = "RSIZE_BUDGET_EDGES"

_SPLIT_DEPTH = 6


class UndecidedError(RuntimeError):
    """The host exceeds the search budget: no verdict is offered."""


@dataclass(frozen=True)
class EdgeColoring:
    """A red/blue coloring of a host's edges.

    `blue` is a bitmask over the host's sorted edge list; every edge not
    in it is red.
    """

    host: Graph | Hypergraph
    blue: int

    def __post_init__(self) -> None:
        m = self.host.edge_count()
        if not 0 <= self.blue < 1 << m:
            raise ValueError(f"blue mask {self.blue:#x} out of range for {m} edges")

    def _edges(self) -> list[tuple[int, ...]]:
        if isinstance(self.host, Graph):
            return self.host.edges()
        return self.host.edge_tuples()

    def blue_edges(self) -> list[tuple[int, ...]]:
        return [e for i, e in enumerate(self._edges()) if self.blue >> i & 1]

    def red_edges(self) -> list[tuple[int, ...]]:
        return [e for i, e in enumerate(self._edges()) if not self.blue >> i & 1]


def is_good_coloring(coloring: EdgeColoring, n: int, t: int) -> bool:
    """No red n-clique and no t disjoint blue edges, checked directly.

    Deliberately built on the standalone clique/matching routines rather
    than the search internals, so search results can be re-verified by an
    independent code path.
    """
    host = coloring.host
    if isinstance(host, Graph):
        red = Graph(host.n, coloring.red_edges())
        if has_clique(red, n):
            return False
        blue = Graph(host.n, coloring.blue_edges())
        return max_matching(blue) <= t - 1
    if has_red_complete_r(host, coloring.red_edges(), n):
        return False
    blue_part = Hypergraph(host.n, host.r, coloring.blue_edges())
    return hyper_matching(blue_part) <= t - 1


@dataclass(frozen=True)
class ArrowVerdict:
    """Outcome of an arrowing search, counterexample re-verified on build."""

    arrows: bool
    counterexample: EdgeColoring | None
    n: int
    t: int
    mode: str
    nodes: int

    def __post_init__(self) -> None:
        if self.arrows != (self.counterexample is None):
            raise ValueError("counterexample must be present exactly when arrows is false")
        if self.counterexample is not None and not is_good_coloring(
            self.counterexample, self.n, self.t
        ):
            raise ValueError("counterexample failed re-verification")


# ----------------------------------------------------------------- searches


def matching_numbers(edge_masks: Sequence[int]) -> bytearray:
    """Matching number of every subset of an indexed edge list.

    Entry `mask` is the matching number of the subset it selects.  Edges
    are vertex bitmasks, so this serves graphs and hypergraphs alike.
    """
    m = len(edge_masks)
    touch = []
    for em in edge_masks:
        tm = 0
        for j, fm in enumerate(edge_masks):
            if em & fm:
                tm |= 1 << j
        touch.append(tm)
    nu = bytearray(1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        e = low.bit_length() - 1
        # the lowest edge is either unused or used, excluding its overlaps
        skip = nu[mask ^ low]
        take = 1 + nu[mask & ~touch[e]]
        nu[mask] = skip if skip >= take else take
    return nu


def _run_naive(
    edge_masks: Sequence[int], cliques: Sequence[int], t: int
) -> tuple[int | None, int]:
    m = len(edge_masks)
    nu = matching_numbers(edge_masks)
    cap = t - 1
    for mask in range(1 << m):
        if nu[mask] <= cap and all(mask & c for c in cliques):
            return mask, mask + 1
    return None, 1 << m


def _matching_at_least(masks: Sequence[int], forbidden: int, need: int) -> bool:
    """Whether `masks` holds `need` disjoint edges, all avoiding `forbidden`."""
    if need == 0:
        return True
    total = len(masks)

    def go(start: int, used: int, left: int) -> bool:
        if total - start < left:
            return False
        for j in range(start, total):
            em = masks[j]
            if em & used:
                continue
            if left == 1 or go(j + 1, used | em, left - 1):
                return True
        return False

    return go(0, forbidden, need)


class _ReducedSearch:
    """DFS state for the pruned search; see the module docstring."""

    def __init__(self, edge_masks: Sequence[int], cliques: Sequence[int], t: int):
        self.edge_masks = tuple(edge_masks)
        self.m = len(edge_masks)
        self.t = t
        self.cliques = tuple(cliques)
        self.clique_size = [c.bit_count() for c in cliques]
        self.edge_cliques: list[list[int]] = [[] for _ in range(self.m)]
        for ci, cmask in enumerate(cliques):
            while cmask:
                e = (cmask & -cmask).bit_length() - 1
                cmask &= cmask - 1
                self.edge_cliques[e].append(ci)
        self.blue_count = [0] * len(cliques)
        self.red_count = [0] * len(cliques)
        self.killed = 0
        self.nu = 0
        self.nu_stack: list[int] = []
        self.blue_masks: list[int] = []
        self.blue_bits = 0
        self.trail: list[tuple[int, bool]] = []
        self.nodes = 0
        self.split_at: int | None = None
        self.snapshots: list[list[tuple[int, bool]]] = []

    def decide(self, e: int, blue: bool) -> bool:
        """Apply one decision; False (and no state change) if it dooms the branch."""
        if blue:
            em = self.edge_masks[e]
            new_nu = self.nu
            if _matching_at_least(self.blue_masks, em, self.nu):
                new_nu += 1
            if new_nu >= self.t:
                return False
            self.nu_stack.append(self.nu)
            self.nu = new_nu
            self.blue_masks.append(em)
            self.blue_bits |= 1 << e
            for ci in self.edge_cliques[e]:
                self.blue_count[ci] += 1
                if self.blue_count[ci] == 1:
                    self.killed += 1
        else:
            doomed = False
            for ci in self.edge_cliques[e]:
                self.red_count[ci] += 1
                if self.red_count[ci] == self.clique_size[ci]:
                    doomed = True
            if doomed:
                for ci in self.edge_cliques[e]:
                    self.red_count[ci] -= 1
                return False
        self.trail.append((e, blue))
        return True

    def undo(self) -> None:
        e, blue = self.trail.pop()
        if blue:
            self.blue_masks.pop()
            self.nu = self.nu_stack.pop()
            self.blue_bits ^= 1 << e
            for ci in self.edge_cliques[e]:
                self.blue_count[ci] -= 1
                if self.blue_count[ci] == 0:
                    self.killed -= 1
        else:
            for ci in self.edge_cliques[e]:
                self.red_count[ci] -= 1

    def dfs(self, idx: int) -> int | None:
        if idx == self.split_at:
            self.snapshots.append(list(self.trail))
            return None
        if idx == self.m:
            return None
        for blue in (True, False):
            self.nodes += 1
            if not self.decide(idx, blue):
                continue
            if blue and self.killed == len(self.cliques):
                found = self.blue_bits
                self.undo()
                return found
            found = self.dfs(idx + 1)
            self.undo()
            if found is not None:
                return found
        return None


def _subtree_worker(
    args: tuple[Sequence[int], Sequence[int], int, list[tuple[int, bool]]],
) -> tuple[int | None, int]:
    edge_masks, cliques, t, trail = args
    search = _ReducedSearch(edge_masks, cliques, t)
    for e, blue in trail:
        applied = search.decide(e, blue)
        assert applied, "snapshot replay must succeed"
    found = search.dfs(len(trail))
    return found, search.nodes


def _run_reduced(
    edge_masks: Sequence[int], cliques: Sequence[int], t: int, jobs: int
) -> tuple[int | None, int]:
    if not cliques:
        # the all-red coloring already avoids every clique (there are none)
        return 0, 1
    search = _ReducedSearch(edge_masks, cliques, t)
    if search.m > _SPLIT_DEPTH:
        search.split_at = _SPLIT_DEPTH
    found = search.dfs(0)
    nodes = search.nodes
    if found is not None or search.split_at is None:
        return found, nodes
    tasks = [(search.edge_masks, search.cliques, t, snap) for snap in search.snapshots]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_subtree_worker, tasks))
    else:
        results = []
        for task in tasks:
            outcome = _subtree_worker(task)
            results.append(outcome)
            if outcome[0] is not None:
                break
    for found, sub_nodes in results:
        nodes += sub_nodes
        if found is not None:
            return found, nodes
    return None, nodes


def _search_order(edge_masks: Sequence[int]) -> list[int]:
    # a greedy maximal matching first, so blue prefixes hit the matching
    # bound early and the include prune bites near the root
    used = 0
    first, rest = [], []
    for i, em in enumerate(edge_masks):
        if em & used:
            rest.append(i)
        else:
            used |= em
            first.append(i)
    return first + rest


def _cliques_of_graph(g: Graph, n: int) -> list[int]:
    """Edge-index bitmask of every n-clique of g."""
    index = {e: i for i, e in enumerate(g.edges())}
    adj = g.adj
    out: list[int] = []

    def extend(members: list[int], cand: int, need: int) -> None:
        if need == 0:
            bits = 0
            for u, v in combinations(members, 2):
                bits |= 1 << index[(u, v)]
            out.append(bits)
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            extend(members + [v], cand & adj[v], need - 1)

    extend([], (1 << g.n) - 1 if g.n else 0, n)
    return out


def _cliques_of_hypergraph(h: Hypergraph, n: int) -> list[int]:
    """Edge-index bitmask of every complete n-window of h."""
    index = {em: i for i, em in enumerate(h.edge_masks)}
    out = []
    for window in combinations(range(h.n), n):
        bits = 0
        for sub in combinations(window, h.r):
            mask = 0
            for v in sub:
                mask |= 1 << v
            pos = index.get(mask)
            if pos is None:
                bits = -1
                break
            bits |= 1 << pos
        if bits >= 0:
            out.append(bits)
    return out


def _reduced_budget(kind: str) -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return REDUCED_MAX_EDGES[kind]
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None


def _pick_mode(search: str, m: int, kind: str) -> str:
    if search not in ("auto", "naive", "reduced"):
        raise ValueError(f"search must be auto, naive, or reduced, got {search!r}")
    if search == "naive":
        if m > NAIVE_MAX_EDGES[kind]:
            raise UndecidedError(
                f"undecided: {m} edges is too large for the naive search "
                f"(cap {NAIVE_MAX_EDGES[kind]})"
            )
        return "naive"
    budget = _reduced_budget(kind)
    if search == "reduced":
        if m > budget:
            raise UndecidedError(
                f"undecided: {m} edges is too large (budget {budget}; "
                f"set {BUDGET_ENV_VAR} to lift)"
            )
        return "reduced"
    if m <= AUTO_NAIVE_MAX_EDGES[kind]:
        return "naive"
    if m <= budget:
        return "reduced"
    raise UndecidedError(
        f"undecided: {m} edges is too large (budget {budget}; "
        f"set {BUDGET_ENV_VAR} to lift)"
    )


def _run_search(
    host: Graph | Hypergraph,
    edge_masks: list[int],
    cliques: list[int],
    n: int,
    t: int,
    mode: str,
    jobs: int,
) -> ArrowVerdict:
    if mode == "naive":
        found, nodes = _run_naive(edge_masks, cliques, t)
    else:
        order = _search_order(edge_masks)
        position = {orig: i for i, orig in enumerate(order)}
        ordered = [edge_masks[orig] for orig in order]
        remapped = []
        for cmask in cliques:
            bits = 0
            while cmask:
                e = (cmask & -cmask).bit_length() - 1
                cmask &= cmask - 1
                bits |= 1 << position[e]
            remapped.append(bits)
        found, nodes = _run_reduced(ordered, remapped, t, jobs)
        if found is not None:
            back = 0
            for i in range(len(ordered)):
                if found >> i & 1:
                    back |= 1 << order[i]
            found = back
    counterexample = None if found is None else EdgeColoring(host, found)
    return ArrowVerdict(
        arrows=found is None,
        counterexample=counterexample,
        n=n,
        t=t,
        mode=mode,
        nodes=nodes,
    )


# ------------------------------------------------------------- entry points


def arrows_pair(
    F: Graph, n: int, t: int, *, search: str = "auto", jobs: int = 1
) -> ArrowVerdict:
    """Does every red/blue coloring of F have a red K_n or t disjoint blue edges?"""
    if not isinstance(F, Graph):
        raise TypeError("arrows_pair expects a Graph host")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    if jobs < 1:
        raise ValueError(f"need jobs >= 1, got {jobs}")
    mode = _pick_mode(search, F.edge_count(), "graph")
    edge_masks = [(1 << u) | (1 << v) for u, v in F.edges()]
    cliques = _cliques_of_graph(F, n)
    return _run_search(F, edge_masks, cliques, n, t, mode, jobs)


def arrows_hyper(
    F: Hypergraph, n: int, t: int, *, search: str = "auto", jobs: int = 1
) -> ArrowVerdict:
    """Hypergraph analogue of arrows_pair: red K_n^r versus blue t disjoint edges."""
    if not isinstance(F, Hypergraph):
        raise TypeError("arrows_hyper expects a Hypergraph host")
    if n < F.r:
        raise ValueError(f"need n >= r = {F.r}, got n={n}")
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    if jobs < 1:
        raise ValueError(f"need jobs >= 1, got {jobs}")
    mode = _pick_mode(search, F.edge_count(), "hyper")
    cliques = _cliques_of_hypergraph(F, n)
    return _run_search(F, list(F.edge_masks), cliques, n, t, mode, jobs)


# ------------------------------------------------- certificates and wrappers


def lower_bound_coloring(n: int, t: int) -> EdgeColoring:
    """A good coloring of the complete graph one vertex below the threshold.

    On n+2t-3 vertices, the first n-2 form A and the last 2t-1 form B;
    edges inside B are blue, all edges meeting A red.  A red clique can
    use at most one vertex of B, so tops out at n-1 vertices; blue lives
    on 2t-1 vertices, so its matching number is at most t-1.  Both facts
    are re-checked on construction.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    host = complete(n + 2 * t - 3)
    cut = n - 2
    blue = 0
    for i, (u, v) in enumerate(host.edges()):
        if u >= cut and v >= cut:
            blue |= 1 << i
    coloring = EdgeColoring(host, blue)
    assert is_good_coloring(coloring, n, t)
    return coloring


def lower_bound_coloring_hyper(n: int, r: int, t: int) -> EdgeColoring:
    """Hypergraph analogue on n+(t-1)r-1 vertices: |A| = n-r, |B| = tr-1."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if n < r:
        raise ValueError(f"need n >= r, got n={n}")
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    host = complete_r(n + (t - 1) * r - 1, r)
    cut = n - r
    blue = 0
    for i, edge in enumerate(host.edge_tuples()):
        if edge[0] >= cut:
            blue |= 1 << i
    coloring = EdgeColoring(host, blue)
    assert is_good_coloring(coloring, n, t)
    return coloring


def verify_graph_ramsey(
    n: int, t: int, *, search: str = "auto", jobs: int = 1
) -> bool:
    """Check R(K_n, tK_2) = n+2t-2 from both sides.

    Upper: the complete graph on n+2t-2 vertices arrows (searched).
    Lower: the explicit coloring of the complete graph on n+2t-3 vertices
    is re-verified as good (checked, never searched).
    """
    upper = arrows_pair(complete(n + 2 * t - 2), n, t, search=search, jobs=jobs)
    lower = is_good_coloring(lower_bound_coloring(n, t), n, t)
    return upper.arrows and lower


def verify_hyper_ramsey(
    n: int, r: int, t: int, *, search: str = "auto", jobs: int = 1
) -> bool:
    """Check R(K_n^r, tK_r^r) = n+(t-1)r from both sides."""
    upper = arrows_hyper(complete_r(n + (t - 1) * r, r), n, t, search=search, jobs=jobs)
    lower = is_good_coloring(lower_bound_coloring_hyper(n, r, t), n, t)
    return upper.arrows and lower


def min_size_ramsey_bruteforce(
    n: int, t: int, m_max: int, *, max_vertices: int | None = None
) -> int | None:
    """Least edge count m <= m_max whose graphs include one that arrows (n, t).

    Exact because the per-edge-count enumeration is complete up to
    isomorphism and arrowing ignores isolated vertices.  None means every
    graph with at most m_max edges fails, i.e. the answer is > m_max.
    """
    from .graphs import enumerate_graphs

    if m_max < 1 or m_max > 8:
        raise ValueError(f"need 1 <= m_max <= 8, got {m_max}")
    for m in range(1, m_max + 1):
        for g in enumerate_graphs(m, max_vertices=max_vertices):
            if arrows_pair(g, n, t).arrows:
                return m
    return None
