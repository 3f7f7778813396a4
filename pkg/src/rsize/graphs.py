"""Small-graph and small-hypergraph substrate with exact solvers.

Graphs live on at most 64 vertices as per-vertex adjacency bitmasks,
hypergraphs on at most 32 vertices as per-edge vertex bitmasks.  All
solvers here (matching, clique, coloring, cover) are exact branch-and-bound
searches; no heuristic ever stands in for an answer.  Isomorphism-free
enumeration uses a canonical labeling computed per connected component by
individualization and refinement.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_GRAPH_VERTICES = 64
MAX_HYPER_VERTICES = 32
ENUMERATION_MAX_EDGES = 12

__all__ = [
    "MAX_GRAPH_VERTICES",
    "MAX_HYPER_VERTICES",
    "CapacityError",
    "Graph6Error",
    "HypergraphFormatError",
    "Graph",
    "VertexColoring",
    "complete",
    "disjoint_union",
    "max_matching",
    "has_clique",
    "max_independent_set",
    "min_vertex_cover",
    "is_k_colorable",
    "chromatic_number",
    "coloring_from_assignment",
    "canonical_form",
    "enumerate_graphs",
    "to_graph6",
    "from_graph6",
    "Hypergraph",
    "complete_r",
    "hyper_matching",
    "has_red_complete_r",
    "hypergraph_to_text",
    "hypergraph_from_text",
]


class CapacityError(ValueError):
    """Instance exceeds the fixed small-scale caps."""


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class HypergraphFormatError(ValueError):
    """Malformed hypergraph text; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


class Graph:
    """Undirected simple graph on vertices 0..n-1, adjacency as bitmasks."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > MAX_GRAPH_VERTICES:
            raise CapacityError(f"graphs must have 0..{MAX_GRAPH_VERTICES} vertices, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on the given vertices, relabeled in given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = []
        for u, v in combinations(vertices, 2):
            if self.has_edge(u, v):
                edges.append((index[u], index[v]))
        return Graph(len(vertices), edges)

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        dropset = set(drop)
        return self.induced([v for v in range(self.n) if v not in dropset])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complete(k: int) -> Graph:
    return Graph(k, combinations(range(k), 2))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    total = sum(g.n for g in graphs)
    if total > MAX_GRAPH_VERTICES:
        raise CapacityError(f"union would have {total} > {MAX_GRAPH_VERTICES} vertices")
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(total, edges)


# ------------------------------------------------------------ exact solvers


def max_matching(g: Graph) -> int:
    """Matching number, by branching on the lowest non-isolated vertex."""
    adj = g.adj
    memo: dict[int, int] = {}

    def rec(avail: int) -> int:
        # skip vertices with no partner left; they cannot affect the value
        rest = avail
        v = -1
        while rest:
            w = (rest & -rest).bit_length() - 1
            if adj[w] & avail:
                v = w
                break
            rest &= rest - 1
        if v < 0:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        without_v = avail & ~(1 << v)
        best = rec(without_v)
        nb = adj[v] & without_v
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            cand = 1 + rec(without_v & ~(1 << u))
            if cand > best:
                best = cand
        memo[avail] = best
        return best

    return rec((1 << g.n) - 1)


def has_clique(g: Graph, k: int) -> bool:
    """Whether the graph contains a clique on k vertices."""
    if k <= 0:
        return True
    if k == 1:
        return g.n >= 1
    adj = g.adj

    def extend(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if cand.bit_count() + 1 < need:
                return False
            if extend(cand & adj[v], need - 1):
                return True
        return False

    return extend((1 << g.n) - 1, k)


def max_independent_set(g: Graph) -> int:
    """A maximum independent set, returned as a vertex bitmask."""
    adj = g.adj
    memo: dict[int, tuple[int, int]] = {}

    def rec(avail: int) -> tuple[int, int]:
        if avail == 0:
            return 0, 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        v = (avail & -avail).bit_length() - 1
        bit = 1 << v
        if not adj[v] & avail:
            size, mask = rec(avail & ~bit)
            result = size + 1, mask | bit
        else:
            take_size, take_mask = rec(avail & ~bit & ~adj[v])
            skip_size, skip_mask = rec(avail & ~bit)
            if take_size + 1 >= skip_size:
                result = take_size + 1, take_mask | bit
            else:
                result = skip_size, skip_mask
        memo[avail] = result
        return result

    _, mask = rec((1 << g.n) - 1)
    return mask


def min_vertex_cover(g: Graph) -> tuple[int, ...]:
    """A minimum vertex cover, as a sorted vertex tuple."""
    independent = max_independent_set(g)
    return tuple(v for v in range(g.n) if not independent >> v & 1)


# ------------------------------------------------------------------ coloring


@dataclass(frozen=True)
class VertexColoring:
    """A proper coloring: per-vertex colors plus classes as vertex bitmasks.

    Classes are ordered by nonincreasing size (ties by smallest member) and
    color_of refers to positions in that order.
    """

    color_of: tuple[int, ...]
    classes: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return len(self.classes)

    def class_vertices(self, i: int) -> tuple[int, ...]:
        mask = self.classes[i]
        return tuple(v for v in range(len(self.color_of)) if mask >> v & 1)


def coloring_from_assignment(g: Graph, assignment: Sequence[int]) -> VertexColoring:
    """Build a validated VertexColoring from raw per-vertex colors."""
    if len(assignment) != g.n:
        raise ValueError(f"assignment covers {len(assignment)} of {g.n} vertices")
    for u, v in g.edges():
        if assignment[u] == assignment[v]:
            raise ValueError(f"edge ({u}, {v}) is monochromatic in color {assignment[u]}")
    groups: dict[int, int] = defaultdict(int)
    for v, c in enumerate(assignment):
        groups[c] |= 1 << v
    ordered = sorted(groups.values(), key=lambda m: (-m.bit_count(), m & -m))
    relabel = {mask: i for i, mask in enumerate(ordered)}
    color_of = [0] * g.n
    for mask, i in relabel.items():
        for v in range(g.n):
            if mask >> v & 1:
                color_of[v] = i
    return VertexColoring(color_of=tuple(color_of), classes=tuple(ordered))


def _greedy_coloring(g: Graph) -> list[int]:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n
    for v in order:
        used = {colors[u] for u in range(g.n) if g.adj[v] >> u & 1 and colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def is_k_colorable(g: Graph, k: int) -> VertexColoring | None:
    """A proper coloring with at most k colors, or None.

    Backtracking over vertices in nonincreasing degree order, with the
    standard symmetry break: a vertex may open at most one new color.
    """
    if g.n == 0:
        return VertexColoring(color_of=(), classes=())
    if k <= 0:
        return None
    adj = g.adj
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    class_masks = [0] * k
    colors = [-1] * g.n

    def rec(idx: int, used: int) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        bit = 1 << v
        for c in range(min(k, used + 1)):
            if class_masks[c] & adj[v]:
                continue
            class_masks[c] |= bit
            colors[v] = c
            if rec(idx + 1, max(used, c + 1)):
                return True
            class_masks[c] &= ~bit
            colors[v] = -1
        return False

    if not rec(0, 0):
        return None
    return coloring_from_assignment(g, colors)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number: deepen k below a greedy upper bound."""
    if g.n == 0:
        return 0
    upper = max(_greedy_coloring(g)) + 1
    for k in range(1, upper):
        if is_k_colorable(g, k) is not None:
            return k
    return upper


# --------------------------------------------------- canonical form, counting


def _refine(n: int, adj: Sequence[int], colors: tuple[int, ...]) -> tuple[int, ...]:
    """Stable color refinement: split classes by neighbor color multisets."""
    while True:
        signatures = []
        for v in range(n):
            nb = adj[v]
            neigh = []
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                neigh.append(colors[u])
            neigh.sort()
            signatures.append((colors[v], tuple(neigh)))
        ranks = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new = tuple(ranks[sig] for sig in signatures)
        if new == colors:
            return colors
        colors = new


_MAX_STORED_AUTOMORPHISMS = 64


def _canon_connected(g: Graph) -> tuple[tuple[int, int], ...]:
    """Canonical edge list of a connected graph via individualization.

    Branches on the first non-singleton cell after refinement and takes
    the minimum over leaf edge lists.  Two leaves with equal edge lists
    reveal an automorphism; candidates related by an automorphism that
    fixes every vertex individualized so far generate identical subtrees,
    so only one per orbit is explored.  Without that prune the search is
    factorial on vertex-transitive graphs.
    """
    n, adj = g.n, g.adj
    best: tuple[tuple[int, int], ...] | None = None
    best_colors: tuple[int, ...] | None = None
    gens: list[tuple[int, ...]] = []

    def leaf(colors: tuple[int, ...]) -> None:
        # discrete coloring: colors form a bijection onto 0..n-1
        nonlocal best, best_colors
        key = tuple(
            sorted(
                (min(colors[u], colors[v]), max(colors[u], colors[v]))
                for u, v in g.edges()
            )
        )
        if best is None or key < best:
            best, best_colors = key, colors
        elif key == best and len(gens) < _MAX_STORED_AUTOMORPHISMS:
            assert best_colors is not None
            inverse = [0] * n
            for v in range(n):
                inverse[best_colors[v]] = v
            auto = tuple(inverse[colors[v]] for v in range(n))
            if any(auto[v] != v for v in range(n)):
                assert all(adj[auto[u]] >> auto[v] & 1 for u, v in g.edges())
                gens.append(auto)

    def same_orbit(v: int, explored: list[int], fixed: tuple[int, ...]) -> bool:
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for auto in gens:
            if all(auto[u] == u for u in fixed):
                for u in range(n):
                    parent[find(u)] = find(auto[u])
        root = find(v)
        return any(find(u) == root for u in explored)

    def search(colors: tuple[int, ...], fixed: tuple[int, ...]) -> None:
        cells: dict[int, list[int]] = defaultdict(list)
        for v in range(n):
            cells[colors[v]].append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            leaf(colors)
            return
        explored: list[int] = []
        for v in target:
            # gens grows during the loop, so re-derive orbits per candidate
            if explored and same_orbit(v, explored, fixed):
                continue
            explored.append(v)
            split = tuple(c * 2 + (0 if u == v else 1) for u, c in enumerate(colors))
            search(_refine(n, adj, split), fixed + (v,))

    search(_refine(n, adj, (0,) * n), ())
    assert best is not None
    return best


def _components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        frontier = 1 << start
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                nxt |= g.adj[v]
            frontier = nxt & ~comp
        seen |= comp
        comps.append([v for v in range(g.n) if comp >> v & 1])
    return comps


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """A complete isomorphism invariant: canonical (n, edge tuple).

    Each connected component is canonicalized on its own (components stay
    small even when the whole graph does not), then components are sorted
    and concatenated.  Two graphs get equal forms iff they are isomorphic.
    """
    keys = []
    for comp in _components(g):
        sub = g.induced(comp)
        keys.append((sub.n, _canon_connected(sub)))
    keys.sort()
    edges = []
    offset = 0
    for size, comp_edges in keys:
        edges.extend((u + offset, v + offset) for u, v in comp_edges)
        offset += size
    return offset, tuple(sorted(edges))


def enumerate_graphs(m: int, max_vertices: int | None = None) -> Iterator[Graph]:
    """All graphs with exactly m edges and no isolated vertices, up to iso.

    Grows one edge at a time from K_2, deduplicating by canonical form at
    every level; every m-edge graph arises from an (m-1)-edge one by edge
    removal plus isolated-vertex cleanup, so the levels are complete.
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if m > ENUMERATION_MAX_EDGES:
        raise CapacityError(f"enumeration capped at {ENUMERATION_MAX_EDGES} edges, got {m}")
    cap = 2 * m if max_vertices is None else min(max_vertices, 2 * m)
    if m == 0:
        yield Graph(0)
        return
    if cap < 2:
        return
    level = {canonical_form(complete(2))}
    for _ in range(m - 1):
        nxt: set[tuple[int, tuple[tuple[int, int], ...]]] = set()
        for n, edges in sorted(level):
            present = set(edges)
            for u, v in combinations(range(n), 2):
                if (u, v) not in present:
                    nxt.add(canonical_form(Graph(n, edges + ((u, v),))))
            if n + 1 <= cap:
                for u in range(n):
                    nxt.add(canonical_form(Graph(n + 1, edges + ((u, n),))))
            if n + 2 <= cap:
                nxt.add(canonical_form(Graph(n + 2, edges + ((n, n + 1),))))
        level = nxt
    for n, edges in sorted(level):
        yield Graph(n, edges)


# -------------------------------------------------------------------- graph6


def to_graph6(g: Graph) -> str:
    """Encode in standard graph6 (long size form for 63 and 64 vertices)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = chr(126) + chr(63 + (n >> 12 & 63)) + chr(63 + (n >> 6 & 63)) + chr(63 + (n & 63))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return head + "".join(chars)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string; malformed input names the failing byte."""
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    codes = []
    for i, ch in enumerate(text):
        o = ord(ch)
        if o < 63 or o > 126:
            raise Graph6Error(f"byte {o:#x} outside graph6 range", i)
        codes.append(o - 63)
    if codes[0] == 63:  # '~' long size form
        if len(codes) < 4:
            raise Graph6Error("truncated long size form", len(text))
        if codes[1] == 63:
            raise Graph6Error("8-byte size form not supported", 1)
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        if n < 63:
            raise Graph6Error(f"non-canonical long size form for n={n}", 1)
        body_start = 4
    else:
        n = codes[0]
        body_start = 1
    if n > MAX_GRAPH_VERTICES:
        raise CapacityError(f"graph6 declares {n} > {MAX_GRAPH_VERTICES} vertices")
    pairs = n * (n - 1) // 2
    need = (pairs + 5) // 6
    if len(codes) - body_start < need:
        raise Graph6Error(f"body needs {need} bytes, found {len(codes) - body_start}", len(text))
    if len(codes) - body_start > need:
        raise Graph6Error("trailing bytes after graph body", body_start + need)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            value = codes[body_start + idx // 6]
            if value >> (5 - idx % 6) & 1:
                edges.append((u, v))
            idx += 1
    # padding bits must be zero in well-formed graph6
    while idx < need * 6:
        if codes[body_start + idx // 6] >> (5 - idx % 6) & 1:
            raise Graph6Error("nonzero padding bits", body_start + idx // 6)
        idx += 1
    return Graph(n, edges)


# --------------------------------------------------------------- hypergraphs


class Hypergraph:
    """r-uniform hypergraph on vertices 0..n-1; edges as vertex bitmasks."""

    __slots__ = ("n", "r", "edge_masks")

    def __init__(self, n: int, r: int, edges: Iterable[Iterable[int]]):
        if n < 0 or n > MAX_HYPER_VERTICES:
            raise CapacityError(
                f"hypergraphs must have 0..{MAX_HYPER_VERTICES} vertices, got {n}"
            )
        if r < 2:
            raise ValueError(f"uniformity must be at least 2, got r={r}")
        masks = []
        for edge in edges:
            vs = sorted(edge)
            if len(vs) != r or len(set(vs)) != r:
                raise ValueError(f"edge {tuple(edge)} is not a set of {r} vertices")
            if vs[0] < 0 or vs[-1] >= n:
                raise ValueError(f"edge {tuple(vs)} out of range for {n} vertices")
            mask = 0
            for v in vs:
                mask |= 1 << v
            masks.append(mask)
        if len(set(masks)) != len(masks):
            raise ValueError("duplicate hyperedges")
        self.n = n
        self.r = r
        self.edge_masks = tuple(sorted(masks, key=_mask_key))

    def edge_tuples(self) -> list[tuple[int, ...]]:
        return [_mask_vertices(m) for m in self.edge_masks]

    def edge_count(self) -> int:
        return len(self.edge_masks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Hypergraph)
            and (self.n, self.r, self.edge_masks) == (other.n, other.r, other.edge_masks)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.edge_masks))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, r={self.r}, edges={self.edge_tuples()})"


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(v)
    return tuple(out)


def _mask_key(mask: int) -> tuple[int, ...]:
    return _mask_vertices(mask)


def complete_r(k: int, r: int) -> Hypergraph:
    """The complete r-uniform hypergraph on k vertices."""
    if r < 2:
        raise ValueError(f"uniformity must be at least 2, got r={r}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    return Hypergraph(k, r, combinations(range(k), r))


def hyper_matching(h: Hypergraph) -> int:
    """Largest number of pairwise disjoint hyperedges, exact."""
    masks = h.edge_masks
    m = len(masks)
    best = 0

    def rec(start: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        # even taking every remaining edge cannot beat best: prune
        if size + (m - start) <= best:
            return
        for j in range(start, m):
            if not masks[j] & used:
                rec(j + 1, used | masks[j], size + 1)

    rec(0, 0, 0)
    return best


def has_red_complete_r(h: Hypergraph, red_edges: Iterable[Iterable[int] | int], n: int) -> bool:
    """Whether the red edge subset contains a complete r-graph on n vertices."""
    if n < h.r:
        raise ValueError(f"need n >= r = {h.r}, got n={n}")
    host = set(h.edge_masks)
    red = set()
    for e in red_edges:
        mask = e if isinstance(e, int) else _vertices_mask(e)
        if mask not in host:
            raise ValueError(f"red edge {e!r} is not a host edge")
        red.add(mask)
    for window in combinations(range(h.n), n):
        if all(_vertices_mask(sub) in red for sub in combinations(window, h.r)):
            return True
    return False


def _vertices_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def hypergraph_to_text(h: Hypergraph) -> str:
    """Serialize as a 'n r' header line plus one edge per line."""
    lines = [f"{h.n} {h.r}"]
    lines.extend(" ".join(str(v) for v in edge) for edge in h.edge_tuples())
    return "\n".join(lines) + "\n"


def hypergraph_from_text(text: str) -> Hypergraph:
    """Parse the text format; malformed input names the failing line."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise HypergraphFormatError("missing 'n r' header", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise HypergraphFormatError(f"header must be 'n r', got {lines[0]!r}", 1)
    try:
        n, r = int(head[0]), int(head[1])
    except ValueError:
        raise HypergraphFormatError(f"non-integer header {lines[0]!r}", 1) from None
    edges = []
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            edge = [int(tok) for tok in line.split()]
        except ValueError:
            raise HypergraphFormatError(f"non-integer vertex in {line!r}", i) from None
        if len(edge) != r or len(set(edge)) != r:
            raise HypergraphFormatError(f"edge {line!r} is not a set of {r} vertices", i)
        if min(edge) < 0 or max(edge) >= n:
            raise HypergraphFormatError(f"edge {line!r} out of range for {n} vertices", i)
        edges.append(edge)
    try:
        return Hypergraph(n, r, edges)
    except ValueError as exc:
        # remaining constructor failures (duplicates, caps) have no single line
        raise HypergraphFormatError(str(exc), 1) from None
