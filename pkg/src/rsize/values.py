"""Size-Ramsey values via clique-composition minimization.

The value of interest is the least edge total of a disjoint union of
cliques that still forces the clique/stripe pair: pick positive integers
s_1, ..., s_l (how many stripes each clique absorbs) and pay
C(n + 2*s_i - 2, 2) edges per clique.  g(n, t) minimizes the total
subject to sum(s_i) >= t; that minimum IS the size Ramsey number of
(K_n, tK_2).  Two relatives share the machinery: g_hat (cost
C(n + s - 2, 2), target 2t, the form the decoloring lemma produces) and
the r-uniform generalization g_r (cost C(n + r*(s - 1), r), target t).

Every part cost here is strictly convex and increasing in s, so the
optimum over "sum >= target" is attained at exact sum, which is what the
DP uses; overshooting a target never pays.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator

from .exactmath import binomial

__all__ = [
    "Flavor",
    "PartitionWitness",
    "ValueResult",
    "part_cost",
    "g",
    "g_hat",
    "g_r",
    "g_values",
    "g_hat_values",
    "size_ramsey",
    "equality_condition",
    "bounds",
    "structural_witness",
    "iter_partitions",
]


class Flavor(Enum):
    """Which minimization a witness belongs to."""

    G = "g"
    GHAT = "ghat"
    GR = "gr"


def part_cost(flavor: Flavor, n: int, s: int, r: int | None = None) -> int:
    """Edge cost of one clique absorbing s stripes, per flavor."""
    if flavor is Flavor.G:
        return binomial(n + 2 * s - 2, 2)
    if flavor is Flavor.GHAT:
        return binomial(n + s - 2, 2)
    if r is None:
        raise ValueError("flavor GR needs r")
    return binomial(n + r * (s - 1), r)


@dataclass(frozen=True)
class PartitionWitness:
    """An optimal multiset of parts, stored nonincreasing.

    target_sum is the exact sum the parts achieve (t for G and GR, 2t for
    GHAT); objective is the summed part cost.  Validated on construction.
    """

    flavor: Flavor
    n: int
    parts: tuple[int, ...]
    objective: int
    target_sum: int
    r: int | None = None

    def __post_init__(self) -> None:
        if not self.parts or any(s < 1 for s in self.parts):
            raise ValueError(f"witness parts must be positive, got {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"witness parts must be nonincreasing, got {self.parts}")
        if sum(self.parts) != self.target_sum:
            raise ValueError(
                f"witness parts sum to {sum(self.parts)}, target is {self.target_sum}"
            )
        recomputed = sum(part_cost(self.flavor, self.n, s, self.r) for s in self.parts)
        if recomputed != self.objective:
            raise ValueError(
                f"witness objective {self.objective} does not match part costs {recomputed}"
            )


@dataclass(frozen=True)
class ValueResult:
    """A computed value together with its witness."""

    n: int
    t: int
    value: int
    witness: PartitionWitness
    r: int | None = None

    def __post_init__(self) -> None:
        if self.value != self.witness.objective:
            raise ValueError("value and witness objective disagree")


def _min_cost_rows(cost_of: Callable[[int], int], total: int) -> tuple[list[int], list[int]]:
    """DP over compositions of each exact sum m = 0..total.

    Returns (value, count) arrays where value[m] is the least achievable
    summed cost and count[m] the fewest parts among value-optimal
    compositions.  The pairwise-lexicographic minimum decomposes because
    adding a fixed (cost, 1) to both sides preserves the order.
    """
    costs = [0] * (total + 1)
    for s in range(1, total + 1):
        costs[s] = cost_of(s)
    value = [0] * (total + 1)
    count = [0] * (total + 1)
    for m in range(1, total + 1):
        best_v = costs[m]
        best_c = 1
        for s in range(1, m):
            v = value[m - s] + costs[s]
            if v < best_v or (v == best_v and count[m - s] + 1 < best_c):
                best_v = v
                best_c = count[m - s] + 1
        value[m] = best_v
        count[m] = best_c
    return value, count


def _near_equal(total: int, parts: int) -> tuple[int, ...]:
    q, extra = divmod(total, parts)
    return (q + 1,) * extra + (q,) * (parts - extra)


def _solve(flavor: Flavor, n: int, total: int, r: int | None) -> tuple[int, PartitionWitness]:
    cost_of = lambda s: part_cost(flavor, n, s, r)
    value, count = _min_cost_rows(cost_of, total)
    parts = _near_equal(total, count[total])
    # strict convexity of every cost family makes the fewest-part optimum
    # unique and near-equal; if that ever breaks, fail loudly
    if sum(cost_of(s) for s in parts) != value[total]:
        raise AssertionError(
            f"near-equal reconstruction missed the DP optimum for "
            f"{flavor.value}, n={n}, total={total}"
        )
    witness = PartitionWitness(
        flavor=flavor, n=n, parts=parts, objective=value[total], target_sum=total, r=r
    )
    return value[total], witness


def _check_nt(n: int, t: int, n_min: int = 2) -> None:
    if n < n_min:
        raise ValueError(f"need n >= {n_min}, got n={n}")
    if t < 1:
        raise ValueError(f"need t >= 1, got t={t}")


def g(n: int, t: int) -> ValueResult:
    """Least edge total of a clique strategy covering t stripes against K_n."""
    _check_nt(n, t)
    value, witness = _solve(Flavor.G, n, t, None)
    return ValueResult(n=n, t=t, value=value, witness=witness)


def g_hat(n: int, t: int) -> ValueResult:
    """The companion minimum with part cost C(n + s - 2, 2) and target 2t."""
    _check_nt(n, t)
    value, witness = _solve(Flavor.GHAT, n, 2 * t, None)
    return ValueResult(n=n, t=t, value=value, witness=witness)


def g_r(n: int, r: int, t: int) -> ValueResult:
    """r-uniform analogue: part cost C(n + r(s-1), r), target t."""
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    _check_nt(n, t, n_min=r)
    value, witness = _solve(Flavor.GR, n, t, r)
    return ValueResult(n=n, t=t, value=value, witness=witness, r=r)


def g_values(n: int, t_max: int) -> list[int]:
    """g(n, t) for t = 0..t_max in one DP pass (index by t; entry 0 is 0)."""
    _check_nt(n, max(t_max, 1))
    value, _ = _min_cost_rows(lambda s: part_cost(Flavor.G, n, s), t_max)
    return value


def g_hat_values(n: int, t_max: int) -> list[int]:
    """g_hat(n, t) for t = 0..t_max in one DP pass (index by t)."""
    _check_nt(n, max(t_max, 1))
    value, _ = _min_cost_rows(lambda s: part_cost(Flavor.GHAT, n, s), 2 * t_max)
    return value[::2]


def size_ramsey(n: int, t: int) -> ValueResult:
    """The size Ramsey number of (K_n, tK_2); equals g(n, t) exactly."""
    return g(n, t)


def equality_condition(n: int, t: int) -> bool:
    """Whether a single clique is optimal, i.e. g(n, t) = C(n + 2t - 2, 2).

    Holds iff t^2 <= C(n - 2, 2) for even t, and t^2 <= C(n - 2, 2) + 1
    for odd t.
    """
    _check_nt(n, t)
    cap = binomial(n - 2, 2)
    return t * t <= cap if t % 2 == 0 else t * t <= cap + 1


def bounds(n: int, t: int) -> tuple[int, int | None]:
    """Closed-form envelope (lower, upper) around g(n, t).

    Lower: 2t(2n - 5), from the per-stripe cost minimum 4n - 10.  Upper:
    round the stripe load up to whole cliques of the cheapest integral
    size, ceil(2t/(n-2)) blocks for even n and ceil(2t/(n-3)) for odd n.
    The odd-n formula degenerates at n = 3 (its block size is zero), so
    only the lower bound is returned there.
    """
    _check_nt(n, t, n_min=3)
    lower = 2 * t * (2 * n - 5)
    if n == 3:
        return lower, None
    if n % 2 == 0:
        blocks = -(-2 * t // (n - 2))
        upper = blocks * (n - 2) * (2 * n - 5)
    else:
        blocks = -(-2 * t // (n - 3))
        upper = blocks * (n - 3) * (2 * n - 5)
    return lower, upper


def structural_witness(n: int, t: int) -> PartitionWitness:
    """Independent route to the g(n, t) optimum: scan the part count.

    For a fixed number of parts l the strictly convex cost makes near-equal
    parts optimal, so the global optimum is the best l in 1..t with parts
    floor(t/l) and ceil(t/l).  No DP involved; ties prefer fewer parts.
    """
    _check_nt(n, t)
    best_obj: int | None = None
    best_parts: tuple[int, ...] = ()
    for l in range(1, t + 1):
        parts = _near_equal(t, l)
        obj = sum(part_cost(Flavor.G, n, s) for s in parts)
        if best_obj is None or obj < best_obj:
            best_obj, best_parts = obj, parts
    assert best_obj is not None
    return PartitionWitness(
        flavor=Flavor.G, n=n, parts=best_parts, objective=best_obj, target_sum=t
    )


def iter_partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of total into positive parts, nonincreasing order."""
    if total < 0:
        raise ValueError(f"need total >= 0, got {total}")
    if total == 0:
        yield ()
        return
    cap = total if max_part is None else min(max_part, total)
    for first in range(cap, 0, -1):
        for rest in iter_partitions(total - first, first):
            yield (first,) + rest
