"""Exact arithmetic helpers for clique-cost accounting.

Everything downstream reasons about edge counts of disjoint clique unions,
so the primitives here are binomial coefficients, the per-stripe cost of a
single clique, and the normalized cost constant that controls the large-t
behaviour.  All values are exact: arbitrary-precision ints and Fractions,
never floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

__all__ = [
    "binomial",
    "cost_per_stripe",
    "limit_constant",
    "merge_profitable",
]


def binomial(a: int, k: int) -> int:
    """C(a, k), with C(a, k) = 0 whenever k > a.

    Rejects negative arguments; the zero convention for k > a is what makes
    the cost formulas below uniform at their boundary cases.
    """
    if a < 0 or k < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({a}, {k})")
    return comb(a, k)


def cost_per_stripe(n: int, x: int) -> Fraction:
    """Edge cost per stripe of one clique serving x stripes against K_n.

    A clique that absorbs x disjoint blue edges while still threatening a
    red K_n needs n + 2x - 2 vertices, hence C(n + 2x - 2, 2) edges; this
    returns that count divided by x, exactly.  Over the integers the ratio
    is minimized at x in {(n-3)/2, (n-2)/2} (whichever neighbours are
    integral), where it equals 4n - 10.
    """
    if n < 3:
        raise ValueError(f"cost_per_stripe needs n >= 3, got n={n}")
    if x < 1:
        raise ValueError(f"cost_per_stripe needs x >= 1, got x={x}")
    return Fraction(binomial(n + 2 * x - 2, 2), x)


def limit_constant(n: int, t_max: int) -> tuple[Fraction, int]:
    """Minimum of C(n + 2t - 2, 2) / (t * C(n, 2)) over 1 <= t <= t_max.

    Returns (minimum, argmin), argmin being the first t attaining it.  This
    is the constant that the normalized size-Ramsey value approaches for
    large t.  For n >= 4 the scan is cross-checked against the closed form
    4(2n - 5) / (n(n - 1)); disagreement means a bug, so it raises rather
    than returning either side.

    t_max must be at least n so the interior minimum lies inside the
    scanned range.
    """
    if n <= 1:
        raise ValueError(f"limit_constant needs n >= 2, got n={n}")
    if t_max < n:
        raise ValueError(f"limit_constant needs t_max >= n, got t_max={t_max}")
    best: Fraction | None = None
    best_t = 0
    base = binomial(n, 2)
    for t in range(1, t_max + 1):
        q = Fraction(binomial(n + 2 * t - 2, 2), t * base)
        if best is None or q < best:
            best, best_t = q, t
    assert best is not None
    if n >= 4:
        closed = Fraction(4 * (2 * n - 5), n * (n - 1))
        if best != closed:
            raise ArithmeticError(
                f"normalized-cost scan gave {best} but the closed form "
                f"4(2n-5)/(n(n-1)) gives {closed} for n={n}"
            )
    return best, best_t


def merge_profitable(n: int, a: int, b: int) -> bool:
    """Whether two cliques serving a and b stripes may be merged into one.

    Merging is profitable (never increases the edge total) exactly when
    C(n + a - 2, 2) + C(n + b - 2, 2) >= C(n + a + b - 2, 2), which reduces
    to the product test a * b <= C(n - 2, 2).  Both forms are evaluated and
    compared; a mismatch raises instead of silently trusting either.
    """
    if n < 2:
        raise ValueError(f"merge_profitable needs n >= 2, got n={n}")
    if a < 1 or b < 1:
        raise ValueError(f"merge_profitable needs a, b >= 1, got ({a}, {b})")
    by_cost = binomial(n + a - 2, 2) + binomial(n + b - 2, 2) >= binomial(n + a + b - 2, 2)
    by_product = a * b <= binomial(n - 2, 2)
    if by_cost != by_product:
        raise ArithmeticError(
            f"merge test disagreement at n={n}, a={a}, b={b}: "
            f"cost form says {by_cost}, product form says {by_product}"
        )
    return by_cost
