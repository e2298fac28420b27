"""Bound calculators and brute-force oracles for the two permutation metrics.

Everything here is either exact combinatorics (big integers and rationals)
or an exhaustive small-scale oracle used to validate the code constructions:
weight distribution of the block permutation metric, enumerated ball sizes,
a breadth-first-search distance oracle over the segment-swap generators, and
the rate bounds of the optimal codes.  The oracles refuse above length 7
(5040 states) rather than approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from collections import Counter, deque
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iter_permutations
from typing import Iterable, Optional, Sequence

from .caps import ENUM_CAP_ENV, resolve_enum_cap
from .errors import EnumerationCapError, ParameterError
from .perms import (
    Perm,
    all_generalized_transpositions,
    block_distance,
    block_weight,
    compose,
    identity,
    inverse,
)

DEFAULT_ORACLE_CAP = 7

LOG2_E = math.log2(math.e)


def _check_cap(n: int, cap: Optional[int], what: str) -> None:
    limit = resolve_enum_cap(cap, DEFAULT_ORACLE_CAP)
    if n > limit:
        raise EnumerationCapError(
            f"{what} refuses n = {n} beyond cap {limit}; set {ENUM_CAP_ENV} to override"
        )


# ---------------------------------------------------------------------------
# weight distribution

def block_weight_count(n: int, m: int) -> int:
    """Number of permutations of [n] with exactly m breakpoints, exactly.

    Closed form: C(n-1, m) m! sum_{k=0}^{m} (-1)^{m-k} (k+1) / (m-k)!,
    evaluated in exact rationals.
    """
    if not 0 <= m <= n - 1:
        raise ParameterError(f"weight must lie in [0, {n - 1}]")
    if m == 0:
        return 1
    acc = sum(
        Fraction((-1) ** (m - k) * (k + 1), math.factorial(m - k)) for k in range(m + 1)
    )
    value = math.comb(n - 1, m) * math.factorial(m) * acc
    assert value.denominator == 1
    return int(value)


def block_weight_histogram(n: int, cap: Optional[int] = None) -> list[int]:
    """Enumerated count of permutations of [n] by breakpoint count."""
    _check_cap(n, cap, "weight histogram")
    counts = Counter(block_weight(p) for p in iter_permutations(range(1, n + 1)))
    return [counts.get(m, 0) for m in range(n)]


# ---------------------------------------------------------------------------
# exact ball sizes and the BFS distance oracle

def exact_block_ball(n: int, t: int, cap: Optional[int] = None) -> int:
    """Enumerated number of permutations within block distance t of a center."""
    _check_cap(n, cap, "block ball enumeration")
    hist = block_weight_histogram(n, cap)
    return sum(hist[: min(t, n - 1) + 1])


@lru_cache(maxsize=None)
def _cayley_distance_table(n: int) -> dict[Perm, int]:
    gens = list(all_generalized_transpositions(n))
    start = identity(n)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for g in gens:
            v = compose(u, g)
            if v not in dist:
                dist[v] = du
                queue.append(v)
    return dist


def cayley_distance_table(n: int, cap: Optional[int] = None) -> dict[Perm, int]:
    """Distance of every permutation of [n] from the identity, by full BFS."""
    _check_cap(n, cap, "BFS distance oracle")
    return _cayley_distance_table(n)


def exact_cayley_distance(
    p1: Sequence[int], p2: Sequence[int], cap: Optional[int] = None
) -> int:
    """The true segment-swap distance between two permutations (BFS oracle)."""
    if len(p1) != len(p2):
        raise ParameterError("permutations must have equal length")
    table = cayley_distance_table(len(p1), cap)
    return table[compose(inverse(p1), p2)]


def exact_cayley_ball(n: int, t: int, cap: Optional[int] = None) -> int:
    """Enumerated number of permutations within segment-swap distance t."""
    _check_cap(n, cap, "ball enumeration")
    if t < 0:
        raise ParameterError("radius must be >= 0")
    gens = list(all_generalized_transpositions(n))
    seen = {identity(n)}
    frontier = [identity(n)]
    for _ in range(t):
        nxt = []
        for u in frontier:
            for g in gens:
                v = compose(u, g)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        if not nxt:
            break
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------------------
# bounds

def _block_radius_admissible(n: int, t: int) -> bool:
    # t <= n - sqrt(n) - 1, checked exactly
    return n - t - 1 >= 0 and (n - t - 1) ** 2 >= n


def _cayley_radius_admissible(n: int, t: int) -> bool:
    return _block_radius_admissible(n, t) and 4 * t <= n - 1


@dataclass(frozen=True)
class BallReport:
    n: int
    t: int
    metric: str
    lower: int
    upper: int
    exact: Optional[int]
    guaranteed: bool


def ball_bounds(
    n: int, t: int, metric: str, cap: Optional[int] = None
) -> BallReport:
    """Lower and upper bounds on the metric ball size, plus the exact count
    by enumeration when n is within the oracle cap.

    Outside the admissible radius range the bounds are still computed but
    flagged as not guaranteed.
    """
    if metric not in ("block", "cayley"):
        raise ParameterError("metric must be 'block' or 'cayley'")
    if t < 0 or n < 1:
        raise ParameterError("need n >= 1 and t >= 0")
    lower = math.prod(n - k for k in range(1, t + 1))
    if metric == "block":
        upper = math.prod(n - k for k in range(0, t + 1))
        guaranteed = _block_radius_admissible(n, t)
    else:
        upper = math.prod(n - k for k in range(0, 4 * t + 1))
        guaranteed = _cayley_radius_admissible(n, t)
    exact = None
    if n <= resolve_enum_cap(cap, DEFAULT_ORACLE_CAP):
        exact = (
            exact_block_ball(n, t, cap)
            if metric == "block"
            else exact_cayley_ball(n, t, cap)
        )
    return BallReport(n, t, metric, lower, upper, exact, guaranteed)


@dataclass(frozen=True)
class RateReport:
    n: int
    t: int
    metric: str
    lower: float
    upper: float
    c: float


def rate_bounds(n: int, t: int, metric: str) -> RateReport:
    """Bounds on the optimal code rate: the redundancy is Theta(t/n).

    Valid for n >= 9 and t within the admissible radius range of the metric;
    anything else is refused.
    """
    if metric not in ("block", "cayley"):
        raise ParameterError("metric must be 'block' or 'cayley'")
    if n < 9:
        raise ParameterError("rate bounds need n >= 9")
    if t < 1 or not _cayley_radius_admissible(n, t):
        raise ParameterError(
            f"t = {t} outside the admissible range for n = {n}"
        )
    c = 1 + 2 * LOG2_E / math.log2(n)
    mult = 2 * t + 1 if metric == "block" else 8 * t + 1
    return RateReport(n, t, metric, 1 - c * mult / n, 1 - t / n, c)


def log2_factorial_bounds(n: int) -> tuple[float, float, float]:
    """(lower bound, exact value, upper bound) for log2(n!).

    The bracket is (n + 1/2) log2 n - n log2 e plus at most 2.
    """
    if n < 1:
        raise ParameterError("need n >= 1")
    lower = (n + 0.5) * math.log2(n) - n * LOG2_E
    exact = sum(math.log2(i) for i in range(1, n + 1))
    return lower, exact, lower + 2


# ---------------------------------------------------------------------------
# codebook verification

def min_distance(
    codebook: Sequence[Sequence[int]], metric: str = "block", cap: Optional[int] = None
) -> int:
    """Minimum pairwise distance over a codebook (oracle-backed for cayley)."""
    if len(codebook) < 2:
        raise ParameterError("minimum distance needs at least two codewords")
    if metric == "block":
        dist = block_distance
    elif metric == "cayley":
        def dist(a, b):
            return exact_cayley_distance(a, b, cap)
    else:
        raise ParameterError("metric must be 'block' or 'cayley'")
    return min(
        dist(codebook[i], codebook[j])
        for i in range(len(codebook))
        for j in range(i + 1, len(codebook))
    )


# ---------------------------------------------------------------------------
# the LCM growth bound behind the residue construction

@dataclass(frozen=True)
class LcmCheck:
    n: int
    k: int
    subset: tuple[int, ...]
    size: int
    lcm: int
    holds: bool


def lcm_bound_check(n: int, k: int, subset: Iterable[int]) -> LcmCheck:
    """Exact check that LCM{n+i : i in subset} exceeds n^(|subset| - k/2).

    The fractional exponent is handled by comparing LCM^2 against n^(2M - k)
    in exact integers; negative exponents make the inequality vacuous.
    """
    if k <= 3:
        raise ParameterError("the bound needs k > 3")
    if n <= k * k:
        raise ParameterError("the bound needs n > k^2")
    sub = tuple(sorted(set(subset)))
    if any(not 1 <= i <= k for i in sub):
        raise ParameterError(f"subset members must lie in [1, {k}]")
    m = len(sub)
    if m >= k:
        raise ParameterError("subset must be a proper subset of [k]")
    value = math.lcm(*(n + i for i in sub)) if sub else 1
    holds = True if 2 * m - k < 0 else value * value > n ** (2 * m - k)
    return LcmCheck(n, k, sub, m, value, holds)
