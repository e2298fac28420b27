"""The non-systematic coset code: pair labeling, syndromes, bucketing, decoding.

Every permutation on [N] is mapped through its characteristic set (the N-1
adjacent ordered pairs) to a set of N-1 labels in a prime field F_q, and from
there to a syndrome of 4t-1 power sums.  Permutations sharing a syndrome form
a code of minimum block permutation distance 2t+1, so the decoder can repair
any received permutation within block distance t of a codeword, given the
codeword's syndrome as side information.

Two pair labelings are provided.  The compact labeling is a bijection between
ordered pairs and [0, N^2-N-1] and is always injective once q >= N^2 - N.
The paper-compat labeling maps (i, j) to N(i-1) + (j-1) mod q; it needs
q >= N^2 - 1 to be collision-free in general, but is kept available because
the worked example it reproduces uses q = 97 with N = 10 (whose permutations
avoid the one colliding pair).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as iter_permutations
from typing import Iterable, Optional, Sequence

from .caps import ENUM_CAP_ENV, resolve_enum_cap
from .errors import DecodeFailure, EnumerationCapError, ParameterError
from .gfq import (
    Poly,
    is_prime,
    linear_solve,
    poly_gcd,
    power_sums,
    power_sums_to_elementary,
    root_multiplicities,
    smallest_field_prime,
)
from .perms import Perm, characteristic_set, check_permutation

DEFAULT_ENUM_CAP = 8

LABELING_MODES = ("compact", "paper")


@dataclass(frozen=True)
class PairLabeling:
    """An injection from ordered pairs of distinct values in [n] into F_q."""

    mode: str
    n: int
    q: int

    def __post_init__(self):
        if self.mode not in LABELING_MODES:
            raise ParameterError(f"labeling mode must be one of {LABELING_MODES}")
        if self.n < 2:
            raise ParameterError("pair labeling needs n >= 2")
        if self.mode == "compact" and self.q < self.n * self.n - self.n:
            raise ParameterError(
                f"compact labeling needs q >= n^2 - n = {self.n * self.n - self.n}"
            )

    def label(self, i: int, j: int) -> int:
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParameterError(f"pair ({i},{j}) out of range [1, {n}]")
        if i == j:
            raise ParameterError("pair values must be distinct")
        if self.mode == "compact":
            return (i - 1) * (n - 1) + (j - 1) - (1 if j > i else 0)
        return (n * (i - 1) + (j - 1)) % self.q

    def unlabel(self, value: int) -> Optional[tuple[int, int]]:
        """The pair a label decodes to, or None when the label is not decodable."""
        n = self.n
        if not (0 <= value < self.q):
            return None
        if self.mode == "compact":
            if value >= n * n - n:
                return None
            i = value // (n - 1) + 1
            r = value % (n - 1)
            j = r + 1 if r < i - 1 else r + 2
            return (i, j)
        i, j = value // n + 1, value % n + 1
        if i > n or i == j:
            return None
        return (i, j)


def labels_of(p: Sequence[int], labeling: PairLabeling) -> set[int]:
    """The label set of a permutation's characteristic set.

    Raises when two pairs of the permutation collide under the labeling,
    which can only happen in paper-compat mode with q below N^2 - 1.
    """
    pairs = characteristic_set(p)
    out = {labeling.label(a, b) for a, b in pairs}
    if len(out) != len(pairs):
        raise ParameterError(
            "pair labeling collided within one permutation; "
            "use the compact labeling or a larger q"
        )
    return out


@dataclass(frozen=True)
class CodeParams:
    """Validated configuration shared by the encoder and decoder.

    t is the block-error correction budget: codewords sit at pairwise block
    permutation distance at least 2t+1 and the decoder repairs block distance
    up to t.  To correct g generalized transpositions instead, instantiate
    with t = 4g.
    """

    n: int
    t: int
    q: Optional[int] = None
    labeling_mode: str = "compact"

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError("code length must be >= 2")
        if self.t < 1:
            raise ParameterError("error budget t must be >= 1")
        if self.labeling_mode not in LABELING_MODES:
            raise ParameterError(f"labeling mode must be one of {LABELING_MODES}")
        if self.q is None:
            object.__setattr__(
                self, "q", smallest_field_prime(self.n, self.labeling_mode)
            )
        if not is_prime(self.q):
            raise ParameterError(f"q = {self.q} is not prime")
        if self.q <= self.syndrome_length:
            raise ParameterError("q must exceed 4t - 1 for Newton's identities")
        # Constructing the labeling validates the mode-specific bound on q.
        _ = self.labeling

    @property
    def syndrome_length(self) -> int:
        return 4 * self.t - 1

    @property
    def labeling(self) -> PairLabeling:
        return PairLabeling(self.labeling_mode, self.n, self.q)


def syndrome(p: Sequence[int], params: CodeParams) -> tuple[int, ...]:
    """The 4t-1 power sums of the permutation's label set, mod q."""
    perm = check_permutation(p)
    if len(perm) != params.n:
        raise ParameterError(f"expected a permutation of [{params.n}]")
    return power_sums(labels_of(perm, params.labeling), params.syndrome_length, params.q)


def enumerate_codebook(
    params: CodeParams, cap: Optional[int] = None
) -> tuple[dict[tuple[int, ...], list[Perm]], tuple[int, ...]]:
    """Partition all of S_N by syndrome; also return the largest bucket's key.

    Refuses for N beyond the enumeration cap (default 8, overridable by the
    PERMCODE_ENUM_CAP environment variable) since the cost is N factorial.
    """
    limit = resolve_enum_cap(cap, DEFAULT_ENUM_CAP)
    if params.n > limit:
        raise EnumerationCapError(
            f"refusing to enumerate S_{params.n} (cap {limit}); "
            f"set {ENUM_CAP_ENV} to override"
        )
    buckets: dict[tuple[int, ...], list[Perm]] = {}
    for p in iter_permutations(range(1, params.n + 1)):
        buckets.setdefault(syndrome(p, params), []).append(p)
    best = max(buckets, key=lambda k: (len(buckets[k]), k))
    return buckets, best


def reconstruct_permutation(labels: Iterable[int], labeling: PairLabeling) -> Perm:
    """Rebuild the unique permutation whose characteristic set has these labels.

    The labels are inverted to ordered pairs, which must chain into a single
    Hamiltonian path on [n]: every value at most one successor and one
    predecessor, one start, no cycles.  Any violation raises DecodeFailure
    with reason "invalid-characteristic-set".
    """
    n = labeling.n

    def fail(detail: str) -> DecodeFailure:
        return DecodeFailure("invalid-characteristic-set", detail)

    label_list = list(labels)
    if len(label_list) != n - 1:
        raise fail(f"need exactly {n - 1} labels, got {len(label_list)}")
    successor: dict[int, int] = {}
    seen_second: set[int] = set()
    for v in label_list:
        pair = labeling.unlabel(v)
        if pair is None:
            raise fail(f"label {v} does not decode to a pair")
        a, b = pair
        if a in successor:
            raise fail(f"value {a} has two successors")
        if b in seen_second:
            raise fail(f"value {b} has two predecessors")
        successor[a] = b
        seen_second.add(b)
    starts = set(successor) - seen_second
    if len(starts) != 1:
        raise fail(f"expected a unique start value, found {len(starts)}")
    (cur,) = starts
    out = [cur]
    while cur in successor:
        cur = successor[cur]
        out.append(cur)
    if len(out) != n or sorted(out) != list(range(1, n + 1)):
        raise fail("pairs do not chain into a permutation")
    return tuple(out)


@dataclass(frozen=True)
class DecodeTrace:
    """Intermediate values of one decoding run, for inspection and testing."""

    received_labels: frozenset[int]
    target_elementary: tuple[int, ...]
    received_elementary: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]
    solution: tuple[int, ...]
    h1: Poly
    h2: Poly
    common: Poly
    v1: Poly
    v2: Poly
    added_labels: frozenset[int]
    removed_labels: frozenset[int]
    decoded_labels: frozenset[int]


def _split_roots(v: Poly, what: str) -> set[int]:
    # The additive inverses of the roots, requiring v to split into distinct
    # linear factors; anything else means the received word is too corrupted.
    if v.degree == 0:
        return set()
    mults = root_multiplicities(v)
    if any(m > 1 for m in mults.values()):
        raise DecodeFailure("repeated-roots", f"{what} has a repeated root")
    if sum(mults.values()) != v.degree:
        raise DecodeFailure("irrational-roots", f"{what} does not split over F_q")
    return {(-r) % v.q for r in mults}


def decode_detailed(
    received: Sequence[int], alpha: Sequence[int], params: CodeParams
) -> tuple[Perm, DecodeTrace]:
    """Decode a received permutation against a known syndrome, with trace.

    Recovers the transmitted permutation whenever its block permutation
    distance to the received one is at most t.  The steps: recover the first
    4t-1 elementary symmetric functions of both label sets via Newton's
    identities, solve the banded linear system for the degree-t polynomial
    pair (h1, h2), split off their common factor, read the label corrections
    from the roots, rebuild the permutation, and verify its syndrome.
    """
    q, t = params.q, params.t
    m = params.syndrome_length
    received = check_permutation(received)
    if len(received) != params.n:
        raise ParameterError(f"expected a permutation of [{params.n}]")
    alpha = tuple(v % q for v in alpha)
    if len(alpha) != m:
        raise ParameterError(f"syndrome must have length {m}")

    received_labels = labels_of(received, params.labeling)
    target_elem = power_sums_to_elementary(alpha, q)
    received_elem = power_sums_to_elementary(power_sums(received_labels, m, q), q)

    # Row i, column j of the left (right) block holds elementary symmetric
    # function i-j of the target (received) labels, with index 0 meaning 1.
    def elem_at(elem: tuple[int, ...], k: int) -> int:
        if k < 0:
            return 0
        return 1 if k == 0 else elem[k - 1]

    rows = []
    for i in range(1, m + 1):
        row = [elem_at(target_elem, i - j) for j in range(1, t + 1)]
        row += [elem_at(received_elem, i - j) for j in range(1, t + 1)]
        rows.append(row)
    rhs = [(received_elem[i] - target_elem[i]) % q for i in range(m)]

    solution = linear_solve(rows, rhs, q)
    if solution is None:
        raise DecodeFailure("inconsistent-system", "no degree-t corrector exists")

    # h1 = X^t + c_1 X^{t-1} + ... + c_t, h2 = X^t - c_{t+1} X^{t-1} - ... - c_{2t}.
    h1 = Poly(list(reversed(solution[:t])) + [1], q)
    h2 = Poly([-c % q for c in reversed(solution[t:])] + [1], q)
    common = poly_gcd(h1, h2)
    v1 = h2.exact_div(common)
    v2 = h1.exact_div(common)

    added = _split_roots(v1, "v1")
    removed = _split_roots(v2, "v2")
    if not removed <= received_labels:
        raise DecodeFailure(
            "labels-not-received", "labels to remove are absent from the received set"
        )
    decoded_labels = added | (received_labels - removed)
    if len(decoded_labels) != params.n - 1:
        raise DecodeFailure(
            "wrong-label-count",
            f"recovered {len(decoded_labels)} labels, expected {params.n - 1}",
        )
    decoded = reconstruct_permutation(decoded_labels, params.labeling)
    if syndrome(decoded, params) != alpha:
        raise DecodeFailure("syndrome-mismatch", "decoded permutation fails the syndrome check")

    trace = DecodeTrace(
        received_labels=frozenset(received_labels),
        target_elementary=target_elem,
        received_elementary=received_elem,
        matrix=tuple(tuple(r) for r in rows),
        rhs=tuple(rhs),
        solution=tuple(solution),
        h1=h1,
        h2=h2,
        common=common,
        v1=v1,
        v2=v2,
        added_labels=frozenset(added),
        removed_labels=frozenset(removed),
        decoded_labels=frozenset(decoded_labels),
    )
    return decoded, trace


def decode(received: Sequence[int], alpha: Sequence[int], params: CodeParams) -> Perm:
    """Decode a received permutation against a known syndrome."""
    return decode_detailed(received, alpha, params)[0]
