"""The systematic code: redundancy carried as inserted anchor symbols.

A message permutation on [N] is encoded by inserting K = 2k fresh symbols
N+1, ..., N+K after anchor values chosen from the message alphabet.  The
anchor sequence encodes the message's coset syndrome: the 4t-1 syndrome
digits are packed into one big integer gamma < q^{4t-1}, gamma is reduced
modulo N+1, ..., N+k, and each residue is written as a two-digit base-w
number (w = floor(N/k)) shifted into a per-block range of anchor values.
Distinct syndromes then produce anchor sequences whose Hamming sets have
size at least 2t+1, so the anchor sequence survives up to t block errors.

Decoding strips the inserted symbols, recovers the received anchor sequence
(with sentinels where the structure is damaged), re-derives gamma by solving
the congruences with up to t residues treated as wrong and any number
erased, and finally runs the coset decoder with the recovered syndrome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .coset import CodeParams
from .coset import decode as coset_decode
from .coset import syndrome as coset_syndrome
from .errors import DecodeFailure, EnumerationCapError, ParameterError
from .gfq import is_prime, smallest_field_prime
from .perms import (
    Perm,
    check_permutation,
    extend,
    hamming_set,
    recover_extension_sequence,
    truncate,
)

EXHAUSTIVE_SEARCH_CAP = 10**6

# Candidates examined per merged congruence class; beyond this the surviving
# congruences cannot pin down the syndrome and decoding reports failure.
_MAX_CANDIDATES_PER_CLASS = 10**6


def _isqrt_floor_minus_half(n: int) -> int:
    # floor(sqrt(n) - 1/2), exactly.
    return (math.isqrt(4 * n) - 1) // 2


@dataclass(frozen=True)
class AuxParams:
    """Parameters of the systematic code.

    With strict=True (the default) the construction's hypotheses are
    enforced: k >= 28t, 3 < k < floor(sqrt(N) - 1/2), N > k^2, and
    N^2 - N < q < 2(N^2 - N).  These guarantee the anchor-sequence family is
    pairwise far apart and the residue recovery is unique.  strict=False
    keeps only the structural requirements needed for encode/decode to run,
    for small-scale experiments that do not rely on the distance guarantee.
    """

    n: int
    t: int
    k: Optional[int] = None
    q: Optional[int] = None
    labeling_mode: str = "compact"
    strict: bool = True

    def __post_init__(self):
        if self.t < 1:
            raise ParameterError("error budget t must be >= 1")
        if self.k is None:
            object.__setattr__(self, "k", 28 * self.t)
        if self.q is None:
            object.__setattr__(
                self, "q", smallest_field_prime(self.n, self.labeling_mode)
            )
        n, t, k, q = self.n, self.t, self.k, self.q
        if not is_prime(q):
            raise ParameterError(f"q = {q} is not prime")
        if k < 1:
            raise ParameterError("k must be >= 1")
        if self.width < 1:
            raise ParameterError("block width floor(n/k) must be >= 1")
        if self.width**2 < n + k:
            raise ParameterError(
                "block width too small: floor(n/k)^2 must reach n + k "
                "so every residue fits a two-digit encoding"
            )
        if self.strict:
            if k < 28 * t:
                raise ParameterError(f"k must be >= 28t = {28 * t}")
            if k <= 3:
                raise ParameterError("k must exceed 3")
            if n <= k * k:
                raise ParameterError(f"n must exceed k^2 = {k * k}")
            if k >= _isqrt_floor_minus_half(n):
                raise ParameterError(
                    f"k must be below floor(sqrt(n) - 1/2) = {_isqrt_floor_minus_half(n)}"
                )
            if not (n * n - n < q < 2 * (n * n - n)):
                raise ParameterError("q must lie strictly between n^2 - n and 2(n^2 - n)")

    @property
    def num_inserted(self) -> int:
        """K, the number of inserted redundancy symbols (two per block)."""
        return 2 * self.k

    @property
    def width(self) -> int:
        return self.n // self.k

    def block_base(self, i: int) -> int:
        """Smallest anchor value of block i (1-based)."""
        return (i - 1) * self.width + 1

    def coset_params(self) -> CodeParams:
        return CodeParams(self.n, self.t, self.q, self.labeling_mode)

    @property
    def gamma_bound(self) -> int:
        return self.q ** (4 * self.t - 1)


# ---------------------------------------------------------------------------
# the syndrome -> anchor-sequence injection

def gamma_of(digits: Sequence[int], q: int) -> int:
    """Pack field elements into one integer, least significant digit first."""
    if any(not 0 <= d < q for d in digits):
        raise ParameterError("digits must lie in [0, q)")
    out = 0
    for d in reversed(digits):
        out = out * q + d
    return out


def gamma_digits(gamma: int, q: int, length: int) -> tuple[int, ...]:
    if not 0 <= gamma < q**length:
        raise ParameterError(f"gamma out of range [0, q^{length})")
    out = []
    for _ in range(length):
        gamma, d = divmod(gamma, q)
        out.append(d)
    return tuple(out)


def crt_residues(digits: Sequence[int], n: int, k: int, q: int) -> tuple[int, ...]:
    """Residues of the packed integer modulo n+1, ..., n+k.

    Two packed vectors that differ agree on few residues: fewer than
    k/2 + d(2 + log_n 2) of the k positions, where d = len(digits), provided
    n > k^2 and k > 3.
    """
    if k < 1 or n < 1:
        raise ParameterError("need n >= 1 and k >= 1")
    g = gamma_of(digits, q)
    return tuple(g % (n + i) for i in range(1, k + 1))


def residues_to_anchors(residues: Sequence[int], n: int, k: int) -> tuple[int, ...]:
    """Write each residue as two base-w anchor digits inside its block's range.

    Block i (1-based) owns the anchor values (i-1)w + 1 .. iw, w = floor(n/k);
    residue b becomes the pair (base + b // w, base + b mod w).  Purely the
    digit formula: callers wanting the distance guarantee must also ensure
    every residue is below w^2, which AuxParams-based entry points assert.
    """
    if len(residues) != k:
        raise ParameterError(f"expected {k} residues")
    w = n // k
    if w < 1:
        raise ParameterError("floor(n/k) must be >= 1")
    out = []
    for i, b in enumerate(residues, 1):
        if b < 0:
            raise ParameterError("residues must be non-negative")
        base = (i - 1) * w + 1
        hi, lo = base + b // w, base + b % w
        if hi > n:
            raise ParameterError(f"residue {b} of block {i} overflows the alphabet")
        out.append(hi)
        out.append(lo)
    return tuple(out)


def _anchors_from_gamma(gamma: int, params: AuxParams) -> tuple[int, ...]:
    residues = tuple(gamma % (params.n + i) for i in range(1, params.k + 1))
    w2 = params.width**2
    if any(b >= w2 for b in residues):
        raise ParameterError("residue exceeds the two-digit capacity w^2")
    return residues_to_anchors(residues, params.n, params.k)


def syndrome_anchor_sequence(alpha: Sequence[int], params: AuxParams) -> tuple[int, ...]:
    """The injective map from syndromes to length-2k anchor sequences."""
    if len(alpha) != 4 * params.t - 1:
        raise ParameterError(f"syndrome must have length {4 * params.t - 1}")
    return _anchors_from_gamma(gamma_of(alpha, params.q), params)


def anchors_to_residues(
    anchors: Sequence[int], params: AuxParams
) -> list[Optional[int]]:
    """Per-block residues read back from a received anchor sequence.

    A block whose anchor pair falls outside its value range (including the
    sentinel 0), or whose decoded residue is not a legal value modulo n+i,
    is marked erased with None rather than trusted as an error.
    """
    if len(anchors) != params.num_inserted:
        raise ParameterError(f"expected {params.num_inserted} anchors")
    w = params.width
    out: list[Optional[int]] = []
    for i in range(1, params.k + 1):
        hi, lo = anchors[2 * i - 2], anchors[2 * i - 1]
        base = params.block_base(i)
        if base <= hi < base + w and base <= lo < base + w:
            b = (hi - base) * w + (lo - base)
            out.append(b if b < params.n + i else None)
        else:
            out.append(None)
    return out


# ---------------------------------------------------------------------------
# encoding

def encode(message: Sequence[int], params: AuxParams) -> Perm:
    """Systematically encode a message permutation on [n] into one on [n + 2k]."""
    msg = check_permutation(message)
    if len(msg) != params.n:
        raise ParameterError(f"message must be a permutation of [{params.n}]")
    alpha = coset_syndrome(msg, params.coset_params())
    return extend(msg, syndrome_anchor_sequence(alpha, params))


# ---------------------------------------------------------------------------
# gamma recovery

def _merge_congruence(
    r: int, n: int, r2: int, n2: int
) -> Optional[tuple[int, int]]:
    # Combine x = r (mod n) with x = r2 (mod n2); None when contradictory.
    g = math.gcd(n, n2)
    if (r2 - r) % g:
        return None
    lcm = n * (n2 // g)
    step = ((r2 - r) // g * pow(n // g, -1, n2 // g)) % (n2 // g)
    return (r + n * step) % lcm, lcm


def _candidates_in_range(r: int, modulus: int, bound: int) -> list[int]:
    count = (bound - r + modulus - 1) // modulus if r < bound else 0
    if count > _MAX_CANDIDATES_PER_CLASS:
        # Only reachable when nearly every block is erased or the parameters
        # are unsound; the finest congruence class is then already hopeless.
        raise DecodeFailure(
            "anchor-recovery-underdetermined",
            "surviving residue moduli cannot pin down the syndrome",
        )
    return [r + j * modulus for j in range(count)]


def recover_gamma_crt(received_anchors: Sequence[int], params: AuxParams) -> int:
    """Recover the packed syndrome integer from a noisy anchor sequence.

    Treats every subset of at most t non-erased blocks as the wrong ones and
    solves the remaining congruences (merged pairwise through gcd/lcm since
    the moduli are not coprime).  A candidate survives when it lies below
    q^{4t-1} and its regenerated anchor sequence is within Hamming-set size t
    of the received one.  Under the construction's hypotheses at most one
    candidate can survive; two distinct survivors mean the parameters do not
    actually provide the distance guarantee.
    """
    residues = anchors_to_residues(received_anchors, params)
    available = [i for i in range(1, params.k + 1) if residues[i - 1] is not None]
    bound = params.gamma_bound
    survivors: set[int] = set()
    for wrong_count in range(params.t + 1):
        for wrong in combinations(available, wrong_count):
            merged: Optional[tuple[int, int]] = (0, 1)
            used = False
            for i in available:
                if i in wrong:
                    continue
                used = True
                merged = _merge_congruence(
                    merged[0], merged[1], residues[i - 1], params.n + i
                )
                if merged is None:
                    break
            if merged is None or not used:
                continue
            for cand in _candidates_in_range(merged[0], merged[1], bound):
                if len(hamming_set(_anchors_from_gamma(cand, params), received_anchors)) <= params.t:
                    survivors.add(cand)
    if not survivors:
        raise DecodeFailure(
            "anchor-recovery-failed", "no syndrome is consistent with the anchors"
        )
    if len(survivors) > 1:
        raise DecodeFailure(
            "ambiguous-anchor-recovery",
            "multiple syndromes fit; parameters lack the required distance",
        )
    return survivors.pop()


def recover_gamma_exhaustive(received_anchors: Sequence[int], params: AuxParams) -> int:
    """Scan every possible syndrome; only for toy parameter sets."""
    bound = params.gamma_bound
    if bound > EXHAUSTIVE_SEARCH_CAP:
        raise EnumerationCapError(
            f"q^(4t-1) = {bound} exceeds the exhaustive search cap {EXHAUSTIVE_SEARCH_CAP}"
        )
    if len(received_anchors) != params.num_inserted:
        raise ParameterError(f"expected {params.num_inserted} anchors")
    survivors = [
        g
        for g in range(bound)
        if len(hamming_set(_anchors_from_gamma(g, params), received_anchors)) <= params.t
    ]
    if not survivors:
        raise DecodeFailure(
            "anchor-recovery-failed", "no syndrome is consistent with the anchors"
        )
    if len(survivors) > 1:
        raise DecodeFailure(
            "ambiguous-anchor-recovery",
            "multiple syndromes fit; parameters lack the required distance",
        )
    return survivors[0]


# ---------------------------------------------------------------------------
# decoding

def decode(received: Sequence[int], params: AuxParams, method: str = "crt") -> Perm:
    """Decode a received length-(n+2k) permutation back to the message.

    Succeeds whenever the received word is within block permutation distance
    t of a codeword.  Steps: drop the inserted symbols, recover the anchor
    sequence (sentinels absorb structural damage), re-derive the syndrome by
    residue decoding, then run the coset decoder and its final syndrome
    verification.  All failures raise DecodeFailure with a labeled reason.
    """
    sigma = check_permutation(received)
    n, big_k = params.n, params.num_inserted
    if len(sigma) != n + big_k:
        raise ParameterError(f"expected a permutation of [{n + big_k}]")
    inserted = set(range(n + 1, n + big_k + 1))
    message_part = truncate(sigma, inserted)
    anchors = recover_extension_sequence(sigma, n, big_k)
    if method == "crt":
        gamma = recover_gamma_crt(anchors, params)
    elif method == "exhaustive":
        gamma = recover_gamma_exhaustive(anchors, params)
    else:
        raise ParameterError(f"unknown recovery method {method!r}")
    alpha = gamma_digits(gamma, params.q, 4 * params.t - 1)
    return coset_decode(message_part, alpha, params.coset_params())
