"""Permutation arithmetic, the block permutation metric, and error channels.

Permutations on [N] = {1, ..., N} are stored in one-line notation as tuples
(p(1), ..., p(N)) of 1-based integers.  All functions treat permutations as
immutable values and return new tuples; nothing here mutates its arguments,
so every operation is safe to call concurrently.  The error channels take an
explicit seed so parallel simulation runs stay reproducible.

Extension sequences (the anchor lists used by the systematic code) are plain
tuples over [N].  A received, possibly corrupted sequence may additionally
carry the sentinel value 0 in positions where no legal anchor can be
recovered; transmitted sequences never contain the sentinel.
"""

from __future__ import annotations

import json
import random
from typing import Iterable, Iterator, Sequence

from .errors import ParameterError

Perm = tuple[int, ...]

SENTINEL = 0


def is_permutation(seq: Sequence[int]) -> bool:
    """True if seq is a bijection on [len(seq)] in one-line notation."""
    n = len(seq)
    return n >= 1 and sorted(seq) == list(range(1, n + 1))


def check_permutation(seq: Iterable[int]) -> Perm:
    """Validate and normalize a permutation to a tuple, or raise ParameterError."""
    p = tuple(seq)
    if not is_permutation(p):
        raise ParameterError(f"not a permutation of [{len(p)}]: {p!r}")
    return p


def identity(n: int) -> Perm:
    if n < 1:
        raise ParameterError("permutation length must be >= 1")
    return tuple(range(1, n + 1))


def inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def compose(outer: Sequence[int], inner: Sequence[int]) -> Perm:
    """Composition (outer o inner)(i) = outer(inner(i))."""
    if len(outer) != len(inner):
        raise ParameterError(
            f"cannot compose permutations of lengths {len(outer)} and {len(inner)}"
        )
    return tuple(outer[v - 1] for v in inner)


# ---------------------------------------------------------------------------
# generalized transpositions (segment swaps)

def generalized_transposition(n: int, i1: int, j1: int, i2: int, j2: int) -> Perm:
    """The permutation that swaps the segments [i1..j1] and [i2..j2] of the identity.

    Requires 1 <= i1 <= j1 < i2 <= j2 <= n.  Composing p with the result on the
    right swaps the corresponding segments of p.
    """
    if not (1 <= i1 <= j1 < i2 <= j2 <= n):
        raise ParameterError(
            f"segment indices must satisfy 1 <= i1 <= j1 < i2 <= j2 <= n, "
            f"got ({i1},{j1},{i2},{j2}) with n={n}"
        )
    e = range(1, n + 1)
    return (
        tuple(e[: i1 - 1])
        + tuple(e[i2 - 1 : j2])
        + tuple(e[j1:i2 - 1])
        + tuple(e[i1 - 1 : j1])
        + tuple(e[j2:])
    )


def all_generalized_transpositions(n: int) -> Iterator[Perm]:
    """Every distinct segment swap on [n], i.e. the generator set of the metric."""
    for i1 in range(1, n + 1):
        for j1 in range(i1, n + 1):
            for i2 in range(j1 + 1, n + 1):
                for j2 in range(i2, n + 1):
                    yield generalized_transposition(n, i1, j1, i2, j2)


def random_generalized_transposition(n: int, rng: random.Random) -> Perm:
    # Rejection from [1,n]^4 keeps the draw exactly uniform over valid tuples.
    while True:
        i1 = rng.randint(1, n)
        j1 = rng.randint(1, n)
        i2 = rng.randint(1, n)
        j2 = rng.randint(1, n)
        if i1 <= j1 < i2 <= j2:
            return generalized_transposition(n, i1, j1, i2, j2)


# ---------------------------------------------------------------------------
# block permutation metric

def characteristic_set(p: Sequence[int]) -> set[tuple[int, int]]:
    """The set of adjacent ordered pairs {(p(i), p(i+1))}; it determines p."""
    return {(p[i], p[i + 1]) for i in range(len(p) - 1)}


def block_distance(p1: Sequence[int], p2: Sequence[int]) -> int:
    """Block permutation distance, computed as |A(p1) \\ A(p2)|."""
    if len(p1) != len(p2):
        raise ParameterError("block_distance requires equal-length permutations")
    return len(characteristic_set(p1) - characteristic_set(p2))


def block_weight(p: Sequence[int]) -> int:
    """Number of breakpoints: adjacent pairs of p that the identity does not have."""
    return sum(1 for i in range(len(p) - 1) if p[i + 1] != p[i] + 1)


def is_minimal(p: Sequence[int]) -> bool:
    """True if no two values adjacent in p are consecutive increasing integers."""
    return all(p[i + 1] != p[i] + 1 for i in range(len(p) - 1))


# ---------------------------------------------------------------------------
# extensions and truncations

def extend(p: Sequence[int], anchors: Sequence[int]) -> Perm:
    """Insert fresh symbols N+1, N+2, ... after the anchor values, sequentially.

    Symbol N+m is placed immediately after the value anchors[m-1] of the
    permutation built so far, so symbols inserted after the same anchor end up
    in descending order.  Anchors must lie in [N] where N = len(p).
    """
    n = len(p)
    seq = list(p)
    for m, s in enumerate(anchors, 1):
        if not (1 <= s <= n):
            raise ParameterError(f"extension anchor {s} out of range [1, {n}]")
        seq.insert(seq.index(s) + 1, n + m)
    return tuple(seq)


def truncate(seq: Sequence[int], symbols: Iterable[int]) -> tuple[int, ...]:
    """Remove the given symbols from seq, preserving the order of the rest."""
    drop = set(symbols)
    missing = drop - set(seq)
    if missing:
        raise ParameterError(f"symbols not present: {sorted(missing)}")
    return tuple(x for x in seq if x not in drop)


def recover_extension_sequence(sigma: Sequence[int], n: int, k: int) -> tuple[int, ...]:
    """Recover the anchor sequence from a (possibly corrupted) extended permutation.

    sigma must be a permutation of [n+k].  For each m from k down to 1 the
    inserted symbol n+m is located after removing all higher inserted symbols;
    its immediate predecessor is the recovered anchor when that predecessor is
    an original symbol in [n].  When n+m sits at the front, or is preceded by
    another inserted symbol, the position gets the sentinel 0, which mismatches
    every legal anchor.  On an uncorrupted codeword this inverts extend().
    """
    sig = check_permutation(sigma)
    if len(sig) != n + k:
        raise ParameterError(f"expected a permutation of [{n + k}], got length {len(sig)}")
    seq = list(sig)
    anchors = [SENTINEL] * k
    for m in range(k, 0, -1):
        pos = seq.index(n + m)
        if pos > 0 and seq[pos - 1] <= n:
            anchors[m - 1] = seq[pos - 1]
        seq.pop(pos)
    return tuple(anchors)


def hamming_set(v1: Sequence[int], v2: Sequence[int]) -> set[int]:
    """Values of v1 at the coordinates where v1 and v2 disagree."""
    if len(v1) != len(v2):
        raise ParameterError("hamming_set requires equal-length sequences")
    return {a for a, b in zip(v1, v2) if a != b}


def jump_set(
    p1: Sequence[int],
    p2: Sequence[int],
    anchors1: Sequence[int],
    anchors2: Sequence[int],
) -> set[int]:
    """Indices m at which the simultaneous extension strictly grows the distance.

    Step m is a jump index when the anchors differ and either anchor sits at
    the end of its partially extended permutation, or the values immediately
    following the two anchors differ.  Each jump index adds at least one to
    the block distance of the final extensions.
    """
    if len(p1) != len(p2):
        raise ParameterError("jump_set requires equal-length permutations")
    if len(anchors1) != len(anchors2):
        raise ParameterError("jump_set requires equal-length anchor sequences")
    n = len(p1)
    seq1, seq2 = list(p1), list(p2)
    jumps: set[int] = set()
    for m, (s1, s2) in enumerate(zip(anchors1, anchors2), 1):
        if not (1 <= s1 <= n and 1 <= s2 <= n):
            raise ParameterError(f"anchors at step {m} out of range [1, {n}]")
        k1 = seq1.index(s1) + 1
        k2 = seq2.index(s2) + 1
        if s1 != s2:
            last = len(seq1)
            if k1 == last or k2 == last or seq1[k1] != seq2[k2]:
                jumps.add(m)
        seq1.insert(k1, n + m)
        seq2.insert(k2, n + m)
    return jumps


# ---------------------------------------------------------------------------
# error channels

def _resolve_rng(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def channel_cayley(p: Sequence[int], t: int, seed) -> Perm:
    """Apply t uniformly random segment swaps; the result is within distance t."""
    if t < 0:
        raise ParameterError("number of transpositions must be >= 0")
    rng = _resolve_rng(seed)
    out = tuple(p)
    n = len(out)
    for _ in range(t):
        out = compose(out, random_generalized_transposition(n, rng))
    return out


def channel_block(p: Sequence[int], d: int, seed) -> Perm:
    """Cut p into d+1 random blocks and reorder them by a random minimal permutation.

    Guarantees block_distance(p, result) <= d.  The block-level order is
    rejection-sampled until minimal, which keeps the construction exact; for
    the small d used in practice the acceptance rate is high.
    """
    n = len(p)
    if not (0 <= d < n):
        raise ParameterError(f"block budget must satisfy 0 <= d < {n}, got {d}")
    if d == 0:
        return tuple(p)
    rng = _resolve_rng(seed)
    cuts = sorted(rng.sample(range(1, n), d))
    bounds = [0] + cuts + [n]
    blocks = [tuple(p[a:b]) for a, b in zip(bounds, bounds[1:])]
    while True:
        order = list(range(1, d + 2))
        rng.shuffle(order)
        if is_minimal(order):
            break
    return tuple(x for i in order for x in blocks[i - 1])


# ---------------------------------------------------------------------------
# serialization

def permutation_to_json(p: Sequence[int]) -> str:
    return json.dumps(list(p))


def permutation_from_json(text: str) -> Perm:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise ParameterError("expected a JSON array of integers")
    return check_permutation(data)


def random_permutation(n: int, rng: random.Random) -> Perm:
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return tuple(values)
