"""Prime-field and polynomial arithmetic for syndrome encoding and decoding.

Field elements are plain Python ints reduced into [0, q) with q prime; the
modulus travels explicitly with every value that needs it.  Polynomials over
F_q are immutable coefficient tuples in ascending degree order with no
trailing zeros, wrapped in the small Poly class below.  Degrees stay tiny in
this codebase (at most N + t), so schoolbook multiplication and long division
are entirely adequate.

Root finding is exhaustive evaluation over the whole field: the moduli in
play satisfy q < 2 N^2, so a vectorized scan of all q points is cheap and
needs no factorization machinery.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import ParameterError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Horner scans over fields this large go through numpy; above the int64-safe
# ceiling ((q-1)^2 + q must not overflow) they fall back to plain Python.
_NUMPY_SCAN_MIN_Q = 512
_NUMPY_SCAN_MAX_Q = 1 << 31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime >= n."""
    c = max(n, 2)
    while not is_prime(c):
        c += 1
    return c


def smallest_field_prime(n: int, mode: str = "compact") -> int:
    """Smallest prime large enough for a pair labeling of permutations on [n].

    compact mode needs q >= n^2 - n (one label per ordered pair of distinct
    values); paper-compat mode needs q >= n^2 - 1 so the base-n pair encoding
    never wraps.  Bertrand's postulate keeps the result below 2(n^2 - n).
    """
    if n < 2:
        raise ParameterError("need n >= 2 to label ordered pairs")
    if mode == "compact":
        lo = n * n - n
    elif mode == "paper":
        lo = n * n - 1
    else:
        raise ParameterError(f"unknown labeling mode {mode!r}")
    q = next_prime(lo)
    assert q < 2 * (n * n - n) or n < 4
    return q


def inv_mod(a: int, q: int) -> int:
    a %= q
    if a == 0:
        raise ZeroDivisionError("no inverse of 0")
    return pow(a, -1, q)


class Poly:
    """Immutable dense polynomial over F_q.

    coeffs holds ascending-degree coefficients in [0, q) with no trailing
    zeros; the zero polynomial has an empty tuple and degree -1.
    """

    __slots__ = ("coeffs", "q")

    def __init__(self, coeffs: Iterable[int], q: int):
        cs = [c % q for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.q = q

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, q: int) -> "Poly":
        return cls((), q)

    @classmethod
    def one(cls, q: int) -> "Poly":
        return cls((1,), q)

    @classmethod
    def x(cls, q: int) -> "Poly":
        return cls((0, 1), q)

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.q == other.q
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.q))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)}, q={self.q})"

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- arithmetic --------------------------------------------------------

    def _check_field(self, other: "Poly") -> None:
        if self.q != other.q:
            raise ParameterError("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            (self.coefficient(i) + other.coefficient(i) for i in range(n)), self.q
        )

    def __sub__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            (self.coefficient(i) - other.coefficient(i) for i in range(n)), self.q
        )

    def __mul__(self, other: "Poly") -> "Poly":
        self._check_field(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.q)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % self.q
        return Poly(out, self.q)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = self.q
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead_inv = inv_mod(other.coeffs[-1], q)
        d = other.degree
        for k in range(len(rem) - 1, d - 1, -1):
            factor = rem[k] * lead_inv % q
            if factor == 0:
                continue
            quo[k - d] = factor
            for j, b in enumerate(other.coeffs):
                rem[k - d + j] = (rem[k - d + j] - factor * b) % q
        return Poly(quo, q), Poly(rem, q)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        quo, rem = divmod(self, other)
        if not rem.is_zero():
            raise ParameterError("division was expected to be exact")
        return quo

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        inv = inv_mod(self.coeffs[-1], self.q)
        return Poly((c * inv for c in self.coeffs), self.q)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.q
        return acc


def char_polynomial(values: Iterable[int], q: int) -> Poly:
    """The monic product of (X + b) over the given nonempty set of values."""
    vals = list(values)
    if not vals:
        raise ParameterError("char_polynomial needs a nonempty set")
    out = Poly.one(q)
    for b in vals:
        out = out * Poly((b, 1), q)
    return out


def power_sums(values: Iterable[int], count: int, q: int) -> tuple[int, ...]:
    """The first `count` power sums of the values, reduced mod q."""
    sums = [0] * count
    for v in values:
        p = v % q
        base = p
        for i in range(count):
            sums[i] = (sums[i] + p) % q
            p = p * base % q
    return tuple(sums)


def power_sums_to_elementary(sums: Sequence[int], q: int) -> tuple[int, ...]:
    """Convert power sums to elementary symmetric functions via Newton's identities.

    Uses the recurrence a_k = k^{-1} (a_{k-1} s_1 - a_{k-2} s_2 + ... +- s_k)
    with a_0 = 1, which is a bijection as long as 1..len(sums) are invertible
    mod q.
    """
    m = len(sums)
    if q <= m:
        raise ParameterError(f"need q > {m} so Newton's identities are invertible")
    elem = [1]
    for k in range(1, m + 1):
        acc = 0
        for i in range(1, k + 1):
            term = elem[k - i] * sums[i - 1] % q
            acc = (acc + term) if i % 2 == 1 else (acc - term)
        elem.append(acc % q * inv_mod(k, q) % q)
    return tuple(elem[1:])


def elementary_symmetric(values: Iterable[int], count: int, q: int) -> tuple[int, ...]:
    """First `count` elementary symmetric functions, by direct expansion."""
    poly = char_polynomial(values, q)
    n = poly.degree
    return tuple(poly.coefficient(n - i) for i in range(1, count + 1))


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise ParameterError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def find_roots(f: Poly) -> set[int]:
    """All roots of f in F_q, found by evaluating f at every field element."""
    if f.is_zero():
        raise ParameterError("the zero polynomial vanishes everywhere")
    if f.degree == 0:
        return set()
    q = f.q
    if _NUMPY_SCAN_MIN_Q <= q < _NUMPY_SCAN_MAX_Q:
        xs = np.arange(q, dtype=np.int64)
        acc = np.zeros(q, dtype=np.int64)
        for c in reversed(f.coeffs):
            acc *= xs
            acc += c
            acc %= q
        return set(int(r) for r in np.nonzero(acc == 0)[0])
    return {x for x in range(q) if f(x) == 0}


def root_multiplicities(f: Poly) -> dict[int, int]:
    """Roots of f with multiplicities, by repeated deflation."""
    out: dict[int, int] = {}
    rest = f
    for r in sorted(find_roots(f)):
        factor = Poly((-r, 1), f.q)
        count = 0
        while True:
            quo, rem = divmod(rest, factor)
            if not rem.is_zero():
                break
            rest = quo
            count += 1
        out[r] = count
    return out


def linear_solve(
    rows: Sequence[Sequence[int]], rhs: Sequence[int], q: int
) -> Optional[list[int]]:
    """Solve the linear system over F_q; None when it is inconsistent.

    Gaussian elimination with the first nonzero pivot in each column; free
    variables are set to zero, so a consistent system always yields one
    concrete solution.  The system may be rectangular.
    """
    if len(rows) != len(rhs):
        raise ParameterError("matrix and right-hand side sizes disagree")
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [[v % q for v in row] + [b % q] for row, b in zip(rows, rhs)]
    if any(len(row) != n + 1 for row in a):
        raise ParameterError("ragged matrix")

    pivot_cols: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = inv_mod(a[r][col], q)
        a[r] = [v * inv % q for v in a[r]]
        for i in range(m):
            if i != r and a[i][col]:
                factor = a[i][col]
                a[i] = [(vi - factor * vr) % q for vi, vr in zip(a[i], a[r])]
        pivot_cols.append(col)
        r += 1
        if r == m:
            break

    if any(all(v == 0 for v in a[i][:n]) and a[i][n] != 0 for i in range(r, m)):
        return None

    x = [0] * n
    for row, col in enumerate(pivot_cols):
        x[col] = a[row][n]
    return x
