import random

import pytest

from permcode import (
    ParameterError,
    Poly,
    char_polynomial,
    elementary_symmetric,
    find_roots,
    is_prime,
    linear_solve,
    next_prime,
    poly_gcd,
    power_sums,
    power_sums_to_elementary,
    root_multiplicities,
    smallest_field_prime,
)

Q = 97

# Values from the worked length-10 decoding example.
ALPHA = (16, 0, 86, 44, 61, 9, 49)
ELEM_TARGET = (16, 31, 0, 42, 54, 94, 59)
RECEIVED_SET = {75, 58, 89, 94, 40, 1, 13, 36, 62}
ELEM_RECEIVED = (80, 64, 83, 10, 72, 22, 26)


class TestPrimes:
    def test_is_prime_small(self):
        primes_below_40 = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}
        assert {n for n in range(40) if is_prime(n)} == primes_below_40

    def test_next_prime(self):
        assert next_prime(90) == 97
        assert next_prime(97) == 97

    @pytest.mark.parametrize(
        "n,mode,expected",
        [
            (10, "compact", 97),
            (10, "paper", 101),
            (50, "compact", 2459),
            (50, "paper", 2503),
            (6, "compact", 31),
            (871, "compact", 757793),
        ],
    )
    def test_smallest_field_prime(self, n, mode, expected):
        assert smallest_field_prime(n, mode) == expected

    def test_bertrand_headroom(self):
        for n in (4, 5, 10, 31, 50, 200, 871):
            for mode in ("compact", "paper"):
                assert smallest_field_prime(n, mode) < 2 * (n * n - n)


class TestCharPolynomial:
    def test_known_factorization(self):
        assert char_polynomial({1, 94}, Q) == Poly((94, 95, 1), Q)

    def test_single_zero(self):
        assert char_polynomial({0}, Q) == Poly((0, 1), Q)

    def test_roots_round_trip(self):
        rng = random.Random(20)
        for _ in range(30):
            values = set(rng.sample(range(Q), 5))
            poly = char_polynomial(values, Q)
            assert find_roots(poly) == {(-b) % Q for b in values}

    def test_rejects_empty(self):
        with pytest.raises(ParameterError):
            char_polynomial(set(), Q)


class TestNewtonIdentities:
    def test_decoding_example_target(self):
        assert power_sums_to_elementary(ALPHA, Q) == ELEM_TARGET

    def test_first_identity(self):
        rng = random.Random(21)
        for _ in range(20):
            sums = tuple(rng.randrange(Q) for _ in range(5))
            assert power_sums_to_elementary(sums, Q)[0] == sums[0]

    def test_decoding_example_received(self):
        sums = power_sums(RECEIVED_SET, 7, Q)
        assert power_sums_to_elementary(sums, Q) == ELEM_RECEIVED

    def test_matches_direct_expansion(self):
        rng = random.Random(22)
        for _ in range(50):
            size = rng.randint(1, 9)
            values = set(rng.sample(range(Q), size))
            count = min(size, 7)
            via_newton = power_sums_to_elementary(power_sums(values, count, Q), Q)
            assert via_newton == elementary_symmetric(values, count, Q)

    def test_modulus_too_small(self):
        with pytest.raises(ParameterError):
            power_sums_to_elementary((1, 2, 3, 4, 5, 6, 7), 7)


class TestPolyGcd:
    def test_coprime_pair_from_example(self):
        h1 = Poly((94, 95, 1), Q)
        h2 = Poly((71, 31, 1), Q)
        assert poly_gcd(h1, h2) == Poly.one(Q)

    def test_gcd_with_self_is_monic(self):
        f = Poly((3, 0, 2), Q)
        assert poly_gcd(f, f) == f.monic()

    def test_common_linear_factor(self):
        f = char_polynomial({3, 5}, Q)
        g = char_polynomial({5, 7}, Q)
        assert poly_gcd(f, g) == Poly((5, 1), Q)

    def test_both_zero_rejected(self):
        with pytest.raises(ParameterError):
            poly_gcd(Poly.zero(Q), Poly.zero(Q))


class TestFindRoots:
    def test_example_quadratics(self):
        assert find_roots(Poly((94, 95, 1), Q)) == {96, 3}
        roots = find_roots(Poly((71, 31, 1), Q))
        assert {(-r) % Q for r in roots} == {24, 7}

    def test_x(self):
        assert find_roots(Poly.x(Q)) == {0}

    def test_multiplicities(self):
        f = Poly((1, 1), Q) * Poly((1, 1), Q) * Poly((2, 1), Q)
        assert root_multiplicities(f) == {96: 2, 95: 1}

    def test_large_field_scan(self):
        q = 757793
        f = char_polynomial({12345, 654321}, q)
        assert find_roots(f) == {(q - 12345), (q - 654321)}

    def test_degree_zero_has_no_roots(self):
        assert find_roots(Poly((5,), Q)) == set()

    def test_zero_poly_rejected(self):
        with pytest.raises(ParameterError):
            find_roots(Poly.zero(Q))


class TestPolyArithmetic:
    def test_mul_div_round_trip(self):
        rng = random.Random(23)
        for _ in range(100):
            f = Poly([rng.randrange(Q) for _ in range(rng.randint(1, 6))], Q)
            g = Poly([rng.randrange(Q) for _ in range(rng.randint(1, 6))], Q)
            if g.is_zero():
                continue
            quo, rem = divmod(f * g, g)
            assert rem.is_zero()
            assert quo == f

    def test_eval_matches_coefficients(self):
        f = Poly((94, 95, 1), Q)
        assert f(1) == (1 + 95 + 94) % Q
        assert f(96) == 0

    def test_field_axioms_exhaustive(self):
        for a in range(1, Q):
            assert a * pow(a, -1, Q) % Q == 1


class TestLinearSolve:
    def test_decoding_example_system(self):
        def elem_at(elem, k):
            if k < 0:
                return 0
            return 1 if k == 0 else elem[k - 1]

        rows = []
        for i in range(1, 8):
            row = [elem_at(ELEM_TARGET, i - j) for j in (1, 2)]
            row += [elem_at(ELEM_RECEIVED, i - j) for j in (1, 2)]
            rows.append(row)
        rhs = [(b - a) % Q for a, b in zip(ELEM_TARGET, ELEM_RECEIVED)]

        solution = linear_solve(rows, rhs, Q)
        assert solution is not None
        for row, b in zip(rows, rhs):
            assert sum(r * c for r, c in zip(row, solution)) % Q == b
        # The example's published solution also satisfies the system.
        for row, b in zip(rows, rhs):
            assert sum(r * c for r, c in zip(row, (95, 94, 66, 26))) % Q == b

    def test_identity_system(self):
        rows = [[1, 0], [0, 1], [0, 0]]
        assert linear_solve(rows, [0, 0, 0], Q) == [0, 0]

    def test_random_consistent_systems(self):
        rng = random.Random(24)
        for _ in range(200):
            m, n = rng.randint(1, 6), rng.randint(1, 5)
            rows = [[rng.randrange(Q) for _ in range(n)] for _ in range(m)]
            x = [rng.randrange(Q) for _ in range(n)]
            rhs = [sum(r * v for r, v in zip(row, x)) % Q for row in rows]
            solution = linear_solve(rows, rhs, Q)
            assert solution is not None
            for row, b in zip(rows, rhs):
                assert sum(r * c for r, c in zip(row, solution)) % Q == b

    def test_inconsistent_system(self):
        assert linear_solve([[1, 1], [1, 1]], [0, 1], Q) is None
        assert linear_solve([[0, 0]], [5], Q) is None
