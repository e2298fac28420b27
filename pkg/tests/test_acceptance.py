"""Acceptance suite: one test per release criterion, with stated budgets.

Each test prints a single PASS line with its measured runtime so a plain
``pytest -s tests/test_acceptance.py`` doubles as the acceptance report.
"""

import math
import random
import time
from itertools import permutations

from permcode import (
    AuxParams,
    CodeParams,
    block_distance,
    block_weight_count,
    block_weight_histogram,
    channel_block,
    crt_residues,
    decode_detailed,
    enumerate_codebook,
    exact_block_ball,
    exact_cayley_ball,
    exact_cayley_distance,
    hamming_set,
    lcm_bound_check,
    random_permutation,
    rate_bounds,
    recover_extension_sequence,
    syndrome_anchor_sequence,
    systematic_encode,
)
from permcode.cli import simulate
from permcode.coset import syndrome


def _finish(number: int, description: str, started: float, budget_s: float):
    elapsed = time.perf_counter() - started
    assert elapsed < budget_s, f"criterion {number} exceeded {budget_s}s ({elapsed:.1f}s)"
    print(f"ACCEPTANCE {number} PASS ({elapsed:.2f}s < {budget_s:.0f}s): {description}")


def test_criterion_1_golden_decode():
    started = time.perf_counter()
    params = CodeParams(10, 2, 97, "paper")
    alpha = (16, 0, 86, 44, 61, 9, 49)
    received = (8, 6, 9, 10, 5, 1, 2, 4, 7, 3)
    decoded, trace = decode_detailed(received, alpha, params)
    assert decoded == (2, 4, 7, 3, 5, 1, 8, 6, 9, 10)
    assert trace.target_elementary == (16, 31, 0, 42, 54, 94, 59)
    assert trace.received_labels == {75, 58, 89, 94, 40, 1, 13, 36, 62}
    assert trace.added_labels == {24, 7}
    assert trace.removed_labels == {1, 94}
    _finish(1, "golden length-10 decode with exact intermediates", started, 1.0)


def test_criterion_2_bucket_distance_exhaustive():
    started = time.perf_counter()
    params = CodeParams(6, 1, 31)
    buckets, _ = enumerate_codebook(params)
    total = 0
    for members in buckets.values():
        total += len(members)
        for i, p1 in enumerate(members):
            for p2 in members[i + 1 :]:
                assert block_distance(p1, p2) >= 3
    assert total == math.factorial(6)
    assert sum(1 for v in buckets.values() for _ in v) == 720
    _finish(2, "every length-6 syndrome bucket has pairwise distance >= 3", started, 10.0)


def test_criterion_3_metric_embedding_exhaustive():
    started = time.perf_counter()
    s5 = list(permutations(range(1, 6)))
    for p1 in s5:
        for p2 in s5:
            dg = exact_cayley_distance(p1, p2)
            db = block_distance(p1, p2)
            assert dg <= db <= 4 * dg
    _finish(3, "embedding dG <= dB <= 4 dG on all pairs of S_5", started, 30.0)


def test_criterion_4_ball_size_sandwiches():
    started = time.perf_counter()
    for n in (5, 6, 7):
        histogram = block_weight_histogram(n)
        assert histogram == [block_weight_count(n, m) for m in range(n)]
        assert sum(histogram) == math.factorial(n)
        for t in range(1, n):
            if (n - t - 1) < 0 or (n - t - 1) ** 2 < n:
                continue
            lower = math.prod(n - k for k in range(1, t + 1))
            assert lower <= exact_block_ball(n, t) <= math.prod(
                n - k for k in range(t + 1)
            )
            if 4 * t <= n - 1:
                assert lower <= exact_cayley_ball(n, t) <= math.prod(
                    n - k for k in range(4 * t + 1)
                )
    _finish(4, "enumerated ball sizes inside both bound intervals, n in 5..7", started, 120.0)


def test_criterion_5_coset_round_trips():
    started = time.perf_counter()
    block_params = CodeParams(10, 2)
    summary = simulate("coset", block_params, "block", 2, 500, seed=20240501)
    assert summary["successes"] == 500, summary
    cayley_params = CodeParams(12, 4)  # one swap costs at most 4 block errors
    summary = simulate("coset", cayley_params, "cayley", 1, 200, seed=20240502)
    assert summary["successes"] == 200, summary
    _finish(5, "coset decoder: 500/500 block trials and 200/200 swap trials", started, 60.0)


def test_criterion_6_residue_vector_distance():
    started = time.perf_counter()
    assert crt_residues((280,), 50, 7, 2503) == (25, 20, 15, 10, 5, 0, 52)
    assert crt_residues((1008,), 50, 7, 2503) == (39, 20, 1, 36, 18, 0, 39)
    rng = random.Random(20240506)
    for _ in range(1000):
        x1, x2 = rng.sample(range(2503), 2)
        b1 = crt_residues((x1,), 50, 7, 2503)
        b2 = crt_residues((x2,), 50, 7, 2503)
        assert sum(1 for a, b in zip(b1, b2) if a != b) >= 2
    _finish(6, "residue vectors match the worked values; pairwise distance >= 2", started, 30.0)


def test_criterion_7_systematic_round_trip():
    started = time.perf_counter()
    params = AuxParams(871, 1)
    assert (params.k, params.num_inserted) == (28, 56)
    summary = simulate("sys", params, "block", 1, 100, seed=20240507)
    assert summary["successes"] == 100, summary

    rng = random.Random(20240508)
    for _ in range(500):
        message = random_permutation(params.n, rng)
        alpha = syndrome(message, params.coset_params())
        sent_anchors = syndrome_anchor_sequence(alpha, params)
        codeword = systematic_encode(message, params)
        noisy = channel_block(codeword, 1, rng)
        got_anchors = recover_extension_sequence(noisy, params.n, params.num_inserted)
        assert len(hamming_set(sent_anchors, got_anchors)) <= 1
    _finish(7, "systematic code: 100/100 recoveries and anchor damage <= t", started, 120.0)


def test_criterion_8_lcm_growth():
    started = time.perf_counter()
    rng = random.Random(20240509)
    for _ in range(100):
        size = rng.randint(1, 27)
        subset = rng.sample(range(1, 29), size)
        report = lcm_bound_check(871, 28, subset)
        assert report.holds
        if 2 * report.size - 28 >= 0:  # the exact big-integer comparison
            assert report.lcm**2 > 871 ** (2 * report.size - 28)
    _finish(8, "LCM of residue moduli beats the power bound on 100 subsets", started, 30.0)


def test_criterion_9_rate_bound_consistency():
    started = time.perf_counter()
    for n in (9, 20, 50, 100, 500):
        max_t = min(int(n - math.sqrt(n) - 1), (n - 1) // 4)
        for t in range(1, max_t + 1):
            for metric in ("block", "cayley"):
                report = rate_bounds(n, t, metric)
                assert report.lower <= report.upper
    buckets, best = enumerate_codebook(CodeParams(6, 1, 31))
    best_size = len(buckets[best])
    assert best_size >= math.factorial(6) / 31**3  # pigeonhole floor
    assert best_size <= math.factorial(6) / exact_block_ball(6, 1)  # packing ceiling
    _finish(9, "rate bounds ordered on the grid; bucket size inside both bounds", started, 30.0)
