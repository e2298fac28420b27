"""Command-line front end: encode/decode/simulate/analyze workflows.

Permutations and syndromes travel as JSON arrays of decimal integers on
stdin/stdout; diagnostics go to stderr.  Every command accepts --json for a
structured record instead of the default plain output.  Exit codes: 0 on
success, 1 on usage errors, 2 on decode failure, 3 on parameter-constraint
violations.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from typing import Optional, Sequence

from . import analysis, coset, systematic
from .errors import DecodeFailure, ParameterError
from .perms import (
    channel_block,
    channel_cayley,
    permutation_from_json,
    random_permutation,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DECODE_FAILURE = 2
EXIT_PARAMETER = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(payload, args, plain: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(plain)


def _read_stdin_permutation():
    return permutation_from_json(sys.stdin.read())


def _parse_alpha(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ParameterError(f"--alpha must be comma-separated integers: {exc}") from exc


def _coset_params(args) -> coset.CodeParams:
    t = args.t
    if getattr(args, "cayley_errors", None) is not None:
        if t is not None:
            raise ParameterError("give either --t or --cayley-errors, not both")
        t = 4 * args.cayley_errors
    if t is None:
        raise ParameterError("an error budget is required (--t or --cayley-errors)")
    return coset.CodeParams(args.n, t, args.q, args.labeling)


def _aux_params(args) -> systematic.AuxParams:
    t = args.t
    k = args.k
    if getattr(args, "cayley_errors", None) is not None:
        if t is not None:
            raise ParameterError("give either --t or --cayley-errors, not both")
        t = 4 * args.cayley_errors
        if k is None:
            k = 28 * t
        if not args.large:
            raise ParameterError(
                f"generalized Cayley mode needs n > {(28 * t) ** 2}; "
                "pass --large to confirm"
            )
        print(
            f"warning: cayley mode instantiates the block code with t={t}, k={k}",
            file=sys.stderr,
        )
    if t is None:
        raise ParameterError("an error budget is required (--t or --cayley-errors)")
    return systematic.AuxParams(
        args.n, t, k, args.q, args.labeling, strict=not args.relaxed
    )


# ---------------------------------------------------------------------------
# coset commands

def _cmd_coset_encode(args) -> int:
    params = _coset_params(args)
    perm = _read_stdin_permutation()
    alpha = coset.syndrome(perm, params)
    _emit(
        {"alpha": list(alpha), "n": params.n, "t": params.t, "q": params.q,
         "labeling": params.labeling_mode},
        args,
        json.dumps(list(alpha)),
    )
    return EXIT_OK


def _cmd_coset_decode(args) -> int:
    params = _coset_params(args)
    alpha = _parse_alpha(args.alpha)
    perm = _read_stdin_permutation()
    decoded = coset.decode(perm, alpha, params)
    _emit(
        {"permutation": list(decoded), "n": params.n, "t": params.t, "q": params.q},
        args,
        json.dumps(list(decoded)),
    )
    return EXIT_OK


def _cmd_coset_bucket(args) -> int:
    params = _coset_params(args)
    buckets, best = coset.enumerate_codebook(params, args.cap)
    best_size = len(buckets[best])
    pigeonhole = -(-math.factorial(params.n) // params.q ** params.syndrome_length)
    payload = {
        "n": params.n, "t": params.t, "q": params.q,
        "labeling": params.labeling_mode,
        "buckets": len(buckets),
        "max_bucket_size": best_size,
        "alpha_max": list(best),
        "pigeonhole_lower_bound": pigeonhole,
    }
    plain = (
        f"n={params.n} t={params.t} q={params.q} labeling={params.labeling_mode}\n"
        f"buckets={len(buckets)} max_bucket_size={best_size} "
        f"pigeonhole_lower_bound={pigeonhole}\n"
        f"alpha_max={json.dumps(list(best))}"
    )
    _emit(payload, args, plain)
    return EXIT_OK


# ---------------------------------------------------------------------------
# systematic commands

def _cmd_sys_encode(args) -> int:
    params = _aux_params(args)
    perm = _read_stdin_permutation()
    codeword = systematic.encode(perm, params)
    _emit(
        {"codeword": list(codeword), "n": params.n, "t": params.t,
         "k": params.k, "q": params.q},
        args,
        json.dumps(list(codeword)),
    )
    return EXIT_OK


def _cmd_sys_decode(args) -> int:
    params = _aux_params(args)
    perm = _read_stdin_permutation()
    decoded = systematic.decode(perm, params, method=args.method)
    _emit(
        {"permutation": list(decoded), "n": params.n, "t": params.t,
         "k": params.k, "q": params.q},
        args,
        json.dumps(list(decoded)),
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# simulation

def simulate(code: str, params, channel: str, errors: int, trials: int, seed: int) -> dict:
    """Run encode -> channel -> decode round trips; deterministic in the seed."""
    base = random.Random(seed)
    trial_seeds = [base.getrandbits(64) for _ in range(trials)]
    successes = 0
    failures: dict[str, int] = {}
    start = time.perf_counter()
    for trial_seed in trial_seeds:
        rng = random.Random(trial_seed)
        if code == "coset":
            message = random_permutation(params.n, rng)
            alpha = coset.syndrome(message, params)
            sent = message
        else:
            message = random_permutation(params.n, rng)
            sent = systematic.encode(message, params)
        if channel == "block":
            received = channel_block(sent, errors, rng)
        else:
            received = channel_cayley(sent, errors, rng)
        try:
            if code == "coset":
                decoded = coset.decode(received, alpha, params)
            else:
                decoded = systematic.decode(received, params)
        except DecodeFailure as failure:
            failures[failure.reason] = failures.get(failure.reason, 0) + 1
            continue
        if decoded == message:
            successes += 1
        else:
            failures["wrong-result"] = failures.get("wrong-result", 0) + 1
    elapsed = time.perf_counter() - start
    summary = {
        "code": code,
        "n": params.n,
        "t": params.t,
        "q": params.q,
        "labeling": params.labeling_mode,
        "channel": channel,
        "errors": errors,
        "trials": trials,
        "seed": seed,
        "successes": successes,
        "failures": failures,
        "elapsed_s": round(elapsed, 3),
    }
    if code == "sys":
        summary["k"] = params.k
    return summary


def _cmd_simulate(args, code: str) -> int:
    params = _coset_params(args) if code == "coset" else _aux_params(args)
    errors = args.errors if args.errors is not None else params.t
    summary = simulate(code, params, args.channel, errors, args.trials, args.seed)
    plain = (
        f"{summary['successes']}/{summary['trials']} successes "
        f"(code={code} channel={args.channel} errors={errors} seed={args.seed} "
        f"elapsed={summary['elapsed_s']}s)"
    )
    for reason, count in sorted(summary["failures"].items()):
        plain += f"\n  failure {reason}: {count}"
    _emit(summary, args, plain)
    return EXIT_OK


# ---------------------------------------------------------------------------
# analyze commands

def _cmd_analyze_ball(args) -> int:
    report = analysis.ball_bounds(args.n, args.t, args.metric, args.cap)
    payload = {
        "n": report.n, "t": report.t, "metric": report.metric,
        "lower": report.lower, "upper": report.upper,
        "exact": report.exact, "guaranteed": report.guaranteed,
    }
    plain = (
        f"ball({report.n}, {report.t}, {report.metric}): "
        f"bounds [{report.lower}, {report.upper}]"
    )
    if report.exact is not None:
        plain += f" exact={report.exact}"
    if not report.guaranteed:
        plain += "  (bounds not guaranteed: radius outside admissible range)"
    _emit(payload, args, plain)
    return EXIT_OK


def _cmd_analyze_rate(args) -> int:
    report = analysis.rate_bounds(args.n, args.t, args.metric)
    payload = {
        "n": report.n, "t": report.t, "metric": report.metric,
        "lower": report.lower, "upper": report.upper, "c": report.c,
    }
    plain = (
        f"rate({report.n}, {report.t}, {report.metric}): "
        f"[{report.lower:.6f}, {report.upper:.6f}] with c={report.c:.6f}"
    )
    _emit(payload, args, plain)
    return EXIT_OK


def _cmd_analyze_fm(args) -> int:
    counts = [analysis.block_weight_count(args.n, m) for m in range(args.n)]
    total = sum(counts)
    payload = {"n": args.n, "counts": counts, "total": total,
               "factorial": math.factorial(args.n)}
    lines = [f"m={m:>3}  count={c}" for m, c in enumerate(counts)]
    lines.append(f"total={total}  n!={math.factorial(args.n)}")
    _emit(payload, args, "\n".join(lines))
    return EXIT_OK


def _cmd_analyze_lcm(args) -> int:
    if args.subset:
        subsets = [tuple(int(x) for x in args.subset.split(","))]
    else:
        rng = random.Random(args.seed)
        subsets = []
        for _ in range(args.samples):
            size = rng.randint(1, args.k - 1)
            subsets.append(tuple(sorted(rng.sample(range(1, args.k + 1), size))))
    reports = [analysis.lcm_bound_check(args.n, args.k, s) for s in subsets]
    payload = {
        "n": args.n, "k": args.k,
        "checks": [
            {"subset": list(r.subset), "size": r.size, "lcm": r.lcm, "holds": r.holds}
            for r in reports
        ],
        "all_hold": all(r.holds for r in reports),
    }
    lines = [
        f"subset={list(r.subset)} M={r.size} lcm={r.lcm} holds={r.holds}"
        for r in reports
    ]
    lines.append(f"all_hold={all(r.holds for r in reports)}")
    _emit(payload, args, "\n".join(lines))
    return EXIT_OK


def _cmd_analyze_mindist(args) -> int:
    try:
        data = json.loads(sys.stdin.read())
    except json.JSONDecodeError as exc:
        raise ParameterError(f"invalid JSON codebook: {exc}") from exc
    if not isinstance(data, list):
        raise ParameterError("expected a JSON array of permutations")
    codebook = [permutation_from_json(json.dumps(p)) for p in data]
    dist = analysis.min_distance(codebook, args.metric, args.cap)
    _emit({"metric": args.metric, "size": len(codebook), "min_distance": dist},
          args, f"min_distance={dist}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring

def _add_common_code_flags(p, with_k: bool = False) -> None:
    p.add_argument("--json", action="store_true", help="structured JSON output")
    p.add_argument("--n", type=int, required=True, help="permutation length")
    p.add_argument("--t", "--block-errors", dest="t", type=int, default=None,
                   help="block error budget")
    p.add_argument("--cayley-errors", type=int, default=None,
                   help="generalized transposition budget (uses t = 4x internally)")
    p.add_argument("--q", type=int, default=None, help="field prime (default: auto)")
    p.add_argument("--labeling", choices=coset.LABELING_MODES, default="compact")
    if with_k:
        p.add_argument("--k", type=int, default=None,
                       help="number of residue blocks (default 28t)")
        p.add_argument("--relaxed", action="store_true",
                       help="skip the distance-guarantee parameter checks")
        p.add_argument("--large", action="store_true",
                       help="confirm very large cayley-mode parameters")


def _add_simulate_flags(p) -> None:
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--errors", type=int, default=None,
                   help="channel error budget (default: the code's t)")
    p.add_argument("--channel", choices=("block", "cayley"), default="block")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="permcode", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_coset = sub.add_parser("coset", help="non-systematic coset code")
    coset_sub = p_coset.add_subparsers(dest="subcommand", required=True,
                                       parser_class=_Parser)
    p = coset_sub.add_parser("encode", help="compute a permutation's syndrome")
    _add_common_code_flags(p)
    p.set_defaults(handler=_cmd_coset_encode)
    p = coset_sub.add_parser("decode", help="decode a received permutation")
    _add_common_code_flags(p)
    p.add_argument("--alpha", required=True, help="syndrome, comma-separated")
    p.set_defaults(handler=_cmd_coset_decode)
    p = coset_sub.add_parser("bucket", help="enumerate the syndrome partition of S_n")
    _add_common_code_flags(p)
    p.add_argument("--cap", type=int, default=None, help="enumeration cap override")
    p.set_defaults(handler=_cmd_coset_bucket)
    p = coset_sub.add_parser("simulate", help="seeded round-trip trials")
    _add_common_code_flags(p)
    _add_simulate_flags(p)
    p.set_defaults(handler=lambda a: _cmd_simulate(a, "coset"))

    p_sys = sub.add_parser("sys", help="systematic code")
    sys_sub = p_sys.add_subparsers(dest="subcommand", required=True,
                                   parser_class=_Parser)
    p = sys_sub.add_parser("encode", help="encode a message permutation")
    _add_common_code_flags(p, with_k=True)
    p.set_defaults(handler=_cmd_sys_encode)
    p = sys_sub.add_parser("decode", help="decode a received codeword")
    _add_common_code_flags(p, with_k=True)
    p.add_argument("--method", choices=("crt", "exhaustive"), default="crt")
    p.set_defaults(handler=_cmd_sys_decode)
    p = sys_sub.add_parser("simulate", help="seeded round-trip trials")
    _add_common_code_flags(p, with_k=True)
    _add_simulate_flags(p)
    p.set_defaults(handler=lambda a: _cmd_simulate(a, "sys"))

    p_an = sub.add_parser("analyze", help="bounds and oracles")
    an_sub = p_an.add_subparsers(dest="subcommand", required=True,
                                 parser_class=_Parser)
    p = an_sub.add_parser("ball", help="metric ball size bounds")
    p.add_argument("--json", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--metric", choices=("block", "cayley"), required=True)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(handler=_cmd_analyze_ball)
    p = an_sub.add_parser("rate", help="optimal code rate bounds")
    p.add_argument("--json", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--metric", choices=("block", "cayley"), required=True)
    p.set_defaults(handler=_cmd_analyze_rate)
    p = an_sub.add_parser("fm", help="block weight distribution")
    p.add_argument("--json", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_analyze_fm)
    p = an_sub.add_parser("lcm", help="residue moduli LCM growth check")
    p.add_argument("--json", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--subset", default=None, help="explicit subset, comma-separated")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_analyze_lcm)
    p = an_sub.add_parser("mindist", help="minimum distance of a codebook on stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--metric", choices=("block", "cayley"), default="block")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(handler=_cmd_analyze_mindist)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DecodeFailure as failure:
        print(f"decode failure: {failure}", file=sys.stderr)
        return EXIT_DECODE_FAILURE
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER


if __name__ == "__main__":
    sys.exit(main())
