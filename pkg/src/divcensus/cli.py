"""Command-line surface: census, table, sample, verify, counterexamples.

Data goes to stdout as JSON-lines or RFC-4180-style CSV; logging goes to
stderr.  Exit codes: 0 success, 1 verification mismatch, 2 argument error,
3 resource refusal.
"""

import argparse
import csv
import json
import logging
import math
import os
import sys
from decimal import Decimal, InvalidOperation

from . import asymptotics, census, sampler
from .config import Config, ResourceLimitError

log = logging.getLogger("divcensus")

CENSUS_FIELDS = ["N", "A", "B", "C", "S", "method"]
RATIO_FIELDS = ["N", "ratio", "theorem1_norm", "ramanujan_norm", "a_norm", "lemma_norm"]
SAMPLE_FIELDS = ["N", "trials", "successes", "p_hat", "std_err", "seed"]
COUNTEREXAMPLE_FIELDS = ["a", "b", "r"]

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def parse_count(text: str) -> int:
    """Exact integer from decimal or scientific notation ('10000000', '1e7')."""
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise ValueError(f"not a number: {text!r}") from None
    if value != value.to_integral_value():
        raise ValueError(f"expected an integer, got {text!r}")
    return int(value)


def _round_real(x: float) -> float:
    """Round to 12 significant digits, the serialization precision for reals."""
    if not math.isfinite(x):
        return x
    return float(f"{x:.12g}")


def census_record(res: census.CensusResult) -> dict:
    return {
        "N": res.N,
        "A": res.a_count,
        "B": res.b_count,
        "C": res.c_count,
        "S": res.s_count,
        "method": res.method,
    }


def ratio_record(pt: asymptotics.RatioPoint) -> dict:
    return {
        "N": pt.N,
        "ratio": _round_real(pt.ratio),
        "theorem1_norm": _round_real(pt.theorem1_norm),
        "ramanujan_norm": _round_real(pt.ramanujan_norm),
        "a_norm": _round_real(pt.a_norm),
        "lemma_norm": _round_real(pt.lemma_norm),
    }


def sample_record(est: sampler.SampleEstimate) -> dict:
    return {
        "N": est.N,
        "trials": est.trials,
        "successes": est.successes,
        "p_hat": _round_real(est.p_hat),
        "std_err": _round_real(est.std_err),
        "seed": est.seed,
    }


def counterexample_record(cx: census.Counterexample) -> dict:
    return {"a": cx.a, "b": cx.b, "r": cx.r}


def emit_records(fields: list[str], records, fmt: str, stream=None) -> None:
    """Write records to `stream`; the CSV header is written even when empty."""
    out = sys.stdout if stream is None else stream
    if fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=fields)
        writer.writeheader()
        for rec in records:
            writer.writerow(rec)
    else:
        for rec in records:
            out.write(json.dumps(rec) + "\n")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_census(args, cfg: Config) -> int:
    n = args.n
    if args.method == "brute":
        result = census.brute_force_census(n, oracle_ceiling=cfg.oracle_ceiling)
    else:
        result = census.fast_census(n, segment_size=cfg.segment_size, threads=cfg.threads)
    emit_records(CENSUS_FIELDS, [census_record(result)], args.format)
    return EXIT_OK


def geometric_grid(start: int, stop: int, points: int) -> list[int]:
    """Geometrically spaced integers from start to stop, deduplicated."""
    if start < 2 or stop <= start:
        raise ValueError(f"need 2 <= start < stop, got start={start} stop={stop}")
    if points < 2:
        raise ValueError(f"points must be >= 2, got {points}")
    step = (math.log(stop) - math.log(start)) / (points - 1)
    grid = [round(math.exp(math.log(start) + i * step)) for i in range(points)]
    grid[0], grid[-1] = start, stop
    seen = []
    for n in grid:
        if not seen or n > seen[-1]:
            seen.append(n)
    return seen


def cmd_table(args, cfg: Config) -> int:
    grid = geometric_grid(args.start, args.stop, args.points)
    points = asymptotics.ratio_table(grid, segment_size=cfg.segment_size, threads=cfg.threads)
    emit_records(RATIO_FIELDS, (ratio_record(p) for p in points), args.format)
    return EXIT_OK


def cmd_sample(args, cfg: Config) -> int:
    seed = args.seed
    if seed is None:
        seed = int.from_bytes(os.urandom(8), "big")
        log.info("no --seed given; drew %d from system entropy", seed)
    estimate = sampler.sample_triples(args.n, args.trials, seed, threads=cfg.threads)
    emit_records(SAMPLE_FIELDS, [sample_record(estimate)], args.format)
    return EXIT_OK


def cmd_counterexamples(args, cfg: Config) -> int:
    found = census.list_counterexamples(args.n, limit=args.limit)
    emit_records(
        COUNTEREXAMPLE_FIELDS, (counterexample_record(c) for c in found), args.format
    )
    return EXIT_OK


def cmd_verify(args, cfg: Config) -> int:
    """Fast path vs definitional brute force on every N <= max_n."""
    max_n = args.max_n
    if max_n < 1:
        raise ValueError(f"--max-n must be >= 1, got {max_n}")
    inject = getattr(args, "inject_mismatch_at", None)
    checked = 0
    for oracle in census.brute_force_census_range(max_n, oracle_ceiling=cfg.oracle_ceiling):
        n = oracle.N
        fast = census.fast_census(n, segment_size=cfg.segment_size, threads=cfg.threads)
        if inject is not None and n == inject:
            fast = census.CensusResult(
                N=n,
                b_count=fast.b_count + 1,
                a_count=fast.a_count,
                c_count=fast.c_count,
                s_count=fast.s_count,
                method="fast",
            )
        for label, got, want in (
            ("B", fast.b_count, oracle.b_count),
            ("A", fast.a_count, oracle.a_count),
            ("C", fast.c_count, oracle.c_count),
            ("S", fast.s_count, oracle.s_count),
        ):
            if got != want:
                print(f"mismatch at N={n}: {label} fast={got} brute={want}")
                return EXIT_MISMATCH
        if oracle.a_count != 2 * oracle.s_count - oracle.c_count:
            print(
                f"mismatch at N={n}: identity A=2S-C fails on brute counts "
                f"A={oracle.a_count} S={oracle.s_count} C={oracle.c_count}"
            )
            return EXIT_MISMATCH
        checked += 1
        if n % 500 == 0:
            log.info("verified through N=%d", n)
    print(f"verify: fast path matches brute force (A, B, C, S and A=2S-C) for all N <= {checked}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on its own errors, which matches the exit-code contract
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="divcensus",
        description=(
            "Exact counts of triples (a, b, r) with r | ab and ab <= N: all of "
            "them (B), those where r | a or r | b (A), those where r divides "
            "both (C), plus convergence tables against their asymptotics and "
            "seeded sampling of the failure rate. Logs are natural throughout."
        ),
    )
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    knobs = parser.add_argument_group("knobs (override DIVCENSUS_* environment)")
    knobs.add_argument("--oracle-ceiling", type=int, default=None, metavar="N")
    knobs.add_argument("--segment-size", type=int, default=None, metavar="LEN")
    knobs.add_argument("--threads", type=int, default=None, metavar="K")

    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=["jsonl", "csv"],
            default="jsonl",
            help="output format (default: jsonl, one JSON object per line)",
        )

    p = sub.add_parser("census", help="exact A, B, C, S at one N")
    p.add_argument("--n", type=parse_count, required=True, help="bound N (scientific ok: 1e7)")
    p.add_argument("--method", choices=["brute", "fast"], default="fast")
    add_format(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("table", help="convergence table on a geometric grid of N")
    p.add_argument("--start", type=parse_count, required=True)
    p.add_argument("--stop", type=parse_count, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--spacing", choices=["geometric"], default="geometric")
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sample", help="seeded Monte Carlo estimate of A(N)/B(N)")
    p.add_argument("--n", type=parse_count, required=True)
    p.add_argument("--trials", type=parse_count, required=True)
    p.add_argument("--seed", type=int, default=None, help="64-bit seed; drawn from entropy if absent")
    add_format(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="check the fast path against brute force")
    p.add_argument("--max-n", type=parse_count, default=2000)
    p.add_argument("--inject-mismatch-at", type=int, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexamples", help="triples with r | ab but r dividing neither factor")
    p.add_argument("--n", type=parse_count, required=True)
    p.add_argument("--limit", type=int, default=10)
    add_format(p)
    p.set_defaults(func=cmd_counterexamples)

    return parser


def resolve_config(args) -> Config:
    cfg = Config.from_env()
    overrides = {}
    if args.oracle_ceiling is not None:
        overrides["oracle_ceiling"] = args.oracle_ceiling
    if args.segment_size is not None:
        overrides["segment_size"] = args.segment_size
    if args.threads is not None:
        overrides["threads"] = args.threads
    if overrides:
        cfg = Config(
            oracle_ceiling=overrides.get("oracle_ceiling", cfg.oracle_ceiling),
            segment_size=overrides.get("segment_size", cfg.segment_size),
            threads=overrides.get("threads", cfg.threads),
        )
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
    )
    try:
        cfg = resolve_config(args)
        return args.func(args, cfg)
    except ResourceLimitError as exc:
        print(f"divcensus: resource refusal: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"divcensus: invalid argument: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
