"""Command-line entry point: ``symgen <subcommand> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or a
guard violation. The default seed can be set with ``SYMGEN_SEED``.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import reports
from .characters import character_table_csv
from .counting import (
    count_bounded_cycles,
    count_nu_roots,
    dixon_series_exact,
    frak_C_size,
    frak_M_size,
    k_of_N,
)
from .experiments import ExperimentConfig, estimate_p, second_moment_run, word_experiment
from .verify import SUITES, run_suite

SEED_ENV = "SYMGEN_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}")


def _n_at_least_2(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("n must be >= 2")
    return n


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symgen", description="Generation of the symmetric group: exact checks and experiments.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def seeded(sp):
        sp.add_argument("--seed", type=int, default=None, help=f"default from ${SEED_ENV}, else 0")
        sp.add_argument("--trials", type=_positive, default=1000)
        sp.add_argument("--workers", type=_positive, default=1)
        sp.add_argument("--json", dest="json_out", metavar="PATH", help="write the report here instead of stdout")

    e = sub.add_parser("estimate", help="Monte Carlo estimate of the generation probability")
    e.add_argument("--n", type=_n_at_least_2, required=True)
    e.add_argument("--generators", type=int, choices=(2, 3), default=2)
    e.add_argument("--group", choices=("S", "A"), default="S")
    e.add_argument("--mode", choices=("sample", "enumerate"), default="sample")
    seeded(e)

    v = sub.add_parser("verify", help="run exact verification suites (JSON lines)")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--nmax", type=_positive, default=None,
                   help="largest degree per suite (defaults: chars 10, lambda 40, counting 12; correlation runs at n=9)")

    c = sub.add_parser("chars", help="character table of S_n as CSV")
    c.add_argument("--n", type=_positive, required=True)
    c.add_argument("--out", metavar="PATH")

    k = sub.add_parser("count", help="exact counts, printed as decimal strings")
    k.add_argument("--quantity", required=True, choices=("frakC", "frakM", "nuroots", "bounded", "kN", "series"))
    k.add_argument("--n", type=int, help="degree (frakC, frakM, nuroots, kN, series)")
    k.add_argument("--nu", type=_positive, help="exponent (nuroots)")
    k.add_argument("--m", type=int, help="degree (bounded)")
    k.add_argument("--r", type=_positive, help="cycle-length cap (bounded)")
    k.add_argument("--N", type=_positive, help="power range (kN)")
    k.add_argument("--order", type=int, default=6, help="series order")
    k.add_argument("--generators", type=int, choices=(2, 3), default=2)

    s = sub.add_parser("second-moment", help="distribution of X over pi sigma^i, 0 <= i < N")
    s.add_argument("--n", type=_n_at_least_2, required=True)
    s.add_argument("--N", type=_positive, required=True)
    s.add_argument("--tsv", metavar="PATH", help="histogram of X as two-column TSV")
    seeded(s)

    w = sub.add_parser("words", help="reduced words of length <= N evaluated at random pairs")
    w.add_argument("--n", type=_n_at_least_2, required=True)
    w.add_argument("--N", type=int, required=True, help="maximum word length")
    w.add_argument("--tsv", metavar="PATH", help="identity frequency by word length as two-column TSV")
    seeded(w)
    return p


def _write(path, text: str, out) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def _emit_report(args, subcommand: str, report: dict, out, extra_outputs=()) -> None:
    outputs = [p for p in (args.json_out, *extra_outputs) if p]
    man = reports.manifest(subcommand, report["config"], report.get("seed"), outputs)
    _write(args.json_out, reports.dumps(reports.with_manifest(report, man), indent=2) + "\n", out)


def _write_tsv(path: str, rows) -> None:
    Path(path).write_text("".join(f"{a}\t{b}\n" for a, b in rows), encoding="utf-8")


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"count --quantity {args.quantity} requires {' '.join(missing)}")


def _count(args):
    q = args.quantity
    if q == "frakC":
        _need(args, "n")
        return frak_C_size(args.n)
    if q == "frakM":
        _need(args, "n")
        return frak_M_size(args.n)
    if q == "nuroots":
        _need(args, "n", "nu")
        return count_nu_roots(args.n, args.nu)
    if q == "bounded":
        _need(args, "m", "r")
        return count_bounded_cycles(args.m, args.r)
    if q == "kN":
        _need(args, "n", "N")
        return k_of_N(args.n, args.N)
    _need(args, "n")
    return dixon_series_exact(args.n, args.order, args.generators)


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "verify":
        failed = False
        for rec in run_suite(args.suite, args.nmax):
            out.write(reports.dumps(rec) + "\n")
            out.flush()
            failed |= not rec["pass"] and not rec["report_only"]
        return 1 if failed else 0
    if cmd == "chars":
        _write(args.out, character_table_csv(args.n), out)
        return 0
    if cmd == "count":
        value = _count(args)
        out.write(reports.tag(value)["value"] + "\n")
        return 0

    seed = args.seed if args.seed is not None else _default_seed()
    if cmd == "estimate":
        cfg = ExperimentConfig(n=args.n, trials=args.trials, seed=seed, generators=args.generators,
                               group=args.group, workers=args.workers)
        _emit_report(args, cmd, estimate_p(cfg, mode=args.mode), out)
        return 0
    if cmd == "second-moment":
        cfg = ExperimentConfig(n=args.n, trials=args.trials, seed=seed, N=args.N, workers=args.workers)
        report = second_moment_run(cfg)
        if args.tsv:
            _write_tsv(args.tsv, report["results"]["histogram"].items())
        _emit_report(args, cmd, report, out, (args.tsv,))
        return 0
    if cmd == "words":
        cfg = ExperimentConfig(n=args.n, trials=args.trials, seed=seed, word_length=args.N, workers=args.workers)
        report = word_experiment(cfg)
        if args.tsv:
            _write_tsv(args.tsv, enumerate(report["results"]["identity_frequency_by_length"]))
        _emit_report(args, cmd, report, out, (args.tsv,))
        return 0
    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return _run(args, out)
    except UsageError as exc:
        print(f"symgen: usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # guard violations and invalid parameters from the library
        print(f"symgen: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
