"""Command-line front end.

Exit codes: 0 success/pass, 1 check or certification failure, 2 parse or
domain error, 3 hypothesis violation, 4 window infeasible.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .core import DomainError
from .basis import WindowTooLargeError
from .partition import HypothesisViolatedError, detect_interval_families, min_t
from .config import ConfigError, PRESETS, RunConfig, load_preset
from .repcount import count_reps_digitdp, hfold_sumset_window
from .verifier import (check_lemma1, check_lemma2, removability_scan,
                       verify_minimality, verify_theorem1, verify_theorem2)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_HYPOTHESIS = 3
EXIT_WINDOW = 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="run configuration file")
    common.add_argument("--preset", choices=sorted(PRESETS),
                        help="shipped configuration (default: binary-h2)")
    p = argparse.ArgumentParser(prog="gadic",
                                description="Mixed-radix asymptotic bases: "
                                "window checks and minimality certificates")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("represent", parents=[common],
                        help="print the digit expansion of n")
    sp.add_argument("--n", required=True, type=int)

    sp = sub.add_parser("check", parents=[common], help="run one verification suite")
    sp.add_argument("which", choices=["theorem1", "theorem2", "lemma1", "lemma2"])
    sp.add_argument("--window", type=int)
    sp.add_argument("--samples", type=int)

    sp = sub.add_parser("minimality", parents=[common], help="emit witness certificates")
    sp.add_argument("--t", type=int)
    sp.add_argument("--budget", type=int, help="members to certify (K)")
    sp.add_argument("--witnesses", type=int, help="witnesses per member (W)")
    sp.add_argument("--override", action="store_true",
                    help="allow t below the order threshold")
    sp.add_argument("--out", type=Path, help="directory for certificate files")

    sp = sub.add_parser("explore", parents=[common], help="window evidence for open problems")
    sp.add_argument("--window", type=int)
    sp.add_argument("--elem-bound", type=int)
    sp.add_argument("--sweep-t", type=str,
                    help="comma-separated t values to sweep minimality over")

    sp = sub.add_parser("bench", parents=[common], help="timing of the main kernels")
    sp.add_argument("--window", type=int)

    return p


def _load_config(args) -> RunConfig:
    if args.config is not None:
        return RunConfig.parse(args.config.read_text())
    return load_preset(args.preset or "binary-h2")


def cmd_represent(cfg: RunConfig, args) -> int:
    if args.n < 0:
        print("error: n must be nonnegative", file=sys.stderr)
        return EXIT_CONFIG
    rep = cfg.seq.represent(args.n)
    if rep.is_zero():
        print(" (M undefined)")
    else:
        print(f"{rep.serialize()} (M={rep.max_index()})")
    return EXIT_OK


def cmd_check(cfg: RunConfig, args) -> int:
    N = args.window or cfg.window
    if args.which == "theorem1":
        report = verify_theorem1(cfg.basis, N)
        print(f"theorem1 window [0,{N}]: gaps {report.gaps[:10]} "
              f"-> {'pass' if report.passed else 'FAIL'} "
              f"({report.elapsed:.2f}s)")
        return EXIT_OK if report.passed else EXIT_FAIL
    if args.which == "theorem2":
        with_zero, without = verify_theorem2(cfg.basis, N)
        ok = with_zero.passed and without.passed
        print(f"theorem2 with 0 adjoined: full cover of [0,{N}] "
              f"-> {'pass' if with_zero.passed else 'FAIL'}")
        print(f"theorem2 after removing 0: gaps {without.gaps[:10]} "
              f"-> {'pass' if without.passed else 'FAIL'}")
        return EXIT_OK if ok else EXIT_FAIL
    if args.which == "lemma1":
        passed, counterexample = check_lemma1(cfg.seq, samples=args.samples or 100_000)
    else:
        passed, counterexample = check_lemma2(cfg.seq, samples=args.samples or 10_000)
    if passed:
        print(f"{args.which}: pass")
        return EXIT_OK
    print(f"{args.which}: FAIL ({counterexample})")
    return EXIT_FAIL


def cmd_minimality(cfg: RunConfig, args) -> int:
    t = args.t if args.t is not None else cfg.t
    K = args.budget if args.budget is not None else cfg.budget
    W = args.witnesses if args.witnesses is not None else cfg.witnesses
    batch = verify_minimality(cfg.basis, t=t, K=K, W=W, override=args.override)
    out = args.out
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    certified = 0
    for cert in batch.certificates:
        line = (f"a={cert.removed:<8} class={cert.removed_class} M0={cert.M0} "
                f"M={sorted(cert.chosen_Ms.values())} n={cert.n_value} "
                f"count={cert.measured_count}/{cert.expected_count} "
                f"{cert.verdict}")
        print(line)
        certified += cert.verdict == "certified"
        if out is not None:
            (out / cert.filename()).write_text(cert.render(cfg.basis))
    total = len(batch.certificates)
    print(f"summary: {certified}/{total} certified; "
          f"theorem1 precheck {'pass' if batch.theorem1.passed else 'FAIL'}")
    return EXIT_OK if batch.passed else EXIT_FAIL


def cmd_explore(cfg: RunConfig, args) -> int:
    N = args.window or cfg.window
    if args.sweep_t:
        fams_ok = []
        for t in (int(x) for x in args.sweep_t.split(",")):
            fams = detect_interval_families(cfg.partition, t)
            empties = [i for i in range(cfg.partition.h) if not fams.is_infinite(i)]
            threshold = min_t(cfg.partition.h)
            if empties:
                status = f"hypothesis violated (empty families for classes {empties})"
            elif t < threshold:
                status = f"below threshold t>={threshold}; evidence only"
            else:
                batch = verify_minimality(cfg.basis, t=t, K=min(cfg.budget, 5),
                                          W=1, override=True)
                status = ("all certified" if batch.passed
                          else "certification failed")
            print(f"t={t}: {status}")
            fams_ok.append(not empties)
        return EXIT_OK
    rows = removability_scan(cfg.basis, N, elem_bound=args.elem_bound)
    print(f"removability scan, 0-adjoined set, window [0,{N}] "
          "(evidence only, not proof):")
    for row in rows:
        print(f"  remove {row.removed:<8} misses={row.miss_count:<6} {row.evidence}")
    return EXIT_OK


def cmd_bench(cfg: RunConfig, args) -> int:
    N = args.window or cfg.window
    spec = cfg.basis
    t0 = time.perf_counter()
    window = spec.enumerate(N)
    t1 = time.perf_counter()
    hfold_sumset_window(window.mask, N, spec.h)
    t2 = time.perf_counter()
    rep = cfg.seq.represent((1 << 256) + 12345)
    count_reps_digitdp(spec, rep, spec.h)
    t3 = time.perf_counter()
    print(f"enumerate [1,{N}]: {len(window.members)} members, {t1 - t0:.3f}s")
    print(f"{spec.h}-fold sumset over [0,{N}]: {t2 - t1:.3f}s")
    print(f"digit DP on a 256-bit integer: {t3 - t2:.3f}s")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args)
        handler = {
            "represent": cmd_represent,
            "check": cmd_check,
            "minimality": cmd_minimality,
            "explore": cmd_explore,
            "bench": cmd_bench,
        }[args.command]
        return handler(cfg, args)
    except (ConfigError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except HypothesisViolatedError as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (WindowTooLargeError, MemoryError) as exc:
        print(f"window infeasible: {exc}", file=sys.stderr)
        return EXIT_WINDOW


if __name__ == "__main__":
    sys.exit(main())
