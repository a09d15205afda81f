"""Command line front end.

Subcommands
    count    count invertible k x k column selections of a matrix file
    weights  print a weight distribution (optionally of the dual)
    sets     list the dependent and independent column subsets
    search   scan systematic candidates for the most invertible selections
    verify   run the self-check battery on a matrix (and optional dual)

Matrix files hold one row per line, characters 0 and 1, interior
whitespace ignored, '#' starts a comment line.  All indices printed for
humans are 1-based; JSON output uses the same convention.

Exit codes:
    0  success
    1  unexpected internal error
    2  usage error
    3  matrix text could not be parsed
    4  a full-row-rank matrix was required but not supplied
    5  the distance condition fails and the mode demands the formula
    6  the requested work exceeds the budget
    7  a verification check failed
    8  cross-checked computations disagree
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .codes import (
    DEFAULT_MAX_ENUM_DIM,
    WeightEnumerator,
    dual_of,
    macwilliams,
    weight_enumerator,
)
from .counting import (
    DEFAULT_BUDGET,
    CountReport,
    analyze,
    complement_duality_check,
    row_op_invariance_check,
)
from .errors import (
    BudgetError,
    ConditionError,
    ConsistencyError,
    FormatError,
    Gf2CountError,
    RankError,
)
from .gf2 import (
    BitMatrix,
    mat_mul_transpose,
    parse_matrix,
    permute_columns,
    rank,
    systematic_form,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_RANK = 4
EXIT_CONDITION = 5
EXIT_BUDGET = 6
EXIT_VERIFY = 7
EXIT_CONSISTENCY = 8

_ERROR_EXITS = (
    (FormatError, EXIT_FORMAT),
    (RankError, EXIT_RANK),
    (ConditionError, EXIT_CONDITION),
    (BudgetError, EXIT_BUDGET),
    (ConsistencyError, EXIT_CONSISTENCY),
)

DEFAULT_WITNESS_CAP = 32


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation, one flat record shared by all subcommands."""

    command: str
    paths: tuple[str, ...] = ()
    mode: str = "auto"
    fmt: str = "text"
    budget: int = DEFAULT_BUDGET
    list_sets: bool = False
    set_limit: Optional[int] = None
    dual: bool = False
    threads: int = 1
    seed: int = 0
    samples: Optional[int] = None
    k: int = 0
    n: int = 0
    exhaustive: bool = False
    trials: int = 20
    witness_cap: int = DEFAULT_WITNESS_CAP


def _read_matrix(path: str) -> BitMatrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return parse_matrix(text)


def _emit(lines: Sequence[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _emit_json(obj: object) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _fmt_set(s: Sequence[int]) -> str:
    return "{" + ", ".join(str(j + 1) for j in s) + "}"


def _set_section(label: str, count: int, sets, limit: Optional[int]) -> list[str]:
    if sets is None:
        note = f" (list over limit {limit})" if limit is not None else ""
        return [f"{label} ({count}): not listed{note}"]
    lines = [f"{label} ({count}):"]
    lines.extend("  " + _fmt_set(s) for s in sets)
    return lines


def _report_text(rep: CountReport, permutation: Optional[tuple[int, ...]],
                 set_limit: Optional[int], sets_requested: bool) -> list[str]:
    side_dim = rep.n - rep.k if rep.side == "dual" else rep.k
    lines = [f"matrix: {rep.k} x {rep.n}, full row rank"]
    if permutation is not None and any(p != j for j, p in enumerate(permutation)):
        order = ", ".join(str(p + 1) for p in permutation)
        lines.append(f"systematic form moves columns to positions [{order}]")
    else:
        lines.append("systematic form keeps the column order")
    lines.append(f"enumeration side: {rep.side} (dimension {side_dim})")
    lines.append(f"weight enumerator: {rep.enumerator.polynomial_str()}")
    lines.append(f"coefficients: {list(rep.enumerator.coeffs)}")
    if rep.d_star is None:
        lines.append("minimum distance d*: undefined (no nonzero word)")
        lines.append("condition 3*d* > 2*max(k, n-k): holds vacuously")
    else:
        lhs, rhs = 3 * rep.d_star, 2 * max(rep.k, rep.n - rep.k)
        verdict = "holds" if rep.condition_holds else "fails"
        lines.append(f"minimum distance d*: {rep.d_star}")
        lines.append(f"condition 3*d* > 2*max(k, n-k): {verdict} ({lhs} vs {rhs})")
    lines.append(f"method: {rep.method}")
    lines.append(f"singular selections D: {rep.singular_count}")
    lines.append(f"full rank selections I: {rep.full_rank_count}")
    lines.append(f"total C({rep.n}, {rep.k}): {comb(rep.n, rep.k)}")
    if sets_requested:
        lines.extend(_set_section("dependent sets", rep.singular_count,
                                  rep.dependent_sets, set_limit))
        lines.extend(_set_section("independent sets", rep.full_rank_count,
                                  rep.independent_sets, set_limit))
    return lines


def cmd_count(cfg: RunConfig) -> int:
    m = _read_matrix(cfg.paths[0])
    rep = analyze(
        m,
        cfg.mode,
        budget=cfg.budget,
        collect_sets=cfg.list_sets,
        set_list_limit=cfg.set_limit,
        workers=cfg.threads,
    )
    if cfg.fmt == "json":
        _emit_json(rep.to_json_dict())
    else:
        perm = systematic_form(m).col_perm
        _emit(_report_text(rep, perm, cfg.set_limit, cfg.list_sets))
    return EXIT_OK


def cmd_weights(cfg: RunConfig) -> int:
    m = _read_matrix(cfg.paths[0])
    checked = False
    if cfg.dual:
        direct = weight_enumerator(dual_of(systematic_form(m)))
        transformed = macwilliams(weight_enumerator(m), m.rows)
        if direct != transformed:
            raise ConsistencyError(
                "direct dual enumeration and the transform of the primal "
                "distribution disagree"
            )
        we = direct
        checked = True
        dim = m.cols - m.rows
    else:
        we = weight_enumerator(m)
        dim = m.rows
    if cfg.fmt == "json":
        _emit_json(we.to_json_dict())
        return EXIT_OK
    lines = [
        f"length n: {we.n}",
        f"dimension: {dim}" + (" (dual of the input)" if cfg.dual else ""),
        f"weight enumerator: {we.polynomial_str()}",
        f"coefficients: {list(we.coeffs)}",
    ]
    if checked:
        lines.append("cross-check against the transformed primal distribution: agree")
    _emit(lines)
    return EXIT_OK


def cmd_sets(cfg: RunConfig) -> int:
    m = _read_matrix(cfg.paths[0])
    rep = analyze(
        m,
        "oracle",
        budget=cfg.budget,
        collect_sets=True,
        set_list_limit=cfg.set_limit,
        workers=cfg.threads,
    )
    if cfg.fmt == "json":
        _emit_json(rep.to_json_dict())
        return EXIT_OK
    lines = [f"matrix: {rep.k} x {rep.n}, C({rep.n}, {rep.k}) = "
             f"{comb(rep.n, rep.k)} selections"]
    lines.extend(_set_section("dependent sets", rep.singular_count,
                              rep.dependent_sets, cfg.set_limit))
    lines.extend(_set_section("independent sets", rep.full_rank_count,
                              rep.independent_sets, cfg.set_limit))
    _emit(lines)
    return EXIT_OK


def _candidate_matrix(p_bits: int, k: int, n: int) -> BitMatrix:
    """Systematic [I | P] whose P block is read row-major from p_bits."""
    width = n - k
    pmask = (1 << width) - 1
    rows = tuple(
        (1 << i) | (((p_bits >> (i * width)) & pmask) << k) for i in range(k)
    )
    return BitMatrix(k, n, rows)


def run_search(cfg: RunConfig) -> dict:
    """Score candidate systematic matrices and keep the best ones.

    Every full-row-rank matrix is row-op plus column-permutation
    equivalent to some [I | P], and the counts are invariant under both,
    so scanning P blocks alone covers all attainable values of I.

    Returns a JSON-ready summary dict.
    """
    k, n = cfg.k, cfg.n
    width = k * (n - k)
    if cfg.exhaustive:
        if 1 << width > cfg.budget:
            raise BudgetError(
                f"exhaustive search needs 2^{width} = {1 << width} candidates, "
                f"over budget {cfg.budget}"
            )
        candidates = range(1 << width)
    else:
        rng = random.Random(cfg.seed)
        seen: set[int] = set()
        ordered: list[int] = []
        for _ in range(cfg.samples or 0):
            p = rng.getrandbits(width) if width else 0
            if p not in seen:
                seen.add(p)
                ordered.append(p)
        candidates = ordered

    best = -1
    achieved = 0
    witnesses: list[BitMatrix] = []
    scored = 0
    for p_bits in candidates:
        g = _candidate_matrix(p_bits, k, n)
        rep = analyze(g, "auto", budget=cfg.budget, workers=cfg.threads)
        scored += 1
        value = rep.full_rank_count
        if value > best:
            best = value
            achieved = 1
            witnesses = [g]
        elif value == best:
            achieved += 1
            if len(witnesses) < cfg.witness_cap:
                witnesses.append(g)
    return {
        "k": k,
        "n": n,
        "exhaustive": cfg.exhaustive,
        "samples": cfg.samples,
        "seed": None if cfg.exhaustive else cfg.seed,
        "candidates_scored": scored,
        "total_subsets": comb(n, k),
        "max_full_rank": best,
        "achieved_by": achieved,
        "witnesses": [w.to_lines() for w in witnesses],
        "witnesses_truncated": achieved > len(witnesses),
    }


def cmd_search(cfg: RunConfig) -> int:
    summary = run_search(cfg)
    if cfg.fmt == "json":
        _emit_json(summary)
        return EXIT_OK
    kind = "exhaustive" if cfg.exhaustive else f"random (seed {cfg.seed})"
    lines = [
        f"search: k={summary['k']}, n={summary['n']}, {kind}, "
        f"{summary['candidates_scored']} candidates",
        f"maximum full rank selections I: {summary['max_full_rank']} "
        f"of C({summary['n']}, {summary['k']}) = {summary['total_subsets']}",
        f"achieved by {summary['achieved_by']} candidates"
        + (f" (showing {len(summary['witnesses'])})"
           if summary["witnesses_truncated"] else ""),
    ]
    for i, w in enumerate(summary["witnesses"], start=1):
        lines.append(f"witness {i}:")
        lines.extend("  " + row for row in w)
    _emit(lines)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    m = _read_matrix(cfg.paths[0])
    sf = systematic_form(m)
    supplied_h: Optional[BitMatrix] = None
    if len(cfg.paths) > 1:
        supplied_h = _read_matrix(cfg.paths[1])

    checks: list[tuple[str, bool]] = []
    if supplied_h is None:
        h = dual_of(sf)
        pairing = True
    else:
        # orthogonality is judged against the input as given; the scan
        # below runs in systematic column order, so align h to match
        pairing = (
            supplied_h.cols == sf.n
            and supplied_h.rows == sf.n - sf.k
            and mat_mul_transpose(m, supplied_h).is_zero
            and rank(supplied_h) == sf.n - sf.k
        )
        h = (
            permute_columns(supplied_h, sf.col_perm)
            if pairing and sf.permuted
            else supplied_h
        )
    checks.append(("dual pairing", pairing))

    if pairing:
        duality = complement_duality_check(
            sf, h, budget=cfg.budget, workers=cfg.threads
        )
    else:
        duality = False
    checks.append(("complement duality", duality))

    invariance = row_op_invariance_check(
        m, cfg.trials, seed=cfg.seed, budget=cfg.budget, workers=cfg.threads
    )
    checks.append((f"row op invariance ({cfg.trials} trials)", invariance))

    passed = all(ok for _, ok in checks)
    if cfg.fmt == "json":
        _emit_json({
            "checks": [{"name": name, "passed": ok} for name, ok in checks],
            "passed": passed,
        })
    else:
        lines = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in checks]
        lines.append(f"overall: {'pass' if passed else 'FAIL'}")
        _emit(lines)
    return EXIT_OK if passed else EXIT_VERIFY


def _add_common(sub: argparse.ArgumentParser, *, budget: bool = True,
                fmt: bool = True, threads: bool = True) -> None:
    if fmt:
        sub.add_argument("--format", choices=("text", "json"), default="text",
                         help="output format (default text)")
    if budget:
        sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                         help="largest subset scan allowed "
                              f"(default {DEFAULT_BUDGET})")
    if threads:
        sub.add_argument("--threads", type=int, default=0,
                         help="worker processes for large scans "
                              "(default: all cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gf2count",
        description="Count invertible k x k column selections of a binary matrix.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count singular and invertible selections")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("--mode", choices=("auto", "formula", "oracle", "both"),
                   default="auto", help="counting strategy (default auto)")
    p.add_argument("--list-sets", action="store_true",
                   help="also list the subsets (forces a scan)")
    p.add_argument("--set-limit", type=int, default=None,
                   help="omit a subset list longer than this")
    _add_common(p)

    p = sub.add_parser("weights", help="print a weight distribution")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("--dual", action="store_true",
                   help="distribution of the dual, cross-checked two ways")
    _add_common(p, budget=False, threads=False)

    p = sub.add_parser("sets", help="list dependent and independent subsets")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("--set-limit", type=int, default=None,
                   help="omit a subset list longer than this")
    _add_common(p)

    p = sub.add_parser("search", help="maximize I over systematic candidates")
    p.add_argument("--k", type=int, required=True, help="row count")
    p.add_argument("--n", type=int, required=True, help="column count")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exhaustive", action="store_true",
                       help="score every P block")
    group.add_argument("--samples", type=int,
                       help="score this many seeded-random P blocks")
    p.add_argument("--seed", type=int, default=0,
                   help="random seed for --samples (default 0)")
    p.add_argument("--witnesses", type=int, default=DEFAULT_WITNESS_CAP,
                   help="keep at most this many best matrices "
                        f"(default {DEFAULT_WITNESS_CAP})")
    _add_common(p)

    p = sub.add_parser("verify", help="run the self-check battery")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("dual", nargs="?", default=None,
                   help="optional dual generator file to check against")
    p.add_argument("--trials", type=int, default=20,
                   help="row-op sequences to test (default 20)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the op sequences (default 0)")
    _add_common(p)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    # "dual" is a flag on weights but a positional path on verify
    paths: tuple[str, ...] = ()
    if getattr(args, "matrix", None) is not None:
        paths = (args.matrix,)
    if args.command == "verify" and args.dual is not None:
        paths = paths + (args.dual,)
    threads = getattr(args, "threads", 1)
    if threads == 0:
        threads = os.cpu_count() or 1
    return RunConfig(
        command=args.command,
        paths=paths,
        mode=getattr(args, "mode", "auto"),
        fmt=getattr(args, "format", "text"),
        budget=getattr(args, "budget", DEFAULT_BUDGET),
        list_sets=getattr(args, "list_sets", False),
        set_limit=getattr(args, "set_limit", None),
        dual=args.command == "weights" and args.dual,
        threads=threads,
        seed=getattr(args, "seed", 0),
        samples=getattr(args, "samples", None),
        k=getattr(args, "k", 0),
        n=getattr(args, "n", 0),
        exhaustive=getattr(args, "exhaustive", False),
        trials=getattr(args, "trials", 20),
        witness_cap=getattr(args, "witnesses", DEFAULT_WITNESS_CAP),
    )


_COMMANDS = {
    "count": cmd_count,
    "weights": cmd_weights,
    "sets": cmd_sets,
    "search": cmd_search,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "count" and args.mode == "formula" and args.list_sets:
        parser.error("--list-sets needs a scan; use --mode auto, oracle or both")
    if args.command == "search":
        if args.k < 1 or args.n < 2 or args.k >= args.n:
            parser.error("search needs 1 <= k < n")
        if args.samples is not None and args.samples < 1:
            parser.error("--samples must be positive")
    if getattr(args, "budget", 1) < 1:
        parser.error("--budget must be positive")
    if getattr(args, "threads", 0) < 0:
        parser.error("--threads cannot be negative")
    cfg = _config_from_args(args)
    try:
        return _COMMANDS[cfg.command](cfg)
    except Gf2CountError as exc:
        for klass, code in _ERROR_EXITS:
            if isinstance(exc, klass):
                print(f"error: {exc}", file=sys.stderr)
                return code
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
