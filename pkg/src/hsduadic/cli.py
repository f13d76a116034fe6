"""Command-line front end.

    hsduadic split --n 5 --q 3
    hsduadic table1 [--n-max 45] [--q 3 --q 4] [--format text|csv|json]
    hsduadic classify --q 4 --n-max 45
    hsduadic census --kind A --q 3 --x 1000000 --out report.json
    hsduadic constants --a -4
    hsduadic verify --n-max 45

Exit codes: 0 success (or found), 1 success but nothing found, 2 invalid
input, 3 an internal cross-check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field

from . import duadic, lengths
from .census import constants as cconst
from .census import functions as cfun
from .census.report import CACHE_ENV, KINDS, run_census
from .census.sieve import _atomic_write
from .modarith import prime_power

EXIT_OK, EXIT_NONE, EXIT_INVALID, EXIT_ASSERT = 0, 1, 2, 3
FORMATS = ("text", "json", "csv")


class InvalidInput(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    q: int | None = None
    p: int | None = None
    t: int | None = None
    n: int | None = None
    n_min: int = 1
    n_max: int | None = None
    x: int | None = None
    q_values: list[int] = field(default_factory=list)
    fmt: str = "text"
    out: str | None = None
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# validation


def _resolve_q(args) -> tuple[int | None, int | None, int | None]:
    q, p, t = getattr(args, "q", None), getattr(args, "p", None), getattr(args, "t", None)
    if isinstance(q, list):
        q = None
    if p is not None or t is not None:
        if p is None or t is None:
            raise InvalidInput("--p and --t must be given together")
        if t < 1:
            raise InvalidInput(f"--t must be positive, got {t}")
        try:
            pp, e = prime_power(p)
        except ValueError:
            raise InvalidInput(f"--p {p} is not a prime") from None
        if e != 1:
            raise InvalidInput(f"--p {p} is not a prime")
        if q is not None and q != p ** t:
            raise InvalidInput(f"--q {q} disagrees with --p {p} --t {t}")
        return p ** t, p, t
    if q is None:
        return None, None, None
    try:
        p, t = prime_power(q)
    except ValueError:
        raise InvalidInput(f"q = {q} is not a prime power") from None
    return q, p, t


def _need_q(cfg: RunConfig) -> int:
    if cfg.q is None:
        raise InvalidInput("a field size is required: --q Q or --p P --t T")
    return cfg.q


def _check_length(n: int, q: int) -> None:
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    if n % 2 == 0:
        raise InvalidInput(f"n must be odd, got {n}")
    if math.gcd(n, q) != 1:
        raise InvalidInput(f"gcd(n, q) = gcd({n}, {q}) must be 1")


def build_config(args) -> RunConfig:
    q, p, t = _resolve_q(args)
    cfg = RunConfig(args.command, q=q, p=p, t=t, fmt=getattr(args, "format", "text"),
                    out=getattr(args, "out", None))
    if cfg.fmt not in FORMATS:
        raise InvalidInput(f"--format must be one of {FORMATS}")
    cmd = args.command
    if cmd == "split":
        _check_length(args.n, _need_q(cfg))
        cfg.n = args.n
        cfg.extra["verify"] = not args.no_verify
    elif cmd in ("table1", "verify"):
        qs = args.q if isinstance(getattr(args, "q", None), list) and args.q else list(duadic.DEFAULT_Q)
        for qq in qs:
            try:
                prime_power(qq)
            except ValueError:
                raise InvalidInput(f"q = {qq} is not a prime power") from None
        cfg.q_values = qs
        cfg.n_max = args.n_max
        cfg.n_min = args.n_min
        if cfg.n_max < cfg.n_min:
            raise InvalidInput("--n-max must be at least --n-min")
    elif cmd == "classify":
        _need_q(cfg)
        if args.n_max < 1:
            raise InvalidInput("--n-max must be positive")
        cfg.n_min, cfg.n_max = args.n_min, args.n_max
    elif cmd == "census":
        if args.x < 1:
            raise InvalidInput("--x must be positive")
        cfg.x = args.x
        kind = args.kind
        if kind in ("A", "prime-order"):
            _need_q(cfg)
            if kind == "prime-order" and args.x < 100:
                raise InvalidInput("prime-order census needs --x >= 100")
        elif kind in ("D", "G"):
            if args.a is None or args.a == 0:
                raise InvalidInput(f"census {kind} needs a nonzero --a")
        elif kind == "B":
            if args.D is None:
                raise InvalidInput("census B needs --D")
            _check_disc(args.D)
        cfg.extra.update(kind=kind, a=args.a, D=args.D, mode=args.mode,
                         odd_only=args.odd_only, convention=args.convention,
                         series_csv=args.series_csv, cache_dir=args.cache_dir,
                         segment=args.segment)
        for path in (cfg.out, args.series_csv):
            _check_writable(path)
    elif cmd == "constants":
        if (args.a is None) == (args.D is None):
            raise InvalidInput("give exactly one of --a or --D")
        if args.a is not None and cfun.is_perfect_square(args.a):
            raise InvalidInput(f"a = {args.a} is a perfect square")
        if args.a == 0:
            raise InvalidInput("a must be nonzero")
        if args.D is not None:
            _check_disc(args.D)
        if args.P < 100 or args.N < 100:
            raise InvalidInput("--P and --N must be at least 100")
        cfg.extra.update(a=args.a, D=args.D, P=args.P, N=args.N, convention=args.convention)
    if cmd != "census":
        _check_writable(cfg.out)
    return cfg


def _check_disc(D: int) -> None:
    try:
        cfun.check_discriminant(D)
    except ValueError as e:
        raise InvalidInput(str(e)) from None


def _check_writable(path: str | None) -> None:
    if path is None:
        return
    d = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(d):
        raise InvalidInput(f"output directory {d} does not exist")


# ---------------------------------------------------------------------------
# commands; each returns (exit code, text to emit)


def cmd_split(cfg: RunConfig) -> tuple[int, str]:
    rep = duadic.split_report(cfg.n, cfg.q, verify=cfg.extra["verify"])
    if cfg.fmt == "json":
        text = json.dumps(rep.to_json(), sort_keys=True) + "\n"
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "q", "S1", "qr", "self_dual"])
        for k, s in enumerate(rep.splittings):
            sd = int(rep.self_dual[k]) if rep.self_dual else ""
            w.writerow([cfg.n, cfg.q, " ".join(map(str, s.reps())), int(rep.qr_flags[k]), sd])
        text = buf.getvalue()
    else:
        lines = [f"n={cfg.n} q={cfg.q}: {len(rep.splittings)} splitting(s) by mu_{-cfg.q}"]
        for k, s in enumerate(rep.splittings):
            mark = " ♣" if rep.qr_flags[k] else ""
            sd = ""
            if rep.self_dual:
                sd = "  self-dual: " + ("verified" if rep.self_dual[k] else "FAILED")
            lines.append(f"  S1 = {s.label()}{mark}{sd}")
        text = "\n".join(lines) + "\n"
    if rep.self_dual and not all(rep.self_dual):
        return EXIT_ASSERT, text
    return (EXIT_OK if rep.splittings else EXIT_NONE), text


def cmd_table1(cfg: RunConfig) -> tuple[int, str]:
    table = duadic.table1(range(cfg.n_min, cfg.n_max + 1), cfg.q_values)
    if cfg.fmt == "csv":
        return EXIT_OK, duadic.table1_csv(table, cfg.q_values)
    if cfg.fmt == "json":
        rec = {"schema": 1, "q_values": cfg.q_values, "rows": [
            {"n": n, "splittings": {str(q): [[s.reps(), duadic.is_qr_splitting(s)] for s in row[q]]
                                    for q in cfg.q_values}}
            for n, row in table.items()]}
        return EXIT_OK, json.dumps(rec, sort_keys=True) + "\n"
    return EXIT_OK, duadic.format_table1(table, cfg.q_values)


def cmd_classify(cfg: RunConfig) -> tuple[int, str]:
    verdicts = [lengths.classify(n, cfg.q) for n in range(max(cfg.n_min, 1), cfg.n_max + 1)
                if n % 2 and math.gcd(n, cfg.q) == 1]
    if cfg.fmt == "json":
        rec = {"schema": 1, "q": cfg.q, "p": cfg.p, "t": cfg.t, "rows": [
            {"n": v.n, "splits": v.splits_by_mu_minus_q, "duadic_exists": v.duadic_exists,
             "evidence": [list(e) for e in v.evidence]} for v in verdicts]}
        return EXIT_OK, json.dumps(rec, sort_keys=True) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "splits", "duadic_exists", "evidence"])
    for v in verdicts:
        w.writerow(v.to_row())
    return EXIT_OK, buf.getvalue()


def cmd_census(cfg: RunConfig) -> tuple[int, str]:
    e = cfg.extra
    rep = run_census(e["kind"], cfg.x, q=cfg.q, a=e["a"], D=e["D"], mode=e["mode"],
                     odd_only=e["odd_only"], convention=e["convention"],
                     segment=e["segment"], state_dir=e["cache_dir"])
    rec = rep.to_json()
    if cfg.q is not None:
        rec["params"].update(p=cfg.p, t=cfg.t)
        rec["delta"] = str(cfun.delta(cfg.q))
    if e["kind"] in ("D", "G") and not cfun.is_perfect_square(e["a"]):
        conv = e["convention"] if e["kind"] == "G" else cfun.ODD_PRIMES
        est = cconst.estimate_G_const(e["a"], convention=conv)
        rec["G_const"] = {"value": est.value, "error": est.error}
    if e["kind"] == "B":
        est = cconst.estimate_J(e["D"])
        rec["J_const"] = {"value": est.value, "error": est.error}
    if e["series_csv"]:
        _atomic_write(e["series_csv"], rep.series_csv())
    if cfg.fmt == "csv":
        return EXIT_OK, rep.series_csv()
    if cfg.fmt == "text":
        return EXIT_OK, (f"{rep.kind} {rep.params}: count({cfg.x}) = {rep.count}, "
                         f"ratio = {rep.ratio:.6f}\n")
    return EXIT_OK, json.dumps(rec, sort_keys=True) + "\n"


def cmd_constants(cfg: RunConfig) -> tuple[int, str]:
    e = cfg.extra
    if e["a"] is not None:
        ests = [cconst.estimate_G_const(e["a"], e["P"], e["N"], e["convention"])]
    else:
        ests = [cconst.estimate_J(e["D"], e["P"], e["N"]),
                cconst.estimate_G_D(e["D"], e["P"], e["N"])]
    if cfg.fmt == "json":
        return EXIT_OK, json.dumps({"schema": 1, "estimates": [x.to_json() for x in ests]},
                                   sort_keys=True) + "\n"
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["a", "kind", "value", "error", "L1", "euler_product", "P", "N"])
        for x in ests:
            w.writerow([x.a, x.kind, repr(x.value), repr(x.error), repr(x.L1),
                        repr(x.euler_product), x.P, x.N])
        return EXIT_OK, buf.getvalue()
    lines = [f"{x.kind} constant for {x.a}: {x.value:.10f} +/- {x.error:.1e} "
             f"(L(1,chi) = {x.L1:.12f}, P = {x.P})" for x in ests]
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    """Rebuild every splitting in range, check the four-way equivalences,
    dual formulas and self-duality; exit 3 on any failure."""
    rows = []
    ok = True
    for q in cfg.q_values:
        for n in range(cfg.n_min, cfg.n_max + 1):
            if n % 2 == 0 or math.gcd(n, q) != 1:
                continue
            sp = duadic.find_splittings(n, q)
            if bool(sp) != lengths.splits_by_mu_minus_q(n, q):
                raise AssertionError(f"splitting search and order test disagree at n={n}, q={q}")
            for s in sp:
                P = duadic.duadic_from_splitting(s)
                eq = duadic.check_duadic_equivalences(P)
                sd = duadic.verify_splitting(s)
                good = sd and all(eq.swapped_by_mu_minus_q) and duadic.idempotent_identity_holds(P)
                ok &= good
                rows.append((n, q, " ".join(map(str, s.reps())), int(good)))
    if cfg.fmt == "json":
        text = json.dumps({"schema": 1, "ok": ok, "rows": [list(r) for r in rows]},
                          sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "q", "S1", "ok"])
        w.writerows(rows)
        text = buf.getvalue()
    return (EXIT_OK if ok else EXIT_ASSERT), text


COMMANDS = {"split": cmd_split, "table1": cmd_table1, "classify": cmd_classify,
            "census": cmd_census, "constants": cmd_constants, "verify": cmd_verify}


# ---------------------------------------------------------------------------


def _add_q(p: argparse.ArgumentParser, multiple: bool = False) -> None:
    if multiple:
        p.add_argument("--q", type=int, action="append", help="field parameter (repeatable)")
    else:
        p.add_argument("--q", type=int, help="codes live over GF(q^2)")
        p.add_argument("--p", type=int, help="characteristic, with --t")
        p.add_argument("--t", type=int, help="q = p^t")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hsduadic", description=(
        "Splittings by mu_{-q}, Hermitian self-dual extended duadic codes over GF(q^2), "
        "and counts of admissible lengths."))
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("split", help="splittings of one length")
    sp.add_argument("--n", type=int, required=True)
    _add_q(sp)
    sp.add_argument("--no-verify", action="store_true", help="skip the self-duality check")

    tp = sub.add_parser("table1", help="table of splittings for a range of lengths")
    tp.add_argument("--n-min", type=int, default=5)
    tp.add_argument("--n-max", type=int, default=45)
    _add_q(tp, multiple=True)

    cp = sub.add_parser("classify", help="per-length verdicts as CSV")
    _add_q(cp)
    cp.add_argument("--n-min", type=int, default=1)
    cp.add_argument("--n-max", type=int, required=True)

    ce = sub.add_parser("census", help="counting functions up to x")
    ce.add_argument("--kind", choices=KINDS, required=True)
    _add_q(ce)
    ce.add_argument("--a", type=int)
    ce.add_argument("--D", type=int)
    ce.add_argument("--x", type=int, required=True)
    ce.add_argument("--mode", choices=cfun.A_MODES, default=cfun.LITERAL)
    ce.add_argument("--odd-only", action="store_true")
    ce.add_argument("--convention", choices=cfun.CONVENTIONS, default=cfun.ODD_PRIMES)
    ce.add_argument("--series-csv", help="also write the (x, count, ratio) series here")
    ce.add_argument("--segment", type=int, default=10**7)
    ce.add_argument("--cache-dir", help=f"checkpoint directory (default ${CACHE_ENV})")

    co = sub.add_parser("constants", help="growth constants G_a, J(D), G_D")
    co.add_argument("--a", type=int)
    co.add_argument("--D", type=int)
    co.add_argument("--P", type=int, default=cconst.DEFAULT_P)
    co.add_argument("--N", type=int, default=cconst.DEFAULT_N)
    co.add_argument("--convention", choices=cfun.CONVENTIONS, default=cfun.ODD_PRIMES)

    ve = sub.add_parser("verify", help="rebuild and cross-check every splitting in range")
    ve.add_argument("--n-min", type=int, default=5)
    ve.add_argument("--n-max", type=int, default=45)
    _add_q(ve, multiple=True)

    for p in (sp, tp, cp, ce, co, ve):
        p.add_argument("--format", choices=FORMATS, default="csv" if p in (cp, ve) else
                       ("json" if p is ce else "text"))
        p.add_argument("--out", help="write here (atomically) instead of stdout")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    try:
        cfg = build_config(args)
    except InvalidInput as e:
        print(f"hsduadic {args.command}: invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    try:
        code, text = COMMANDS[cfg.command](cfg)
    except AssertionError as e:
        print(f"hsduadic {args.command}: internal check failed: {e}", file=sys.stderr)
        return EXIT_ASSERT
    except ValueError as e:
        print(f"hsduadic {args.command}: invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    if cfg.out:
        _atomic_write(cfg.out, text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
