"""Command line entry point: ``hermqc <verify|search|bound|cosets|gv|tables>``.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
usage or input errors.  Machine-readable results are JSON lines.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Sequence

import numpy as np

from . import __version__
from .cosets import all_cosets, defining_set, ds_dual_containing, skew_classify
from .cyclic import gen_from_defining_set
from .distance import bound_report, minimum_distance
from .distance.bound import INF
from .fields import field_make
from .fixtures import Fixture, FixtureError, fixture_by_id, load_fixtures
from .poly import Poly, PolyParseError, p_format, p_parse
from .qc import (
    QuasiCyclicCode,
    check_prop_dims,
    check_thm_extended,
    check_thm_main,
    dual_containing_route,
    qc_build,
    thm_extended_conditions,
    thm_main_conditions,
)
from .quantum import QuantumParams, beats_gv, gv_kmax, gv_sides, hermitian_construct, propagation_closure

log = logging.getLogger("hermqc")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CRITERIA = ("main", "extended", "direct")
# the five codes the binary propagation table is derived from
TABLE1_BASE = ((42, 14, 8), (70, 42, 7), (70, 48, 6), (82, 42, 9), (170, 148, 5))


class UsageError(Exception):
    pass


def _q_of(q2: int) -> int:
    q = {4: 2, 9: 3, 16: 4, 25: 5}.get(q2)
    if q is None:
        raise UsageError(f"--q2 must be one of 4, 9, 16, 25 (got {q2})")
    return q


def _reps(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise UsageError(f"bad coset representative list {text!r}") from e


def _generators(args, F) -> tuple[Poly, Poly]:
    """g1, g2 from notation strings or from coset representatives."""
    out = []
    for which in ("1", "2"):
        s, reps = getattr(args, f"g{which}"), getattr(args, f"t{which}")
        if s is not None and reps is not None:
            raise UsageError(f"give either --g{which} or --t{which}, not both")
        if s is not None:
            out.append(p_parse(s, F))
        elif reps is not None:
            T = defining_set(args.n, F.order, _reps(reps))
            out.append(gen_from_defining_set(args.n, F, T))
        else:
            raise UsageError(f"--g{which} or --t{which} is required")
    return out[0], out[1]


def _apply_fixture(args) -> Fixture | None:
    ident = getattr(args, "fixture", None)
    if not ident:
        return None
    row = fixture_by_id(ident)
    if not row.has_code:
        raise UsageError(f"fixture {ident} carries no construction")
    args.q2, args.n = row.q2, row.n
    args.g1, args.g2 = row.g1, row.g2
    args.t1 = args.t2 = None
    if getattr(args, "t", None) is None:
        args.t = row.t
    return row


def _build(args) -> QuasiCyclicCode:
    _apply_fixture(args)
    if args.q2 is None or args.n is None:
        raise UsageError("--q2 and --n are required (or --fixture)")
    _q_of(args.q2)
    F = field_make(args.q2)
    g1, g2 = _generators(args, F)
    if args.t is None:
        raise UsageError("--t is required")
    return qc_build(args.n, F, g1, g2, p_parse(args.t, F))


# -- analysis shared by verify, search and tables ------------------------------

def _distance_json(res) -> dict:
    return {"lower": int(res.lower), "upper": int(res.upper), "exact": bool(res.exact), "method": res.method}


def analyze(
    code: QuasiCyclicCode,
    budget_secs: float = 60.0,
    workers: int = 1,
    with_bound: bool = True,
    supplied_d: int | None = None,
    with_distance: bool = True,
) -> dict:
    """Every derived quantity for one construction, as a JSON-ready dict."""
    F, n = code.field, code.n
    q = _q_of(F.order)
    route = dual_containing_route(code)
    rec: dict = {
        "q2": F.order,
        "n": n,
        "g1": p_format(code.g1),
        "g2": p_format(code.g2),
        "t": p_format(code.t),
        "length": 2 * n,
        "dim": code.dim,
        "expected_dim": code.expected_dim,
        "dual_dim": code.dual_dim,
        "check_prop_dims": check_prop_dims(code),
        "check_thm_main": check_thm_main(code),
        "thm_main_divisibility": thm_main_conditions(code),
        "check_thm_extended": check_thm_extended(code),
        "thm_extended_divisibility": thm_extended_conditions(code),
        "check_dual_containing_direct": route is not None,
        "dual_containing_route": route,
    }
    d_lo = d_hi = None
    if with_distance:
        res = minimum_distance(code, budget_secs=budget_secs, symmetry=("quasi-cyclic", n), workers=workers)
        rec["distance"] = _distance_json(res)
        d_lo, d_hi = res.lower, res.upper
    else:
        rec["distance"] = None
    if with_bound:
        rep = bound_report(n, code.g1, code.g2, code.t, budget_secs=budget_secs, workers=workers)
        rec["thm_lower_bound"] = rep.to_json()
    else:
        rec["thm_lower_bound"] = None
    quantum = None
    if route is not None and 2 * code.dim >= 2 * n:
        if supplied_d is not None:
            d, status = supplied_d, "supplied"
        elif d_lo is not None and d_lo == d_hi:
            d, status = d_lo, "exact"
        elif d_lo is not None:
            d, status = d_lo, "lower_bound"
        else:
            d, status = None, None
        if d is not None:
            qp = hermitian_construct(2 * n, code.dim, d, q, True, d_status=status)
            quantum = {"n": qp.n, "k": qp.k, "d": qp.d, "q": q, "d_status": status, "params": str(qp)}
            if qp.n > 2 and qp.d >= 2:
                kmax = gv_kmax(qp.n, qp.d, q)
                quantum["gv"] = {"k_gv": kmax, "beats": beats_gv(qp), "vacuous": kmax == 0}
    rec["quantum"] = quantum
    return rec


def _emit(fh, rec: dict) -> None:
    fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")


def _open_out(path: str | None, mode: str = "w"):
    if path is None or path == "-":
        return sys.stdout, False
    try:
        return open(path, mode, encoding="utf-8"), True
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e}") from e


def _fmt_interval(d: dict | None) -> str:
    if d is None:
        return "not computed"
    if d["exact"]:
        return f"{d['lower']} (exact, {d['method']})"
    return f"in [{d['lower']},{d['upper']}] ({d['method']}, budget reached)"


# -- verify ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    code = _build(args)
    rec = analyze(
        code,
        budget_secs=args.budget_secs,
        workers=args.workers,
        with_bound=not args.no_bound,
        supplied_d=args.d,
        with_distance=not args.no_distance,
    )
    if args.timestamp:
        rec["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    print(f"C = C_{rec['q2']}(g1, g2, t), n = {rec['n']}, length {rec['length']}")
    print(f"  g1 = {rec['g1']}\n  g2 = {rec['g2']}\n  t  = {rec['t']}")
    print(f"  dim = {rec['dim']} (degree count {rec['expected_dim']}), dual candidate rank {rec['dual_dim']}")
    for key in ("check_prop_dims", "check_thm_main", "thm_main_divisibility", "check_thm_extended",
                "thm_extended_divisibility", "check_dual_containing_direct"):
        print(f"  {key:<30} {str(rec[key]).lower()}")
    if rec["dual_containing_route"]:
        print(f"  certified by                   {rec['dual_containing_route']}")
    print(f"  minimum distance               {_fmt_interval(rec['distance'])}")
    if rec["thm_lower_bound"] is not None:
        b = rec["thm_lower_bound"]
        print(f"  theorem lower bound            {b['bound']}")
    qrec = rec["quantum"]
    if qrec:
        extra = "" if qrec["d_status"] == "exact" else f" (d {qrec['d_status']})"
        print(f"  quantum code                   {qrec['params']}{extra}")
        if "gv" in qrec:
            gv = qrec["gv"]
            note = ", vacuous" if gv["vacuous"] else ""
            print(f"  beats GV                       {str(gv['beats']).lower()} (k_GV = {gv['k_gv']}{note})")
    elif rec["check_dual_containing_direct"]:
        print("  quantum code                   none (dimension below half the length)")
    if args.out:
        fh, close = _open_out(args.out, "a")
        _emit(fh, rec)
        if close:
            fh.close()
    return EXIT_OK if rec["check_dual_containing_direct"] else EXIT_FAIL


# -- search ----------------------------------------------------------------------

def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Counter-based stream for one trial, independent of scheduling."""
    if not 0 <= seed < 2**64:
        raise UsageError("--seed must fit in 64 bits")
    return np.random.Generator(np.random.Philox(key=(seed << 64) | trial))


def draw_t(rng: np.random.Generator, n: int, order: int, weight: int | None) -> list[int]:
    if weight is None:
        return [int(x) for x in rng.integers(0, order, size=n)]
    coeffs = [0] * n
    pos = rng.choice(n, size=weight, replace=False)
    vals = rng.integers(1, order, size=weight)
    for p, v in zip(pos, vals):
        coeffs[int(p)] = int(v)
    return coeffs


@dataclass
class SearchConfig:
    q2: int
    n: int
    g1: Poly
    g2: Poly
    criterion: str
    trials: int
    seed: int
    budget_secs: float
    t_weight: int | None = None
    inject_t: Poly | None = None
    with_bound: bool = False


_CHECKS = {
    "main": check_thm_main,
    "extended": check_thm_extended,
    "direct": lambda c: dual_containing_route(c) is not None,
}


def _search_trial(cfg: SearchConfig, trial: int) -> dict | None:
    F = field_make(cfg.q2)
    if trial == 0 and cfg.inject_t is not None:
        t = cfg.inject_t
    else:
        t = Poly(F, draw_t(trial_rng(cfg.seed, trial), cfg.n, F.order, cfg.t_weight))
    code = qc_build(cfg.n, F, cfg.g1, cfg.g2, t)
    if not _CHECKS[cfg.criterion](code):
        return None
    rec = analyze(code, budget_secs=cfg.budget_secs, with_bound=cfg.with_bound)
    rec["criterion"] = cfg.criterion
    rec["seed"] = cfg.seed
    rec["trial"] = trial
    return rec


def cmd_search(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if args.criterion not in CRITERIA:
        raise UsageError(f"--criterion must be one of {CRITERIA}")
    _apply_fixture(args)
    if args.q2 is None or args.n is None:
        raise UsageError("--q2 and --n are required (or --fixture)")
    _q_of(args.q2)
    F = field_make(args.q2)
    g1, g2 = _generators(args, F)
    inject = p_parse(args.inject_t, F) if args.inject_t else None
    if args.t_weight is not None and not 0 <= args.t_weight <= args.n:
        raise UsageError("--t-weight must lie in [0, n]")
    cfg = SearchConfig(args.q2, args.n, g1, g2, args.criterion, args.trials, args.seed, args.budget_secs,
                       args.t_weight, inject, args.with_bound)
    # validates the generators before any output is written
    qc_build(cfg.n, F, g1, g2, Poly.zero(F))
    fh, close = _open_out(args.out)
    survivors = 0
    try:
        trials = range(cfg.trials)
        if args.workers > 1:
            with ThreadPoolExecutor(max_workers=args.workers) as ex:
                results = ex.map(lambda i: _search_trial(cfg, i), trials)
                for rec in results:
                    if rec is not None:
                        survivors += 1
                        _emit(fh, rec)
        else:
            for i in trials:
                rec = _search_trial(cfg, i)
                if rec is not None:
                    survivors += 1
                    _emit(fh, rec)
        _emit(fh, {"summary": {"trials": cfg.trials, "survivors": survivors, "criterion": cfg.criterion,
                               "seed": cfg.seed, "q2": cfg.q2, "n": cfg.n, "g1": p_format(g1),
                               "g2": p_format(g2), "t_weight": cfg.t_weight}})
    finally:
        if close:
            fh.close()
    return EXIT_OK


# -- bound -------------------------------------------------------------------------

def cmd_bound(args) -> int:
    row = _apply_fixture(args)
    code = _build(args)
    rep = bound_report(code.n, code.g1, code.g2, code.t, budget_secs=args.budget_secs, workers=args.workers)
    labels = {
        "5": "case 5 (proof sum)",
        "5a": "case 5 variant 2*d(gcd(g1 t, g2))",
        "5b": "case 5 variant 2*d(gcd(g1, t g2))",
    }
    for key, iv in rep.cases.items():
        label = labels.get(key, f"case {key}")
        gens = ", ".join(rep.generators[key])
        print(f"{label:<36} {str(iv):>6}   <{gens}>" if len(gens) < 60 else f"{label:<36} {str(iv):>6}")
    print(f"{'lower bound':<36} {str(rep.bound):>6}")
    if args.out:
        fh, close = _open_out(args.out, "a")
        out = rep.to_json()
        out.update({"q2": code.field.order, "n": code.n, "g1": p_format(code.g1), "g2": p_format(code.g2),
                    "t": p_format(code.t)})
        _emit(fh, out)
        if close:
            fh.close()
    if row is not None and row.extra.get("claimed_bound") is not None:
        claimed = row.extra["claimed_bound"]
        b = rep.bound
        ok = b.lo <= claimed <= b.hi
        print(f"claimed {claimed}: {'PASS' if ok else 'FAIL'}")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


# -- cosets ------------------------------------------------------------------------

def cmd_cosets(args) -> int:
    q = _q_of(args.q2)
    try:
        cosets = all_cosets(args.n, args.q2)
    except ValueError as e:
        raise UsageError(str(e)) from e
    for c in cosets:
        kind, partner = skew_classify(c, args.n, q)
        members = ", ".join(str(m) for m in sorted(c.members))
        tail = "symmetric" if kind == "symmetric" else f"asymmetric partner=C{partner}"
        print(f"C{c.rep}: {{{members}}} {tail}")
    if args.t1:
        T = defining_set(args.n, args.q2, _reps(args.t1))
        ok = ds_dual_containing(T, q)
        print(f"T = {T} (|T| = {len(T)}): Hermitian dual-containing {str(ok).lower()}")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


# -- gv ------------------------------------------------------------------------------

def cmd_gv(args) -> int:
    if args.n <= 2 or args.d < 2:
        raise UsageError("need --n > 2 and --d >= 2")
    kmax = gv_kmax(args.n, args.d, args.q)
    p = QuantumParams(args.n, args.k, args.d, args.q)
    verdict = beats_gv(p)
    print(f"[[{args.n},{args.k},{args.d}]]_{args.q}")
    print(f"k_GV = {kmax}" + (" (no k' qualifies; verdict is vacuous)" if kmax == 0 else ""))
    if kmax:
        lhs, rhs = gv_sides(args.n, kmax, args.d, args.q)
        print(f"at k' = {kmax}: q^(n-k'+2) - 1 = {lhs}")
        print(f"            (q^2 - 1) * sum  = {rhs}")
    print(f"beats GV: {str(verdict).lower()}")
    return EXIT_OK if verdict else EXIT_FAIL


# -- tables ---------------------------------------------------------------------------

def _claims(row: Fixture) -> tuple[tuple | None, tuple | None]:
    nkd, qu = row.claimed_nkd, row.claimed_quantum
    err = row.erratum or {}
    if "claimed_nkd" in err:
        nkd = tuple(err["claimed_nkd"])
    if "claimed_quantum" in err:
        qu = tuple(err["claimed_quantum"])
    return nkd, qu


def _table_row(row: Fixture, args) -> tuple[str, dict]:
    rec: dict = {"id": row.id, "table": row.table}
    if not row.has_code:
        base = [QuantumParams(n, k, d, 2) for n, k, d in TABLE1_BASE]
        n, k, d = row.claimed_quantum
        reach = propagation_closure(base, max_n=n, min_k=k)
        steps = reach.get((n, k, d, row.q))
        rec["propagation_steps"] = steps
        return ("PASS" if steps is not None else "FAIL"), rec
    code = row.code()
    nkd, qu = _claims(row)
    with_bound = row.extra.get("claimed_bound") is not None
    a = analyze(code, budget_secs=args.budget_secs, workers=args.workers, with_bound=with_bound)
    rec.update(a)
    fails = []
    partial = False
    if nkd:
        if a["length"] != nkd[0]:
            fails.append(f"length {a['length']} != {nkd[0]}")
        if a["dim"] != nkd[1]:
            fails.append(f"dim {a['dim']} != {nkd[1]}")
    if not a["check_dual_containing_direct"]:
        fails.append("not dual-containing")
    dist = a["distance"]
    if nkd and nkd[2] is not None:
        if dist["exact"]:
            if dist["lower"] != nkd[2]:
                fails.append(f"d {dist['lower']} != {nkd[2]}")
        elif dist["lower"] <= nkd[2] <= dist["upper"]:
            partial = True
        else:
            fails.append(f"d in [{dist['lower']},{dist['upper']}] excludes {nkd[2]}")
    if with_bound:
        b = a["thm_lower_bound"]["bound"]
        lo, hi = (b, b) if not isinstance(b, list) else (b[0], b[1] if b[1] is not None else INF)
        if not lo <= row.extra["claimed_bound"] <= hi:
            fails.append(f"bound {b} != {row.extra['claimed_bound']}")
    if qu:
        qa = a["quantum"]
        if qa is None:
            fails.append("no quantum code")
        else:
            if (qa["n"], qa["k"]) != tuple(qu[:2]):
                fails.append(f"quantum [[{qa['n']},{qa['k']}]] != [[{qu[0]},{qu[1]}]]")
            if qu[2] is not None and qa["d_status"] == "exact" and qa["d"] != qu[2]:
                fails.append(f"quantum d {qa['d']} != {qu[2]}")
            if qu[2] is not None:
                p = QuantumParams(qu[0], qu[1], qu[2], row.q)
                if p.n > 2 and p.d >= 2 and not beats_gv(p):
                    fails.append("claimed quantum code does not beat GV")
    rec["failures"] = fails
    if fails:
        return "FAIL", rec
    return ("PASS (partial)" if partial else "PASS (full)"), rec


def _row_label(row: Fixture) -> str:
    if row.claimed_nkd and row.has_code:
        n, k, d = row.claimed_nkd
        return f"[{n},{k},{'?' if d is None else d}]_{row.q2}"
    if row.claimed_quantum:
        n, k, d = row.claimed_quantum
        return f"[[{n},{k},{'?' if d is None else d}]]_{row.q}"
    return ""


def cmd_tables(args) -> int:
    rows = load_fixtures(args.fixtures)
    if args.table:
        wanted = {str(t) for t in args.table}
        rows = [r for r in rows if str(r.table) in wanted]
    if args.rows:
        wanted = set(args.rows.split(","))
        rows = [r for r in rows if r.id in wanted]
    fh, close = (None, False) if not args.out else _open_out(args.out)
    failed = 0
    try:
        for row in rows:
            verdict, rec = _table_row(row, args)
            rec["verdict"] = verdict
            extra = ""
            if row.erratum:
                extra = f"  [erratum: {row.erratum['note']}]"
            if rec.get("failures"):
                extra += "  " + "; ".join(rec["failures"])
            print(f"{row.id:<6} {_row_label(row):<18} {verdict}{extra}", flush=True)
            failed += verdict == "FAIL"
            if fh is not None:
                _emit(fh, rec)
    finally:
        if close:
            fh.close()
    print(f"{len(rows) - failed}/{len(rows)} rows pass")
    return EXIT_FAIL if failed else EXIT_OK


# -- parser ----------------------------------------------------------------------------

def _code_args(p: argparse.ArgumentParser, need_t: bool = True) -> None:
    p.add_argument("--fixture", help="take q2, n, g1, g2, t from a bundled fixture row (e.g. ex1, T2.1)")
    p.add_argument("--q2", type=int, help="field order q^2 (4, 9, 16 or 25)")
    p.add_argument("--n", type=int, help="block length n (code length 2n)")
    p.add_argument("--g1", help="g1 in compact notation, e.g. 10320102301")
    p.add_argument("--g2", help="g2 in compact notation")
    p.add_argument("--t1", help="defining set of g1 as comma-separated coset representatives")
    p.add_argument("--t2", help="defining set of g2 as comma-separated coset representatives")
    if need_t:
        p.add_argument("--t", help="t(x) in compact notation")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-secs", type=float, default=60.0, help="time budget per distance computation")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="append JSON-lines records here")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hermqc", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify", help="check one construction")
    _code_args(p)
    _common(p)
    p.add_argument("--d", type=int, help="use this distance for the quantum code instead of computing it")
    p.add_argument("--no-bound", action="store_true", help="skip the theorem lower bound")
    p.add_argument("--no-distance", action="store_true", help="skip the minimum distance")
    p.add_argument("--timestamp", action="store_true", help="add a wall-clock timestamp to the record")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="random search over t(x)")
    _code_args(p, need_t=False)
    _common(p)
    p.add_argument("--criterion", default="extended", choices=CRITERIA)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t-weight", type=int, help="draw t with exactly this many nonzero coefficients")
    p.add_argument("--inject-t", help="use this t for trial 0")
    p.add_argument("--with-bound", action="store_true", help="also compute the theorem lower bound")
    p.set_defaults(func=cmd_search, t=None)

    p = sub.add_parser("bound", help="theorem lower bound with every case")
    _code_args(p)
    _common(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("cosets", help="cyclotomic cosets and their skew classification")
    p.add_argument("--q2", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t1", help="test this defining set (coset representatives) for dual containment")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("gv", help="quantum Gilbert-Varshamov check")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_gv)

    p = sub.add_parser("tables", help="re-check every bundled table row")
    _common(p)
    p.add_argument("--table", action="append", help="restrict to a table (repeatable; 'example' for examples)")
    p.add_argument("--rows", help="comma-separated row ids")
    p.add_argument("--fixtures", help="alternative fixture file")
    p.set_defaults(func=cmd_tables)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, PolyParseError, FixtureError) as e:
        print(f"hermqc: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        # precondition failures (non-divisor generators, bad defining sets, ...)
        print(f"hermqc: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
