"""Command-line front end: ``jackmoments <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

from . import __version__
from . import cauchymoments as cm
from . import jacobimoments as jm
from .errors import JackMomentsError
from .hyperjack import SeriesControl
from .results import MomentResult
from .verify import default_workers, run_suite

CSV_SCHEMA_VERSION = 1
RESULT_COLUMNS = ["value", "abs_error_estimate", "truncation_weight", "converged"]
COMPUTED = {"value", "abs_error_estimate", "prefactor_finite", "prefactor_ratio_to_leading",
            "finite_N_leading_estimate"}


def _floats(text: str) -> list[float]:
    """'0.1,0.5' or 'start:stop:count' (inclusive, evenly spaced)."""
    if ":" in text:
        a, b, n = text.split(":")
        n = int(n)
        if n == 1:
            return [float(a)]
        return [float(a) + (float(b) - float(a)) * k / (n - 1) for k in range(n)]
    return [float(x) for x in text.split(",") if x.strip()]


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _fmt(v, full: bool = True) -> str:
    """Computed floats get 17 significant digits; inputs keep their shortest round-trip form."""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return format(v, ".17g") if full else repr(v)
    return str(v)


def _ctrl(args) -> SeriesControl:
    return SeriesControl(max_weight=args.max_weight, rel_tol=args.rel_tol)


def _row(params: dict, res: MomentResult, extra: dict | None = None) -> dict:
    row = dict(params)
    row.update(value=float(res.value), abs_error_estimate=float(res.abs_error_estimate),
               truncation_weight=int(res.truncation_weight), converged=bool(res.converged))
    if extra:
        row.update(extra)
    return row


# -- single-cell evaluators (shared by the direct subcommands and `table`) ----


def eval_charfn(N, s, beta, t, ctrl):
    if N == "inf":
        return _row({"N": "inf", "s": s, "beta": beta, "t": t}, cm.charfn_limit(s, beta, t, ctrl))
    return _row({"N": N, "s": s, "beta": beta, "t": t}, cm.charfn_finite(int(N), s, beta, t))


def eval_density(s, beta, T, ctrl):
    return _row({"s": s, "beta": beta, "T": T}, cm.density_limit(s, beta, T, ctrl))


def eval_moment(s, beta, h, ctrl):
    res = cm.moment_limit(s, beta, h, ctrl)
    return _row({"s": s, "beta": beta, "h": h}, res,
                {"half_integer_limit": bool(res.meta.get("half_integer_limit", False))})


def eval_jointmoment(s, beta, h, ctrl, finite_prefactor=None):
    res = cm.joint_moment_limit(s, beta, h, ctrl)
    extra = {"half_integer_limit": bool(res.meta.get("half_integer_limit", False))}
    if finite_prefactor is not None:
        N = int(finite_prefactor)
        pf = cm.prefactor_finite(N, s, beta, h)
        extra.update(
            N=N,
            prefactor_finite=pf.value,
            prefactor_ratio_to_leading=cm.prefactor_asymptotic_ratio(N, s, beta, h),
            # leading-order F_{N,beta}(s,h): finite prefactor times N^{2h} m_inf
            finite_N_leading_estimate=pf.value * N ** (2 * h) * res.meta["moment"],
        )
    return _row({"s": s, "beta": beta, "h": h}, res, extra)


def eval_jacobi(N, a, b, beta, p, limit=False):
    if limit:
        v = jm.inv_moment_limit(a, beta, p)
        return _row({"N": "inf", "a": a, "b": b, "beta": beta, "p": p}, MomentResult(v, 0.0, p, True))
    v = jm.inv_moment_finite(jm.JacobiParams(N, a, b, beta), p)
    return _row({"N": N, "a": a, "b": b, "beta": beta, "p": p}, MomentResult(v, 0.0, p, True))


# -- output ---------------------------------------------------------------------


def manifest(args, params: dict) -> dict:
    return {
        "subcommand": args.command,
        "parameters": params,
        "series_control": {"max_weight": args.max_weight, "rel_tol": args.rel_tol, "consecutive_small": 3},
        "seed": getattr(args, "seed", None),
        "tool": "jackmoments",
        "version": __version__,
        "csv_schema_version": CSV_SCHEMA_VERSION,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def render(rows: list[dict], man: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"manifest": man, "rows": rows}, indent=2, default=_fmt) + "\n"
    cols = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_fmt(r.get(c, ""), c in COMPUTED) for c in cols])
    buf.write("# abs_error_estimate and truncation_weight are series convergence metadata;"
              " truncation_weight=-1 means no series was summed\n")
    buf.write("# manifest: " + json.dumps(man) + "\n")
    return buf.getvalue()


def _emit(args, rows, params):
    text = render(rows, manifest(args, params), args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _pmap(fn, cells, workers):
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(lambda c: fn(*c), cells))


# -- subcommands ------------------------------------------------------------------


def cmd_charfn(args):
    ts = _floats(args.t_grid) if args.t_grid else [args.t]
    N = "inf" if str(args.N).lower() in ("inf", "infinity") else int(args.N)
    ctrl = _ctrl(args)
    rows = _pmap(lambda t: eval_charfn(N, args.s, args.beta, t, ctrl), [(t,) for t in ts], args.workers)
    _emit(args, rows, {"N": N, "s": args.s, "beta": args.beta, "t": ts})


def cmd_density(args):
    ctrl = _ctrl(args)
    Ts = _floats(args.T_grid)
    rows = _pmap(lambda T: eval_density(args.s, args.beta, T, ctrl), [(T,) for T in Ts], args.workers)
    _emit(args, rows, {"s": args.s, "beta": args.beta, "T": Ts})


def cmd_moment(args):
    _emit(args, [eval_moment(args.s, args.beta, args.h, _ctrl(args))], {"s": args.s, "beta": args.beta, "h": args.h})


def cmd_jointmoment(args):
    row = eval_jointmoment(args.s, args.beta, args.h, _ctrl(args), args.finite_prefactor)
    _emit(args, [row], {"s": args.s, "beta": args.beta, "h": args.h, "finite_prefactor": args.finite_prefactor})


def cmd_jacobi(args):
    row = eval_jacobi(args.N, args.a, args.b, args.beta, args.p, args.limit)
    _emit(args, [row], {"N": args.N, "a": args.a, "b": args.b, "beta": args.beta, "p": args.p, "limit": args.limit})


def cmd_verify(args):
    results = run_suite(args.suite, args.seed, args.workers)
    for r in results:
        print(r.line())
    n_fail = sum(not r.passed for r in results)
    print(f"{len(results) - n_fail}/{len(results)} checks passed (suite={args.suite}, seed={args.seed})")
    return 0 if n_fail == 0 else 1


TABLE_QUANTITIES = ("charfn", "density", "moment", "jointmoment", "jacobi")


def cmd_table(args):
    ctrl = _ctrl(args)
    q = args.quantity
    if q == "charfn":
        Ns = ["inf" if x.strip().lower() == "inf" else int(x) for x in args.N.split(",")]
        grid = list(itertools.product(Ns, _ints(args.s), _floats(args.beta), _floats(args.t)))
        fn = lambda N, s, b, t: eval_charfn(N, s, b, t, ctrl)  # noqa: E731
        params = {"N": Ns, "s": _ints(args.s), "beta": _floats(args.beta), "t": _floats(args.t)}
    elif q == "density":
        grid = list(itertools.product(_ints(args.s), _floats(args.beta), _floats(args.T)))
        fn = lambda s, b, T: eval_density(s, b, T, ctrl)  # noqa: E731
        params = {"s": _ints(args.s), "beta": _floats(args.beta), "T": _floats(args.T)}
    elif q in ("moment", "jointmoment"):
        grid = list(itertools.product(_ints(args.s), _floats(args.beta), _floats(args.h)))
        ev = eval_moment if q == "moment" else eval_jointmoment
        fn = lambda s, b, h: ev(s, b, h, ctrl)  # noqa: E731
        params = {"s": _ints(args.s), "beta": _floats(args.beta), "h": _floats(args.h)}
    else:
        grid = list(itertools.product(_ints(args.N), _floats(args.a), _floats(args.b), _floats(args.beta),
                                      _ints(args.p)))
        fn = lambda N, a, b, beta, p: eval_jacobi(N, a, b, beta, p, args.limit)  # noqa: E731
        params = {"N": _ints(args.N), "a": _floats(args.a), "b": _floats(args.b), "beta": _floats(args.beta),
                  "p": _ints(args.p), "limit": args.limit}

    def safe(*cell):
        try:
            return fn(*cell)
        except JackMomentsError as exc:
            return {"cell": list(cell), "error": str(exc)}

    rows = _pmap(safe, grid, args.workers)
    _emit(args, rows, {"quantity": q, **params})


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    common.add_argument("--max-weight", type=int, default=40)
    common.add_argument("--rel-tol", type=float, default=1e-12)
    common.add_argument("--seed", type=int, default=7)
    common.add_argument("--workers", type=int, default=default_workers(),
                        help="worker threads (default from $JACKMOMENTS_WORKERS)")

    p = argparse.ArgumentParser(prog="jackmoments", description=__doc__)
    p.add_argument("--version", action="version", version=f"jackmoments {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("charfn", parents=[common], help="characteristic function of the Cauchy trace")
    c.add_argument("--N", required=True, help="integer, or 'inf' for the scaled limit")
    c.add_argument("--s", type=int, required=True)
    c.add_argument("--beta", type=float, required=True)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--t", type=float)
    g.add_argument("--t-grid", help="'a,b,c' or 'start:stop:count'")
    c.set_defaults(func=cmd_charfn)

    d = sub.add_parser("density", parents=[common], help="limiting density of T/N")
    d.add_argument("--s", type=int, required=True)
    d.add_argument("--beta", type=float, required=True)
    d.add_argument("--T-grid", required=True, dest="T_grid")
    d.set_defaults(func=cmd_density)

    m = sub.add_parser("moment", parents=[common], help="limiting moment of |T/N|^{2h}")
    m.add_argument("--s", type=int, required=True)
    m.add_argument("--beta", type=float, required=True)
    m.add_argument("--h", type=float, required=True)
    m.set_defaults(func=cmd_moment)

    j = sub.add_parser("jointmoment", parents=[common], help="scaled joint moment limit")
    j.add_argument("--s", type=int, required=True)
    j.add_argument("--beta", type=float, required=True)
    j.add_argument("--h", type=float, required=True)
    j.add_argument("--finite-prefactor", type=int, default=None, metavar="N")
    j.set_defaults(func=cmd_jointmoment)

    jc = sub.add_parser("jacobi", parents=[common], help="moments of sum 1/u_j, Jacobi ensemble")
    jc.add_argument("--N", type=int, default=1)
    jc.add_argument("--a", type=float, required=True)
    jc.add_argument("--b", type=float, default=0.0)
    jc.add_argument("--beta", type=float, required=True)
    jc.add_argument("--p", type=int, required=True)
    jc.add_argument("--limit", action="store_true", help="scaled N -> infinity limit")
    jc.set_defaults(func=cmd_jacobi)

    v = sub.add_parser("verify", parents=[common], help="run the oracle cross-checks")
    v.add_argument("--suite", choices=("quick", "full"), default="quick")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", parents=[common], help="Cartesian parameter grid")
    t.add_argument("quantity", choices=TABLE_QUANTITIES)
    t.add_argument("--N", default="1")
    t.add_argument("--s", default="1")
    t.add_argument("--beta", default="2")
    t.add_argument("--t", default="1")
    t.add_argument("--T", default="0")
    t.add_argument("--h", default="0.5")
    t.add_argument("--a", default="2")
    t.add_argument("--b", default="0")
    t.add_argument("--p", default="1")
    t.add_argument("--limit", action="store_true")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args)
    except (JackMomentsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return int(rc or 0)


if __name__ == "__main__":
    sys.exit(main())
