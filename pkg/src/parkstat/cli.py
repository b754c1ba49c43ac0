"""Command-line interface: ``parkstat enumerate | poly | verify | bfile``.

Exit codes: 0 when everything checks out, 1 on a mathematical mismatch,
2 on a usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import expectations as ex
from . import suites
from .expectations import BUILTIN_CHI, FAMILIES, PreconditionError
from .forests import enumerate_forests
from .parking import enumerate_pf, enumerate_upf, hess_sequences, upf_act, upf_content
from .qalgebra import identities as qid
from .qalgebra.poly import Poly
from .qalgebra.qnumbers import BiPoly, a_inv_asc, pf_q, upf_q
from .report import Report, combine
from .sequences import SEQUENCES, first_divergence, format_bfile, parse_bfile, terms
from .symfunc import (SymF, pf_symfunc, pf_symfunc_graded, upf_symfunc, upf_symfunc_graded,
                      verify_h_e, verify_pf_sym_gf, verify_pf_sym_recursion, verify_ps_inversion,
                      verify_specialization, verify_upf_graded_gf, verify_upf_sym_gf)
from .words import enumerate_cayley, permutations_of, sign

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PF_CAP = 8
SERIES_CAP = 12
DEFAULT_MAX_N = 5
EXTENDED_MAX_N = 6
DEFAULT_N = 6


class UsageError(Exception):
    pass


# -- enumerate -------------------------------------------------------------

ENUMERATORS = {
    "pf": enumerate_pf,
    "upf": enumerate_upf,
    "cayley": enumerate_cayley,
    "forests": enumerate_forests,
    "hess": hess_sequences,
    "sn": permutations_of,
    "sn_plus": lambda n: (s for s in permutations_of(n) if sign(s) == 1),
}

COLUMN = {"forests": "forest", "hess": "sequence"}


def _serialize(family: str, item) -> str:
    return item.format() if family == "forests" else " ".join(map(str, item))


def cmd_enumerate(args, out) -> int:
    _cap_n(args.n, args)
    items = list(ENUMERATORS[args.family](args.n))
    items.sort(key=lambda x: x.parent if args.family == "forests" else x)
    rows = [_serialize(args.family, x) for x in items]
    if args.format == "json":
        out.write(json.dumps({"family": args.family, "n": args.n, "items": rows, "count": len(rows)}) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([COLUMN.get(args.family, "word")])
        writer.writerows([r] for r in rows)
        out.write(buf.getvalue())
        out.write(f"# count {len(rows)}\n")
    else:
        for r in rows:
            out.write(r + "\n")
        out.write(f"count {len(rows)}\n")
    return EXIT_OK


# -- poly ------------------------------------------------------------------

POLYS = {
    "pf_q": pf_q,
    "upf_q": upf_q,
    "a_inv_asc": a_inv_asc,
    "pf_sym": pf_symfunc,
    "pf_sym_t": pf_symfunc_graded,
    "upf_sym": upf_symfunc,
    "upf_sym_t": upf_symfunc_graded,
}


def _to_json(value) -> dict:
    if isinstance(value, SymF):
        return value.to_dict()
    if isinstance(value, BiPoly):
        return {"terms": [{"q": i, "t": j, "coeff": str(c)} for (i, j), c in sorted(value.terms.items())]}
    return {"coefficients": [str(c) for c in value.coeffs]}


def cmd_poly(args, out) -> int:
    _cap_n(args.n, args)
    value = POLYS[args.which](args.n)
    if args.format == "json":
        payload = {"which": args.which, "n": args.n, "text": value.format(unicode=True)}
        payload.update(_to_json(value))
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        out.write(value.format(unicode=True) + "\n")
    return EXIT_OK


# -- corrupted inputs for negative controls --------------------------------

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_FACTOR = re.compile(r"\s*\*?\s*(?:(\d+(?:/\d+)?)|([qt])(?:\^?(\d+))?|h\[([\d,\s]*)\])")


def parse_expression(text: str) -> dict:
    """Parse ``2 + 2q``, ``4 + 4q²``, ``h[2] + 2*h[1,1]`` or ``h[1,1] + t·h[2]``.

    Returns {(q exponent, t exponent, partition or None): coefficient}.
    """
    s = text.replace("·", "*").replace("−", "-")
    s = re.sub(r"([qt])([⁰¹²³⁴⁵⁶⁷⁸⁹]+)", lambda m: m.group(1) + "^" + m.group(2).translate(_SUPERSCRIPTS), s)
    out: dict = {}
    for sgn, body in re.findall(r"([+-]?)\s*([^+-]+)", s.strip()):
        coeff, qe, te, lam, pos = Fraction(-1 if sgn == "-" else 1), 0, 0, None, 0
        body = body.strip()
        while pos < len(body):
            m = _FACTOR.match(body, pos)
            if not m or m.end() == pos:
                raise UsageError(f"cannot parse {text!r} near {body[pos:]!r}")
            num, var, exp, part = m.groups()
            if num:
                coeff *= Fraction(num)
            elif var:
                e = int(exp) if exp else 1
                qe, te = (qe + e, te) if var == "q" else (qe, te + e)
            else:
                if lam is not None:
                    raise UsageError(f"two h factors in one term of {text!r}")
                lam = tuple(int(p) for p in part.split(",") if p.strip())
            pos = m.end()
        key = (qe, te, lam)
        out[key] = out.get(key, 0) + coeff
    return {k: c for k, c in out.items() if c}


def _ints(c):
    return int(c) if c.denominator == 1 else c


def as_poly(terms: dict) -> Poly:
    if any(te or lam is not None for (_, te, lam) in terms):
        raise UsageError("expected a polynomial in q")
    deg = max((qe for qe, _, _ in terms), default=0)
    return Poly([_ints(terms.get((k, 0, None), Fraction(0))) for k in range(deg + 1)])


def as_bipoly(terms: dict) -> BiPoly:
    if any(lam is not None for (_, _, lam) in terms):
        raise UsageError("expected a polynomial in q and t")
    return BiPoly({(qe, te): _ints(c) for (qe, te, _), c in terms.items()})


def as_symf(terms: dict) -> SymF:
    if any(lam is None or qe for (qe, _, lam) in terms):
        raise UsageError("expected a combination of h[...] with coefficients in t")
    graded = any(te for (_, te, _) in terms)
    coeffs: dict = {}
    for (_, te, lam), c in terms.items():
        coeffs.setdefault(lam, {})[te] = _ints(c)
    out = {}
    for lam, by_t in coeffs.items():
        if graded:
            out[lam] = Poly([Fraction(by_t.get(j, 0)) for j in range(max(by_t) + 1)])
        else:
            out[lam] = by_t[0]
    return SymF(None, out)


CORRUPTIBLE = {
    "pf-gf": as_poly, "upf-gf": as_poly, "a-at-2": as_poly, "stanley-gf": as_bipoly,
    "pf-sym-gf": as_symf, "upf-sym-gf": as_symf, "upf-graded-gf": as_symf,
}


def _overrides(suite: str, corrupt: dict) -> dict:
    convert = CORRUPTIBLE[suite]
    return {n: convert(parse_expression(e)) for n, e in corrupt.items()}


# -- verify: tasks are (name, primitive args) so they pickle ----------------

def _t_series(suite, N, corrupt):
    ov = _overrides(suite, corrupt) if corrupt else None
    fn = {"pf-gf": qid.verify_pf_gf, "upf-gf": qid.verify_upf_gf, "stanley-gf": qid.verify_stanley_gf,
          "pf-sym-gf": verify_pf_sym_gf, "upf-sym-gf": verify_upf_sym_gf,
          "upf-graded-gf": verify_upf_graded_gf}[suite]
    return fn(N, ov)


def _t_a_at_2(n, corrupt):
    ov = _overrides("a-at-2", corrupt) if corrupt else {}
    return qid.verify_a_at_2(n, ov.get(n))


def _t_q1(N):
    pf = qid.verify_pf_gf_q1(N)
    tree = qid.at_q1(qid.pf_series(N)).coeffs
    return combine("q1-shadow", N, [
        pf, qid.verify_upf_gf_q1(N),
        Report("tree-coefficients", N, "pass" if list(tree) == qid.tree_function_coefficients(N) else "fail",
               [str(c) for c in tree], [str(c) for c in qid.tree_function_coefficients(N)]),
    ])


def _t_ps(family, n):
    if family == "upf":
        return verify_ps_inversion(enumerate_upf(n), n, upf_act, upf_content, "upf")
    return verify_ps_inversion(ENUMERATORS[family](n), n, name=family)


def _t_k_transitive(family, n, chis):
    fam = FAMILIES[family]
    return combine(f"k-transitive[{family}]", n,
                   [ex.verify_k_transitive_theorem(fam, n, BUILTIN_CHI[c]) for c in chis])


def _t_orbit(word, chis):
    fam = ex.orbit_family(word)
    n = len(word)
    return combine(fam.name, n, [ex.verify_k_transitive_theorem(fam, n, BUILTIN_CHI[c]) for c in chis])


def _t_egf(family, chi, N):
    return ex.egf_verify(FAMILIES[family], BUILTIN_CHI[chi], N)


def _t_graphical(edges, n):
    return ex.graphical_totals(edges, n)


TASKS = {
    "series": _t_series, "a-at-2": _t_a_at_2, "q1-shadow": _t_q1, "ps": _t_ps,
    "k-transitive": _t_k_transitive, "orbit": _t_orbit, "egf": _t_egf, "graphical": _t_graphical,
    "h-e": verify_h_e, "specialization": verify_specialization, "pf-sym-recursion": verify_pf_sym_recursion,
    "table1": ex.table1, "upf-totals": ex.upf_totals, "dtop-peak": ex.dtop_itop_peak_totals,
    "identities": ex.identity_checks, "bijections": suites.bijections, "forest-action": suites.forest_action,
    "properties": suites.properties, "structures": suites.structures, "worked-example": suites.worked_example,
}


def run_task(task) -> Report:
    name, args = task
    try:
        return TASKS[name](*args)
    except PreconditionError as e:
        return Report(f"{name}{list(args)}", None, "fail", None, None, {"precondition": str(e)})


GRAPHS = [((1, 2),), ((2, 1), (3, 1)), ((1, 2), (2, 3), (3, 1))]
EGF_CASES = [("sn", "inv"), ("upf", "inv"), ("cayley", "tie"), ("sn", "p132")]
RANDOM_ORBITS = 20


def _ns(cfg, lo):
    if cfg.n is not None:
        return [cfg.n] if cfg.n >= lo else []
    return list(range(lo, cfg.max_n + 1))


def _chis_for(family, n):
    out = []
    for name, chi in BUILTIN_CHI.items():
        if chi.k > n:
            continue
        if FAMILIES[family].group == "an" and n < chi.k + 2:
            continue
        out.append(name)
    return out


def suite_tasks(suite: str, cfg) -> list:
    N, corrupt = cfg.N, cfg.corrupt
    if suite in ("pf-gf", "stanley-gf", "pf-sym-gf"):
        return [("series", (suite, max(N, 1), corrupt))]
    if suite in ("upf-gf", "upf-sym-gf", "upf-graded-gf"):
        return [("series", (suite, N, corrupt))]
    if suite == "a-at-2":
        ns = sorted(set(_ns(cfg, 1)) | set(corrupt))
        return [("a-at-2", (n, corrupt)) for n in ns]
    if suite == "q1-shadow":
        return [("q1-shadow", (N,))]
    if suite == "h-e":
        return [("h-e", (N,))]
    if suite == "specialization":
        return [("specialization", (cfg.n if cfg.n is not None else cfg.max_n,))]
    if suite == "pf-sym-recursion":
        return [("pf-sym-recursion", (n,)) for n in _ns(cfg, 1)]
    if suite == "ps-inversion":
        return [("ps", (f, n)) for f in ("pf", "upf", "cayley") for n in _ns(cfg, 1)]
    if suite == "k-transitive":
        tasks = [("k-transitive", (f, n, tuple(_chis_for(f, n))))
                 for f in FAMILIES for n in _ns(cfg, 1) if _chis_for(f, n)]
        top = cfg.n if cfg.n is not None else cfg.max_n
        for fam in ex.random_orbits(RANDOM_ORBITS, top, seed=cfg.seed):
            word = fam.raw(top)[0]
            tasks.append(("orbit", (word, tuple(_chis_for("sn", top)))))
        return tasks
    if suite in ("table1", "upf-totals", "dtop-peak", "identities"):
        return [(suite, (n,)) for n in _ns(cfg, 2)]
    if suite == "graphical":
        return [("graphical", (g, n)) for g in GRAPHS for n in _ns(cfg, 3)]
    if suite == "egf":
        return [("egf", (f, c, N)) for f, c in EGF_CASES]
    if suite in ("bijections", "properties", "structures"):
        return [(suite, (n,)) for n in _ns(cfg, 0 if suite != "properties" else 1)]
    if suite == "forest-action":
        # the all-sigma sweep costs |F_n| n! actions; --extended buys it up to n = 5
        return [(suite, (n, True if cfg.extended and n <= 5 else None)) for n in _ns(cfg, 1)]
    if suite == "worked-example":
        return [("worked-example", ())]
    raise UsageError(f"unknown suite {suite!r}")


SUITES = ["pf-gf", "upf-gf", "stanley-gf", "a-at-2", "q1-shadow", "pf-sym-gf", "pf-sym-recursion",
          "upf-sym-gf", "upf-graded-gf", "ps-inversion", "h-e", "specialization", "k-transitive",
          "table1", "upf-totals", "dtop-peak", "graphical", "identities", "egf", "bijections",
          "forest-action", "properties", "structures", "worked-example"]


def threads_from(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("PARKSTAT_THREADS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"PARKSTAT_THREADS must be an integer, got {env!r}") from None
    return 1


def run_verify(cfg) -> Report:
    names = SUITES if cfg.suite == "all" else [cfg.suite]
    plan = [(name, suite_tasks(name, cfg)) for name in names]
    flat = [t for _, ts in plan for t in ts]
    threads = threads_from(cfg)
    if threads > 1 and len(flat) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_task, flat))
    else:
        results = [run_task(t) for t in flat]
    # results come back in task order, so the merge is independent of scheduling
    merged, i = [], 0
    for name, ts in plan:
        merged.append(combine(name, cfg.n if cfg.n is not None else cfg.max_n, results[i:i + len(ts)]))
        i += len(ts)
    return merged[0] if len(merged) == 1 else combine("all", cfg.max_n, merged)


def cmd_verify(args, out) -> int:
    if args.corrupt and args.suite not in CORRUPTIBLE:
        raise UsageError(f"--corrupt is only supported by {', '.join(CORRUPTIBLE)}")
    if args.max_n is None:
        args.max_n = EXTENDED_MAX_N if args.extended else DEFAULT_MAX_N
    _cap_n(args.n if args.n is not None else args.max_n, args)
    report = run_verify(args)
    text = json.dumps(report.to_dict(), sort_keys=True, indent=1) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        parts = report.details if args.suite == "all" else [report.to_dict()]
        for part in parts:
            out.write(f"{part['status'].upper()} {part['identity']}\n")
    else:
        out.write(text)
    return EXIT_OK if report.ok else EXIT_FAIL


# -- bfile -----------------------------------------------------------------

def cmd_bfile(args, out) -> int:
    seq = SEQUENCES[args.seq]
    lo, hi = (args.range if args.range else (seq.offset, args.n_max))
    if hi is None:
        raise UsageError("give --n-max or --range")
    if seq.pf_sized:
        _cap_n(hi, args)
    text = format_bfile(terms(args.seq, lo, hi))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    if args.compare:
        with open(args.compare) as fh:
            diff = first_divergence(parse_bfile(text), parse_bfile(fh.read()))
        if diff is not None:
            sys.stderr.write(f"first divergence at n={diff['n']}: ours {diff['ours']}, "
                             f"fixture {diff['fixture']}\n")
            return EXIT_FAIL
    return EXIT_OK


# -- argument handling -----------------------------------------------------

def _cap_n(n, args):
    if n is not None and n < 0:
        raise UsageError("n must be nonnegative")
    if n is not None and n > PF_CAP and not args.no_caps:
        raise UsageError(f"n={n} exceeds the cap {PF_CAP}; pass --no-caps to override")
    N = getattr(args, "N", None)
    if N is not None and N > SERIES_CAP and not args.no_caps:
        raise UsageError(f"N={N} exceeds the cap {SERIES_CAP}; pass --no-caps to override")


def _corrupt_item(text):
    n, sep, expr = text.partition("=")
    if not sep or not n.strip().isdigit():
        raise argparse.ArgumentTypeError(f"expected N=EXPR, got {text!r}")
    return int(n), expr


def _range(text):
    lo, sep, hi = text.partition(":")
    if not sep:
        lo, sep, hi = text.partition("..")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parkstat", description="Parking function statistics toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--no-caps", action="store_true", help="lift the default size caps")

    e = sub.add_parser("enumerate", help="list the members of a family")
    e.add_argument("--family", required=True, choices=sorted(ENUMERATORS))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--format", choices=["text", "csv", "json"], default="text")
    common(e)

    q = sub.add_parser("poly", help="print a generating polynomial or symmetric function")
    q.add_argument("--which", required=True, choices=sorted(POLYS))
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--format", choices=["text", "json"], default="text")
    common(q)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", required=True, choices=["all"] + SUITES)
    v.add_argument("--n", type=int, help="check a single n")
    v.add_argument("--max-n", type=int, dest="max_n")
    v.add_argument("--N", type=int, default=DEFAULT_N, help="series truncation order")
    v.add_argument("--threads", type=int, help="worker processes (default: PARKSTAT_THREADS or 1)")
    v.add_argument("--extended", action="store_true", help="raise exhaustive suites to n = 6")
    v.add_argument("--output", help="write the JSON report here")
    v.add_argument("--seed", type=int, default=0, help="seed for the random orbits")
    v.add_argument("--corrupt", type=_corrupt_item, action="append", default=[], metavar="N=EXPR",
                   help="replace the n-th input polynomial (negative control)")
    common(v)

    b = sub.add_parser("bfile", help="emit an OEIS-style b-file")
    b.add_argument("--seq", required=True, choices=sorted(SEQUENCES))
    b.add_argument("--n-max", type=int, dest="n_max")
    b.add_argument("--range", type=_range, help="LO:HI")
    b.add_argument("--output")
    b.add_argument("--compare", help="local b-file to diff against")
    common(b)
    return p


COMMANDS = {"enumerate": cmd_enumerate, "poly": cmd_poly, "verify": cmd_verify, "bfile": cmd_bfile}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if getattr(args, "corrupt", None) is not None:
        args.corrupt = dict(args.corrupt)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as e:
        sys.stderr.write(f"parkstat: error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
