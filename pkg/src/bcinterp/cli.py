"""Command-line interface: compute subcommands for the library's objects and
a verification-suite runner emitting JSON or CSV reports.

Exit codes: 0 on success, 1 when a verification suite finds a failing case,
2 on usage or validation errors.  All numbers inside JSON documents are
strings of the form "p/q" so downstream consumers never round.
"""

import argparse
import csv
import json
import sys
from fractions import Fraction
from multiprocessing import Pool

from .capelli import (
    eigenvalue,
    first_order_top_check,
    gamma,
    rho_from_root_data,
    rho_relation_check,
    rho_vector,
    vanishing_theorem_check,
)
from .exactalg import (
    MultiPoly,
    SingularSystem,
    monomial_symmetric,
    rat,
    rat_str,
)
from .jack import jack, stanley_check
from .okounkov import (
    ALPHA,
    EmptyTableauSet,
    NonGenericParameter,
    check_vanishing,
    interpolation_combinatorial,
    interpolation_vanishing,
    xvars,
)
from .partitions import (
    clean,
    contains,
    enumerate_partitions,
    part,
    partitions_of,
    weight,
)
from .symfunc import (
    FieldCase,
    PropertyViolation,
    SkewShape,
    containment_necessity,
    lr_coefficient,
    rectangular_decomposition,
    restriction_multiplicity,
    rotate180,
    skew_schur,
)
from .weyl import OperatorCase, WeylElement, appendix_report

USAGE_ERRORS = (ValueError, NonGenericParameter, EmptyTableauSet,
                SingularSystem, PropertyViolation)


def parse_partition(text):
    """Comma-separated weakly decreasing nonnegative integers; an empty or
    missing value is the empty partition."""
    text = (text or "").strip()
    if not text:
        return ()
    return clean(tuple(int(piece) for piece in text.split(",")))


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2)


def _compact(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# -- compute subcommands ------------------------------------------------------

def cmd_okounkov(args):
    lam = parse_partition(args.lam)
    tau = rat(args.tau)
    alpha = None if args.alpha is None else rat(args.alpha)
    if args.method == "combinatorial":
        poly = interpolation_combinatorial(lam, args.r, tau).poly
        if alpha is not None:
            poly = poly.evaluate({ALPHA: alpha})
    else:
        if alpha is None:
            raise ValueError(
                "--method vanishing solves interpolation conditions at one "
                "numeric point and needs --alpha")
        poly = interpolation_vanishing(lam, args.r, tau, alpha)
    doc = {
        "lambda": list(lam),
        "r": args.r,
        "tau": rat_str(tau),
        "alpha": None if alpha is None else rat_str(alpha),
        "method": args.method,
        "polynomial": poly.to_json_dict(),
    }
    print(_dumps(doc))
    return 0


def cmd_jack(args):
    lam = parse_partition(args.lam)
    result = jack(lam, args.r, rat(args.tau))
    coeffs = [
        {"partition": list(mu), "coef": rat_str(c)}
        for mu, c in sorted(result.coeffs.items(), reverse=True)
    ]
    doc = {
        "lambda": list(lam),
        "r": args.r,
        "tau": rat_str(result.tau),
        "monomial_coefficients": coeffs,
        "polynomial": result.to_multipoly().to_json_dict(),
    }
    print(_dumps(doc))
    return 0


def cmd_eigenvalue(args):
    case = FieldCase(args.d, args.n, args.r)
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    doc = {
        "lambda": list(lam),
        "mu": list(mu),
        "case": {"d": case.d, "n": case.n, "r": case.r},
    }
    if args.s is None:
        doc["poly_in_s"] = eigenvalue(lam, mu, case).to_json_dict()
    else:
        doc["s"] = rat_str(rat(args.s))
        doc["value"] = rat_str(eigenvalue(lam, mu, case, rat(args.s)))
    print(_dumps(doc))
    return 0


def cmd_lr(args):
    nu = parse_partition(args.nu)
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    doc = {
        "nu": list(nu),
        "lambda": list(lam),
        "mu": list(mu),
        "coefficient": lr_coefficient(nu, lam, mu),
    }
    print(_dumps(doc))
    return 0


def cmd_branch(args):
    case = FieldCase(args.d, args.n, args.r)
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    doc = {
        "case": {"d": case.d, "n": case.n, "r": case.r},
        "lambda": list(lam),
        "mu": list(mu),
        "multiplicity": restriction_multiplicity(case, mu, lam),
    }
    print(_dumps(doc))
    return 0


def cmd_weyl_apply(args):
    op = WeylElement.from_json_dict(json.loads(args.op))
    poly = MultiPoly.from_json_dict(json.loads(args.poly))
    doc = {"result": op.apply(poly).to_json_dict()}
    print(_dumps(doc))
    return 0


# -- verification suites ------------------------------------------------------
#
# Each suite is a parameter builder plus a worker mapping one parameter tuple
# to a case row {"params", "pass", "witness"}.  Workers are module-level so a
# multiprocessing pool can dispatch them; reports merge in builder order, so
# output is deterministic for any --jobs value.

TAUS = ("1/2", "1", "2")
APPENDIX_CASES = ((1, 2, 1), (1, 3, 1), (1, 4, 2), (2, 2, 1), (2, 3, 1),
                  (4, 2, 1))


def _row(params, ok, witness=None):
    return {"params": params, "pass": bool(ok), "witness": witness or {}}


def _dual_params(max_size):
    limit = 3 if max_size is None else max_size
    out = []
    for r in (1, 2, 3):
        for lam in enumerate_partitions(limit, r):
            for tau in TAUS:
                out.append((lam, r, tau))
    return out


def _dual_worker(item):
    lam, r, tau_s = item
    params = {"lambda": list(lam), "r": r, "tau": tau_s}
    comb = interpolation_combinatorial(lam, r, rat(tau_s)).poly
    for k in range(2 * weight(lam) + 1):
        alpha = Fraction(2 * k + 1, 2)
        try:
            system = interpolation_vanishing(lam, r, rat(tau_s), alpha)
        except NonGenericParameter as exc:
            return _row(params, False,
                        {"alpha": rat_str(alpha), "error": str(exc)})
        diff = comb.evaluate({ALPHA: alpha}) - system
        if not diff.is_zero():
            return _row(params, False, {"alpha": rat_str(alpha),
                                        "residual": diff.to_json_dict()})
    return _row(params, True)


def _vanishing_params(max_size):
    limit = 3 if max_size is None else max_size
    out = []
    for r in (1, 2, 3):
        for lam in enumerate_partitions(limit, r):
            for tau in TAUS:
                out.append(("interpolation", lam, r, tau))
    for d in (1, 2, 4):
        for r in (1, 2, 3):
            for n in (2 * r, 2 * r + 1, 2 * r + 2):
                out.append(("theorem", d, n, r, limit))
    return out


def _vanishing_worker(item):
    if item[0] == "interpolation":
        _, lam, r, tau_s = item
        params = {"level": "interpolation", "lambda": list(lam), "r": r,
                  "tau": tau_s}
        target = interpolation_combinatorial(lam, r, rat(tau_s))
        for mu in enumerate_partitions(weight(lam), r):
            # must vanish at every smaller-or-equal-weight label except lam
            if check_vanishing(target, mu) != (mu != lam):
                return _row(params, False, {"mu": list(mu)})
        return _row(params, True)
    _, d, n, r, limit = item
    params = {"level": "theorem", "d": d, "n": n, "r": r}
    case = FieldCase(d, n, r)
    labels = enumerate_partitions(limit, r)
    for lam in labels:
        for nu in labels:
            if contains(lam, nu):
                continue
            if not vanishing_theorem_check(lam, nu, case):
                return _row(params, False,
                            {"lambda": list(lam), "nu": list(nu)})
    return _row(params, True)


def _stanley_params(max_size):
    limit = 3 if max_size is None else max_size
    return [(m, r, d)
            for m in range(1, limit + 1)
            for r in (1, 2, 3)
            for d in (1, 2, 4)]


def _stanley_worker(item):
    m, r, d = item
    params = {"m": m, "r": r, "d": d}
    return _row(params, stanley_check(m, r, d))


def _jack_top_params(max_size):
    limit = 4 if max_size is None else max_size
    out = []
    for r in (1, 2, 3):
        for lam in enumerate_partitions(limit, r):
            for tau in TAUS:
                out.append((lam, r, tau))
    return out


def _jack_top_worker(item):
    lam, r, tau_s = item
    tau = rat(tau_s)
    params = {"lambda": list(lam), "r": r, "tau": tau_s}
    top = interpolation_combinatorial(lam, r, tau).poly.top_homogeneous(
        xvars(r))
    squared = MultiPoly.zero(xvars(r))
    for mu, c in jack(lam, r, tau).coeffs.items():
        squared = squared + c * monomial_symmetric(mu, xvars(r), square=True)
    if top == squared:
        return _row(params, True)
    return _row(params, False, {"residual": (top - squared).to_json_dict()})


def _appendix_params(max_size):
    return list(APPENDIX_CASES)


def _appendix_worker(item):
    d, n, r = item
    report = appendix_report(OperatorCase(d, n, r))
    witness = {} if report["equal"] else {
        "normal_form_sizes": report["normal_form_sizes"]}
    return _row({"d": d, "n": n, "r": r}, report["equal"], witness)


def _rectangular_params(max_size):
    m_limit = 3 if max_size is None else max_size
    c_limit = 4 if max_size is None else max_size
    out = []
    for d in (1, 2, 4):
        for r in (1, 2):
            for n in (2 * r, 2 * r + 1):
                for m in range(m_limit + 1):
                    out.append(("decomposition", d, n, r, m))
    for d in (1, 2, 4):
        for r in (1, 2):
            for n in (2 * r, 2 * r + 1):
                for m in range(1, c_limit + 1):
                    out.append(("containment", d, n, r, m))
    out.append(("skew-rotation",))
    out.append(("lr-symmetry",))
    return out


def _rectangular_worker(item):
    kind = item[0]
    if kind == "decomposition":
        _, d, n, r, m = item
        params = {"part": kind, "d": d, "n": n, "r": r, "m": m}
        try:
            rectangular_decomposition(FieldCase(d, n, r), m)
        except PropertyViolation as exc:
            return _row(params, False, {"error": str(exc)})
        return _row(params, True)
    if kind == "containment":
        _, d, n, r, m = item
        params = {"part": kind, "d": d, "n": n, "r": r, "m": m}
        case = FieldCase(d, n, r)
        labels = [lam for lam in enumerate_partitions(3, r)
                  if part(lam, 1) <= m]
        for lam in labels:
            for nu in labels:
                if not containment_necessity(case, lam, nu, m):
                    return _row(params, False,
                                {"lambda": list(lam), "nu": list(nu)})
        return _row(params, True)
    if kind == "skew-rotation":
        params = {"part": kind, "box": 3}
        shapes = [clean(p) for w in range(10)
                  for p in partitions_of(w, 3, 3)]
        for outer in shapes:
            for inner in shapes:
                if not contains(inner, outer):
                    continue
                shape = SkewShape(outer, inner)
                if skew_schur(shape) != skew_schur(rotate180(shape)):
                    return _row(params, False, {"outer": list(outer),
                                                "inner": list(inner)})
        return _row(params, True)
    params = {"part": "lr-symmetry", "max_weight": 6}
    for w in range(7):
        for nu in partitions_of(w, w if w else 1):
            for wl in range(w + 1):
                for lam in partitions_of(wl, w if w else 1):
                    for mu in partitions_of(w - wl, w if w else 1):
                        c = lr_coefficient(nu, lam, mu)
                        if c != lr_coefficient(nu, mu, lam):
                            return _row(params, False,
                                        {"nu": list(nu), "lambda": list(lam),
                                         "mu": list(mu)})
                        if c and not (contains(lam, nu) and
                                      contains(mu, nu)):
                            return _row(params, False,
                                        {"nu": list(nu), "lambda": list(lam),
                                         "mu": list(mu)})
    return _row(params, True)


def _rho_params(max_size):
    n_limit = 10 if max_size is None else max_size
    return [(d, n, r)
            for d in (1, 2, 4)
            for r in (1, 2, 3, 4)
            for n in range(2 * r, n_limit + 1)]


def _rho_worker(item):
    d, n, r = item
    params = {"d": d, "n": n, "r": r}
    case = FieldCase(d, n, r)
    direct = [rho_vector(case).entry(i) for i in range(1, r + 1)]
    from_roots = [rho_from_root_data(case).entry(i) for i in range(1, r + 1)]
    if direct != from_roots:
        return _row(params, False,
                    {"direct": [rat_str(x) for x in direct],
                     "from_roots": [rat_str(x) for x in from_roots]})
    if not rho_relation_check(case):
        return _row(params, False, {"error": "dual shift relation broken"})
    return _row(params, True)


def _first_order_params(max_size):
    r_limit = 4 if max_size is None else max_size
    out = [("gamma", d) for d in (1, 2, 4)]
    for d in (1, 2, 4):
        for r in range(1, r_limit + 1):
            for n in (2 * r, 2 * r + 2):
                out.append(("top", d, n, r))
    return out


def _first_order_worker(item):
    if item[0] == "gamma":
        _, d = item
        value = gamma((1,), d)
        return _row({"check": "gamma", "d": d}, value == -4,
                    {} if value == -4 else {"value": rat_str(value)})
    _, d, n, r = item
    params = {"check": "top", "d": d, "n": n, "r": r}
    return _row(params, first_order_top_check(FieldCase(d, n, r)))


SUITE_ORDER = ("okounkov-dual", "vanishing", "stanley", "jack-top",
               "appendix", "rectangular", "rho", "first-order")

_SUITES = {
    "okounkov-dual": (_dual_params, _dual_worker),
    "vanishing": (_vanishing_params, _vanishing_worker),
    "stanley": (_stanley_params, _stanley_worker),
    "jack-top": (_jack_top_params, _jack_top_worker),
    "appendix": (_appendix_params, _appendix_worker),
    "rectangular": (_rectangular_params, _rectangular_worker),
    "rho": (_rho_params, _rho_worker),
    "first-order": (_first_order_params, _first_order_worker),
}


def run_suite(name, max_size=None, jobs=1):
    """Execute one named verification sweep (or 'all') and return the report
    dict {"suite", "cases", "pass"}."""
    if name == "all":
        cases = []
        for sub in SUITE_ORDER:
            for row in run_suite(sub, max_size=max_size, jobs=jobs)["cases"]:
                params = {"suite": sub}
                params.update(row["params"])
                cases.append(_row(params, row["pass"], row["witness"]))
        return {"suite": "all", "cases": cases,
                "pass": all(row["pass"] for row in cases)}
    builder, worker = _SUITES[name]
    items = builder(max_size)
    if jobs > 1 and len(items) > 1:
        with Pool(jobs) as pool:
            cases = pool.map(worker, items)
    else:
        cases = [worker(item) for item in items]
    return {"suite": name, "cases": cases,
            "pass": all(row["pass"] for row in cases)}


def _emit_csv(report):
    writer = csv.writer(sys.stdout)
    writer.writerow(["suite", "params", "pass", "witness"])
    for row in report["cases"]:
        writer.writerow([report["suite"], _compact(row["params"]),
                         "true" if row["pass"] else "false",
                         _compact(row["witness"])])


def cmd_verify(args):
    single_case = [args.d, args.n, args.r]
    if any(x is not None for x in single_case):
        if args.suite != "appendix" or any(x is None for x in single_case):
            raise ValueError(
                "--d/--n/--r select a single appendix case and need all "
                "three values with suite 'appendix'")
        report = appendix_report(OperatorCase(args.d, args.n, args.r))
        print(_dumps(report))
        return 0 if report["equal"] else 1
    report = run_suite(args.suite, max_size=args.max_size, jobs=args.jobs)
    if args.csv:
        _emit_csv(report)
    else:
        print(_dumps(report))
    return 0 if report["pass"] else 1


# -- argument tree -------------------------------------------------------------

def _add_partition_flag(parser, flag, required=True, helptext=None):
    parser.add_argument(flag, dest=flag.strip("-").replace("lambda", "lam"),
                        required=required, default=None,
                        help=helptext or "partition, e.g. 3,1")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bcinterp",
        description="Exact computations with BC-type interpolation "
                    "polynomials, Jack polynomials, and quadratic Capelli "
                    "eigenvalues, plus verification sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("okounkov", help="interpolation polynomial")
    _add_partition_flag(p, "--lambda")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--tau", required=True, help="rational, e.g. 1/2")
    p.add_argument("--alpha", help="rational; required for --method "
                                   "vanishing, optional otherwise")
    p.add_argument("--method", choices=("combinatorial", "vanishing"),
                   default="combinatorial")
    p.set_defaults(func=cmd_okounkov)

    p = sub.add_parser("jack", help="Jack polynomial in the monomial basis")
    _add_partition_flag(p, "--lambda")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--tau", required=True)
    p.set_defaults(func=cmd_jack)

    p = sub.add_parser("eigenvalue",
                       help="quadratic Capelli eigenvalue polynomial")
    _add_partition_flag(p, "--lambda")
    _add_partition_flag(p, "--mu", required=False)
    p.add_argument("--d", type=int, choices=(1, 2, 4), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", help="rational; omit for the polynomial in s")
    p.set_defaults(func=cmd_eigenvalue)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    _add_partition_flag(p, "--nu")
    _add_partition_flag(p, "--lambda")
    _add_partition_flag(p, "--mu", required=False)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("branch", help="restriction multiplicity")
    p.add_argument("--d", type=int, choices=(1, 2, 4), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_partition_flag(p, "--lambda")
    _add_partition_flag(p, "--mu", required=False)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("weyl", help="Weyl-algebra operations")
    weyl_sub = p.add_subparsers(dest="weyl_command", required=True)
    q = weyl_sub.add_parser("apply", help="apply an operator to a polynomial")
    q.add_argument("--op", required=True, help="operator JSON document")
    q.add_argument("--poly", required=True, help="polynomial JSON document")
    q.set_defaults(func=cmd_weyl_apply)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITE_ORDER + ("all",))
    p.add_argument("--max-size", type=int, default=None,
                   help="override the suite's size bound (partition weight, "
                        "degree m, or ambient n, depending on the suite)")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for independent cases")
    p.add_argument("--d", type=int, choices=(1, 2, 4),
                   help="with suite 'appendix': verify a single case")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True,
                     help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true", default=False)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print("error: bad JSON document: %s" % (exc,), file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
