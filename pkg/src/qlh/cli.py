"""``qlh``: verification runs and reports on q-Laguerre-Hahn forms.

Exit status is 0 when every check passes, 1 on a mathematical failure
(nonzero residual, class mismatch, broken band pattern, singular form) and
2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from .equation import (
    Triplet,
    compute_class,
    first_nonzero,
    max_residual_order,
    parity_check,
    residual,
    shift_triplet,
)
from .errors import (
    InconsistentSeeds,
    InsufficientCoefficients,
    InsufficientOrder,
    InvalidParameter,
    MissingSeed,
    ParseError,
    QLHError,
    RootOfUnity,
    ZeroDilation,
)
from .forms import MomentForm, RecurrencePair, dirac, ha_form, moments_from_recurrence, recurrence_from_moments
from .poly import Poly
from .riccati import cd_from_triplet, riccati_class, riccati_floor, riccati_residual
from .scalar import parse_scalar, validate_q
from .serialize import FIXTURE_KINDS, FixtureSpec, parse_fixture
from .structure import band_holds, mops_from_recurrence, structure_coeffs
from .transforms import (
    associated_moments,
    associated_triplet,
    brenke_associated_closed,
    brenke_fixture,
    brenke_inverse_gammas_closed,
    brenke_inverse_minimal_closed,
    corecursive_moments,
    corecursive_triplet,
    inverse_moments,
    inverse_recurrence,
    inverse_regularity,
    inverse_triplet_from,
    pearson_associated_closed,
    pearson_corecursive_closed,
    pearson_fixture,
    qclassical_fixture,
)

INPUT_ERRORS = (
    ParseError,
    InvalidParameter,
    RootOfUnity,
    ZeroDilation,
    MissingSeed,
    InsufficientOrder,
    InsufficientCoefficients,
)


class InputError(Exception):
    pass


@dataclass
class Context:
    name: str
    form: MomentForm
    triplet: Optional[Triplet]
    recurrence: Optional[RecurrencePair]
    order: int
    kind: str = "free"
    b: Optional[Fraction] = None


class Report:
    """Ordered check lines plus an overall verdict."""

    def __init__(self):
        self.lines: list = []
        self.failed = False

    def info(self, text: str):
        self.lines.append(text)

    def check(self, name: str, ok: bool, detail: str):
        self.lines.append(f"[{'pass' if ok else 'FAIL'}] {name}: {detail}")
        if not ok:
            self.failed = True

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


# ---------------------------------------------------------------- inputs


def _poly_arg(text: str) -> tuple:
    """Ascending coefficients, comma separated: "0,1" is x."""
    if text.strip() == "":
        return ()
    return tuple(parse_scalar(p) for p in text.split(","))


def _seeds_arg(text: str) -> dict:
    """"1:0,3:1/2" sets (u)_1 = 0 and (u)_3 = 1/2."""
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        k, sep, v = part.partition(":")
        if not sep:
            raise ParseError(f"seed {part!r} must look like index:value")
        try:
            out[int(k)] = parse_scalar(v)
        except ValueError:
            raise ParseError(f"seed index {k!r} is not an integer") from None
    return out


def spec_from_args(args) -> FixtureSpec:
    if args.form:
        try:
            with open(args.form, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {args.form}: {e.strerror}") from None
        spec = parse_fixture(text, args.form, args.order)
    else:
        spec = FixtureSpec(kind=args.fixture or "brenke")
        if args.order is not None:
            spec = replace(spec, order=args.order)
    over = {}
    if args.fixture and args.form:
        over["kind"] = args.fixture
    for key in ("q", "b", "mu", "a"):
        v = getattr(args, key)
        if v is not None:
            over[key] = parse_scalar(v)
    if args.phi is not None:
        over["phi"] = _poly_arg(args.phi)
    if args.psi is not None:
        over["psi"] = _poly_arg(args.psi)
    if args.bb is not None:
        over["bb"] = _poly_arg(args.bb)
    if args.seeds is not None:
        over["seeds"] = _seeds_arg(args.seeds)
    return replace(spec, **over)


def _triplet_of(spec: FixtureSpec, q) -> Optional[Triplet]:
    if spec.phi is None:
        return None
    if spec.psi is None:
        raise InputError("--phi needs --psi")
    return Triplet.normalized(Poly(spec.phi), Poly(spec.psi), Poly(spec.bb or ()), q)


def build_context(spec: FixtureSpec, order: int) -> Context:
    if order < 4:
        raise InputError("order must be at least 4")
    q = validate_q(spec.q if spec.q is not None else 2)
    if spec.kind == "brenke":
        b = spec.b if spec.b is not None else Fraction(3)
        fx = brenke_fixture(b, q, order)
        return Context(f"brenke b={b} q={q}", fx.form, fx.triplet, fx.recurrence, order, "brenke", b)
    if spec.kind == "qclassical":
        fx = qclassical_fixture(q, order)
        return Context(f"qclassical q={q}", fx.form, fx.triplet, fx.recurrence, order, "qclassical")
    t = _triplet_of(spec, q)
    if spec.kind == "pearson":
        if t is None:
            raise InputError("the pearson fixture needs --phi and --psi")
        fx = pearson_fixture(t.phi, t.psi, q, spec.seeds, order, b=t.b)
        return Context(f"pearson q={q}", fx.form, fx.triplet, fx.recurrence, order, "pearson")
    if spec.dirac is not None:
        return Context(f"dirac c={spec.dirac} q={q}", dirac(spec.dirac, order), t, None, order)
    if spec.moments is not None:
        form = MomentForm(spec.moments[: order + 1])
        if form.order < order:
            raise InputError(f"{len(spec.moments)} moments given but order {order} needs {order + 1}")
        rec = None
    else:
        rec = RecurrencePair(spec.betas, spec.gammas)
        form = moments_from_recurrence(rec, order)
    return Context(f"free q={q}", form, t, rec, order)


def _need_triplet(ctx: Context) -> Triplet:
    if ctx.triplet is None:
        raise InputError("this command needs an equation: give --phi/--psi/--bb or a triplet in the fixture")
    return ctx.triplet


def _recurrence(ctx: Context) -> RecurrencePair:
    return ctx.recurrence if ctx.recurrence is not None else recurrence_from_moments(ctx.form)


# ---------------------------------------------------------------- checks


def _fmt_triplet(t: Triplet) -> str:
    return f"phi = {t.phi}; psi = {t.psi}; B = {t.b}"


def check_residual(rep: Report, label: str, u: MomentForm, t: Triplet, upto: Optional[int] = None) -> None:
    top = max_residual_order(u, t) if upto is None else min(upto, max_residual_order(u, t))
    bad = first_nonzero(residual(u, t, top))
    if bad is None:
        rep.check(label, True, f"zero for n <= {top}")
    else:
        rep.check(label, False, f"nonzero at n = {bad[0]}, value {bad[1]}")


def run_residual(ctx: Context, args, rep: Report) -> None:
    t = _need_triplet(ctx)
    rep.info(f"equation: {_fmt_triplet(t)}")
    check_residual(rep, "residual", ctx.form, t)
    if args.a is not None:
        a = parse_scalar(args.a)
        ta = shift_triplet(t, a)
        ua = ha_form(ctx.form, 1 / a)
        rep.info(f"dilated by a = {a}: {_fmt_triplet(ta)}")
        check_residual(rep, "dilated residual", ua, ta)
        rec, reca = _recurrence(ctx).rescaled(a), recurrence_from_moments(ua)
        m = min(len(rec.gammas), len(reca.gammas))
        ok = list(rec.betas[:m]) == list(reca.betas[:m]) and list(rec.gammas[:m]) == list(reca.gammas[:m])
        rep.check("dilated recurrence", ok, f"beta_n / a and gamma_n / a^2 for n < {m}")


def run_class(ctx: Context, args, rep: Report) -> int:
    t = _need_triplet(ctx)
    cr = compute_class(ctx.form, t)
    for red in cr.attempts:
        verdict = "reduced" if red.succeeded else "kept"
        rep.info(f"root {red.c}: r = {red.r_cq}, b = {red.b_cq}, bracket = {red.bracket} -> {verdict}")
    rep.info(f"class {cr.class_value}{' (upper bound)' if cr.is_upper_bound else ''}")
    rep.info(f"kind: {cr.label}")
    rep.info(f"minimal: {_fmt_triplet(cr.minimal_triplet)}")
    for f in cr.unreduced_nonrational_factors:
        rep.info(f"untested irrational factor of phi: {f}")
    if ctx.form.is_symmetric():
        rep.check("parity", parity_check(cr.minimal_triplet, cr.class_value), "symmetric form, minimal equation")
    if args.expect_class is not None:
        rep.check("expected class", cr.class_value == args.expect_class, f"wanted {args.expect_class}, got {cr.class_value}")
    return cr.class_value


def run_riccati(ctx: Context, args, rep: Report) -> None:
    t = _need_triplet(ctx)
    r = cd_from_triplet(t, ctx.form)
    rep.info(f"B = {r.b}; C = {r.c}; D = {r.d}")
    low = max(-args.depth, riccati_floor(ctx.form, r))
    res = riccati_residual(ctx.form, r, low)
    rep.check("riccati", res.is_zero(), f"zero down to z^{low}" if res.is_zero() else f"nonzero: {res}")
    rc = riccati_class(r, ctx.form)
    cc = compute_class(ctx.form, t).class_value
    rep.check("riccati class", rc == cc, f"{rc} (moment side {cc})")


def lambda_rows(ctx: Context, t: Triplet, s: int, nmax: int) -> list:
    d = int(max(t.phi.degree, t.b.degree, 0))
    mops = None
    if ctx.recurrence is not None:
        mops = mops_from_recurrence(ctx.recurrence, nmax + d + 1)
    rows = []
    for n in range(s + 1, nmax + 1):
        rows.append((n, structure_coeffs(ctx.form, t, n, mops)))
    return rows


def run_structure(ctx: Context, args, rep: Report) -> list:
    t = _need_triplet(ctx)
    cr = compute_class(ctx.form, t)
    mt, s = cr.minimal_triplet, cr.class_value
    rows = lambda_rows(ctx, mt, s, args.nmax)
    bad = [n for n, co in rows if not band_holds(co, n, s)]
    span = f"{s + 1} <= n <= {args.nmax}"
    rep.info(f"class {s}; lambda_(n,v) for {span}")
    for n, co in rows:
        nz = ", ".join(f"{v}: {c}" for v, c in co.items() if c)
        rep.info(f"n = {n}: {nz}")
    rep.check("band", not bad, f"lambda_(n,v) = 0 for v < n - {s}, lambda_(n,n-{s}) != 0, {span}" if not bad else f"broken at n = {bad}")
    return rows


def _is_qclassical_pearson(t: Triplet) -> bool:
    return not t.b and t.phi.degree <= 2 and t.psi.degree == 1


def displayed_equation(ctx: Context, kind: str, mu) -> Optional[Triplet]:
    """The closed-form equation in circulation for this fixture and transform, if any."""
    t, q = ctx.triplet, ctx.triplet.q
    if ctx.kind == "brenke":
        if kind == "associated":
            d = brenke_associated_closed(ctx.b, q)
            return Triplet.normalized(d["phi"], d["psi"], d["b"], q)
        if kind == "inverse":
            return brenke_inverse_minimal_closed(ctx.b, q)
        return None
    if not _is_qclassical_pearson(t):
        return None
    if kind == "co-recursive":
        d = pearson_corecursive_closed(t.phi, t.psi, q, mu)
    elif kind == "associated":
        rec = _recurrence(ctx)
        d = pearson_associated_closed(t.phi, t.psi, q, rec.beta(0), rec.gamma(1))
    else:
        return None
    return Triplet.normalized(d["phi"], d["psi"], d["b"], q)


def run_transform(ctx: Context, args, rep: Report) -> dict:
    t = _need_triplet(ctx)
    u = ctx.form
    r = cd_from_triplet(t, u)
    tables = {}
    mu = parse_scalar(args.mu) if args.mu is not None else Fraction(1, 2)
    if args.kind == "co-recursive":
        rep.info(f"co-recursive mu = {mu}")
        v = corecursive_moments(u, mu)
        tv, rv = corecursive_triplet(t, r, mu)
    elif args.kind == "associated":
        rec = _recurrence(ctx)
        rep.info(f"associated beta_0 = {rec.beta(0)}, gamma_1 = {rec.gamma(1)}")
        n = min(ctx.order, 2 * (len(rec.gammas) - 1))
        v = associated_moments(rec, n)
        tv, rv = associated_triplet(t, r, rec.beta(0), rec.gamma(1))
    else:
        rec = _recurrence(ctx)
        v = inverse_moments(u)
        deltas = inverse_regularity(u, min(args.nmax, (u.order - 4) // 2))
        zero = [n for n, dl in enumerate(deltas) if dl == 0]
        rep.check("inverse regular", not zero, f"Delta_n != 0 for n <= {len(deltas) - 1}" if not zero else f"Delta_n = 0 at n = {zero}")
        tv, rv = inverse_triplet_from(t, r, rec.beta(0), rec.gamma(1))
        ir = inverse_recurrence(u)
        cheb = recurrence_from_moments(v)
        m = min(len(ir.gammas), len(cheb.gammas), args.nmax)
        rep.check("inverse recurrence", list(ir.gammas[:m]) == list(cheb.gammas[:m]) and list(ir.betas[:m]) == list(cheb.betas[:m]), f"Delta-route coefficients equal the moment-route ones for n < {m}")
        tables["gamma"] = list(cheb.gammas[:m])
        for i, g in enumerate(tables["gamma"]):
            rep.info(f"gamma(-)_{i + 1} = {g}")
        u1 = associated_moments(rec, min(u.order - 2, 2 * (len(rec.gammas) - 1)))
        g1 = rec.gamma(1)
        n14 = u1.order
        ok = all(v[n + 2] == -g1 * u1[n] for n in range(n14 + 1))
        rep.check("x^2 u^-1 = -gamma_1 u^(1)", ok, f"n <= {n14}")
        if args.display and ctx.kind == "brenke":
            closed = brenke_inverse_gammas_closed(ctx.b, t.q, m)
            hit = next((i for i, (a, c) in enumerate(zip(closed, tables["gamma"])) if a != c), None)
            detail = f"n <= {m}" if hit is None else f"gamma(-)_{hit + 1}: closed form {closed[hit]}, moments {tables['gamma'][hit]}"
            rep.check("displayed gamma(-) closed forms", hit is None, detail)
    rep.info(f"equation: {_fmt_triplet(tv)}")
    check_residual(rep, "residual", v, tv)
    low = max(-args.depth, riccati_floor(v, rv))
    res = riccati_residual(v, rv, low)
    rep.check("riccati", res.is_zero(), f"zero down to z^{low}")
    cr = compute_class(v, tv)
    rep.info(f"class {cr.class_value}{' (upper bound)' if cr.is_upper_bound else ''}; minimal: {_fmt_triplet(cr.minimal_triplet)}")
    if args.expect_class is not None:
        rep.check("expected class", cr.class_value == args.expect_class, f"wanted {args.expect_class}, got {cr.class_value}")
    if args.display:
        shown = displayed_equation(ctx, args.kind, mu)
        if shown is None:
            rep.info("no closed-form equation on record for this fixture")
        else:
            rep.info(f"displayed equation: {_fmt_triplet(shown)}")
            check_residual(rep, "displayed residual", v, shown)
    return tables


def run_report(ctx: Context, args, rep: Report) -> None:
    rep.info("== residual")
    run_residual(ctx, args, rep)
    rep.info("== class")
    run_class(ctx, args, rep)
    rep.info("== riccati")
    run_riccati(ctx, args, rep)
    rep.info("== structure")
    run_structure(ctx, args, rep)
    for kind in ("co-recursive", "associated", "inverse"):
        rep.info(f"== transform {kind}")
        sub = argparse.Namespace(**{**vars(args), "kind": kind, "expect_class": None, "display": False})
        run_transform(ctx, sub, rep)


# ---------------------------------------------------------------- CSV


def _frac_rows(rows, out):
    w = csv.writer(out, lineterminator="\n")
    for row in rows:
        w.writerow(row)


def csv_lambda(rows) -> str:
    out = io.StringIO()
    body = [("n", "nu", "numerator", "denominator")]
    for n, co in rows:
        for v, c in co.items():
            c = Fraction(c)
            body.append((n, v, c.numerator, c.denominator))
    _frac_rows(body, out)
    return out.getvalue()


def csv_sequence(name: str, values) -> str:
    out = io.StringIO()
    body = [("n", "numerator", "denominator")]
    for i, c in enumerate(values, start=1):
        c = Fraction(c)
        body.append((i, c.numerator, c.denominator))
    _frac_rows(body, out)
    return out.getvalue()


def csv_checks(rep: Report) -> str:
    out = io.StringIO()
    body = [("status", "check", "detail")]
    for line in rep.lines:
        if line.startswith("["):
            status, _, rest = line.partition("] ")
            name, _, detail = rest.partition(": ")
            body.append((status[1:], name, detail))
    _frac_rows(body, out)
    return out.getvalue()


# ---------------------------------------------------------------- entry


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fixture", choices=FIXTURE_KINDS, help="named form (default brenke)")
    common.add_argument("--form", metavar="PATH", help="fixture file (JSON or YAML)")
    common.add_argument("--q", help="q as an exact rational (default 2)")
    common.add_argument("--b", help="Brenke parameter b (default 3)")
    common.add_argument("--mu", help="co-recursive parameter (default 1/2)")
    common.add_argument("--a", help="dilation parameter")
    common.add_argument("--order", type=int, help="moments (u)_0..(u)_N to use (default 40)")
    common.add_argument("--phi", help="ascending coefficients of phi, e.g. 0,1")
    common.add_argument("--psi", help="ascending coefficients of psi")
    common.add_argument("--bb", help="ascending coefficients of B")
    common.add_argument("--seeds", help="moment seeds index:value,... for the pearson fixture")
    common.add_argument("--format", choices=("text", "csv"), default="text")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--expect-class", type=int, help="fail unless the computed class equals this")
    common.add_argument("--depth", type=int, default=40, help="check the Riccati residual down to z^-depth")
    common.add_argument("--nmax", type=int, default=12, help="largest n in structure and inverse tables")
    common.add_argument(
        "--display",
        action="store_true",
        help="transform: also check the closed-form equation quoted in the literature for this fixture",
    )

    p = argparse.ArgumentParser(prog="qlh", description="Exact checks on q-Laguerre-Hahn forms.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("residual", parents=[common], help="residual of the equation on the moments")
    sub.add_parser("class", parents=[common], help="class and minimal equation")
    sub.add_parser("riccati", parents=[common], help="Riccati data and residual of the Stieltjes series")
    sub.add_parser("structure", parents=[common], help="structure relation coefficients")
    tp = sub.add_parser("transform", parents=[common], help="co-recursive, associated or inverse form")
    tp.add_argument("kind", choices=("co-recursive", "associated", "inverse"))
    sub.add_parser("report", parents=[common], help="all of the above")
    return p


def run(argv=None) -> tuple:
    """Parse ``argv`` and run; returns (exit code, report text, error text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0), "", ""
    try:
        spec = spec_from_args(args)
        order = spec.order if spec.order is not None else 40
        ctx = build_context(spec, order)
        rep = Report()
        rep.info(f"form: {ctx.name}, order {ctx.order}")
        payload = None
        if args.command == "residual":
            run_residual(ctx, args, rep)
        elif args.command == "class":
            run_class(ctx, args, rep)
        elif args.command == "riccati":
            run_riccati(ctx, args, rep)
        elif args.command == "structure":
            rows = run_structure(ctx, args, rep)
            payload = csv_lambda(rows)
        elif args.command == "transform":
            tables = run_transform(ctx, args, rep)
            if "gamma" in tables:
                payload = csv_sequence("gamma", tables["gamma"])
        else:
            run_report(ctx, args, rep)
    except (InputError, *INPUT_ERRORS) as e:
        return 2, "", f"qlh: input error: {e}\n"
    except (InconsistentSeeds, QLHError) as e:
        return 1, "", f"qlh: {type(e).__name__}: {e}\n"
    if args.format == "csv":
        text = payload if payload is not None else csv_checks(rep)
    else:
        text = rep.text()
    code = 1 if rep.failed else 0
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as e:
            return 2, "", f"qlh: cannot write {args.out}: {e.strerror}\n"
        return code, "", ""
    return code, text, ""


def main(argv=None) -> int:
    code, out, err = run(argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
