"""Command-line front end.

Subcommands: analyze, eval, gauss, hilbert, quat (split | decide), family,
polyrep, verify.  Every command accepts --json for machine-readable output
conforming to the committed schema (schema/cli_output.schema.json).

Exit codes: 0 success, 1 mathematical error, 2 usage error (including
malformed expressions and dyadic valuation descriptors, which are rejected
at parse time), 3 oracle disagreement from verify.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from .conic import ConicFunctionField, DistinguishedExtension, analyze, \
    rational_residue_family
from .errors import ConicvalError, InputError
from .fields import FF, FunctionField, GF, PolyRing, QQ, is_square
from .gauss import GaussExtension, gauss_residue, quadratic_extension_analysis, \
    subfield_degree
from .oracle import (OracleReport, degree_oracle, hensel_count,
                     isotropy_search, sample_rational, sample_ratfunc,
                     valuation_axiom_fuzz)
from .parser import parse_element
from .quaternion import (QuaternionAlgebra, decide_unramified_extension,
                         hilbert_symbol, is_split, rational_support)
from .valuation import (InfinitePlaceValuation, PAdicValuation,
                        PlaceValuation, Valuation)
from .value import Value


# ---------------------------------------------------------------------------
# descriptor parsing
# ---------------------------------------------------------------------------

_GF_EXT = re.compile(r"^GF\((\d+)\)\[(\w+)\]/\((.+)\)$")
_GF = re.compile(r"^GF\((\d+)\)$")
_FQT = re.compile(r"^Fq\(t\):q=(\d+)$")


def parse_base_field(desc: str):
    desc = desc.strip()
    try:
        if desc == "Q":
            return QQ
        if desc == "Q(t)":
            return FunctionField(QQ, "t")
        m = _GF.match(desc)
        if m:
            return GF(int(m.group(1)))
        m = _GF_EXT.match(desc)
        if m:
            p, var, mod = int(m.group(1)), m.group(2), m.group(3)
            prime = FF(p, var=var)
            ring = PolyRing(prime, var)
            poly = parse_element(mod, _PolyContext(ring), {var: ring.gen()})
            return FF(p, tuple(c.coeffs[0] for c in _as_poly(poly, ring).coeffs),
                      var=var)
        m = _FQT.match(desc)
        if m:
            return FunctionField(GF(int(m.group(1))), "t")
    except ConicvalError as exc:
        raise InputError(f"bad field descriptor {desc!r}: {exc}") from exc
    raise InputError(f"unrecognized field descriptor {desc!r}")


class _PolyContext:
    """Adapter so integer literals inside modulus expressions become
    constant polynomials."""

    def __init__(self, ring):
        self.ring = ring

    def from_int(self, n):
        return self.ring.from_int(n)


def _as_poly(value, ring):
    from .fields import Poly, RatFunc
    if isinstance(value, Poly):
        return value
    if isinstance(value, RatFunc):
        if value.is_polynomial():
            return value.num
        raise InputError(f"{value} is not a polynomial")
    return ring.poly([value])


def field_variables(ctx) -> dict:
    if isinstance(ctx, FunctionField):
        return {ctx.var: ctx.gen()}
    if isinstance(ctx, FF) and ctx.degree > 1:
        return {ctx.var: ctx.gen()}
    return {}


def parse_field_element(text: str, ctx):
    value = parse_element(text, ctx, field_variables(ctx))
    try:
        return ctx.coerce(value)
    except ConicvalError as exc:
        raise InputError(f"{text!r} does not describe an element of {ctx!r}: "
                         f"{exc}") from exc


def parse_valuation(desc: str) -> Valuation:
    desc = desc.strip()
    try:
        if desc.startswith("Q:"):
            m = re.match(r"^Q:p=(\d+)$", desc)
            if not m:
                raise InputError(f"unrecognized valuation descriptor {desc!r}")
            return PAdicValuation(int(m.group(1)))
        if desc.startswith("Q(t):"):
            base = FunctionField(QQ, "t")
            place = desc[len("Q(t):"):]
        else:
            m = re.match(r"^Fq\(t\):q=(\d+),(place=.*)$", desc)
            if not m:
                raise InputError(f"unrecognized valuation descriptor {desc!r}")
            base = FunctionField(GF(int(m.group(1))), "t")
            place = m.group(2)
        if not place.startswith("place="):
            raise InputError(f"missing place= in {desc!r}")
        place = place[len("place="):]
        if place == "inf":
            return InfinitePlaceValuation(base)
        poly = _as_poly(parse_element(place, base, field_variables(base)),
                        base.ring)
        return PlaceValuation(base, poly)
    except InputError:
        raise
    except ConicvalError as exc:
        raise InputError(f"bad valuation descriptor {desc!r}: {exc}") from exc


def _check_field_matches(field_ctx, v: Valuation):
    if field_ctx != v.base:
        raise InputError(
            f"--field {field_ctx!r} does not match the valuation's base "
            f"field {v.base!r}")


# ---------------------------------------------------------------------------
# command handlers: each returns (result_dict, human_lines, exit_code)
# ---------------------------------------------------------------------------


def _cmd_analyze(args):
    v = parse_valuation(args.val)
    if args.field:
        _check_field_matches(parse_base_field(args.field), v)
    a = parse_field_element(args.a, v.base)
    b = parse_field_element(args.b, v.base)
    report = analyze(v, ConicFunctionField(v.base, a, b),
                     family_count=args.family, search_bound=args.search_bound)
    d = report.as_dict()
    lines = [f"verdict: {d['verdict']} ({d['extension_kind']})",
             f"case: {d['case']}",
             f"value group: {'Z' if report.value_group.generator == 1 else '(1/2)Z'}"
             f"  cosets {d['value_group']['coset_representatives']}",
             f"residue field: {report.residue}"]
    if report.rational_warning:
        lines.append("note: b is a square, so the function field is rational "
                     "and the algebra splits")
    if report.family is not None:
        for m in report.family:
            lines.append(f"family member: pivot {m.pivot}  "
                         f"[{m.quadratic_kind}] residue {m.residue_description}")
    if report.family_note:
        lines.append(f"family note: {report.family_note}")
    return d, lines, 0


def _cmd_eval(args):
    v = parse_valuation(args.val)
    if args.field:
        _check_field_matches(parse_base_field(args.field), v)
    a = parse_field_element(args.a, v.base)
    b = parse_field_element(args.b, v.base)
    cf = ConicFunctionField(v.base, a, b)
    ext = DistinguishedExtension(v, cf)
    variables = dict(field_variables(v.base))
    variables[cf.var] = cf.ef.gen()
    f = cf.ef.coerce(parse_element(args.f, cf.ef, variables))
    g = cf.ef.coerce(parse_element(args.g, cf.ef, variables))
    elem = cf.element(f, g)
    val = ext.value_of(elem)
    result = {"element": str(elem), "value": str(val)}
    lines = [f"w*({elem}) = {val}"]
    if val == Value(0):
        res = ext.residue_of(elem)
        result["residue"] = str(res)
        lines.append(f"residue: {res}")
    return result, lines, 0


def _cmd_gauss(args):
    v = parse_valuation(args.val)
    ef = FunctionField(v.base, "x")
    variables = dict(field_variables(v.base))
    variables["x"] = ef.gen()
    pivot = ef.coerce(parse_element(args.pivot, ef, variables))
    w = GaussExtension(v, pivot)
    h = ef.coerce(parse_element(args.eval, ef, variables))
    val = w.value_of(h)
    result = {"pivot": str(pivot), "element": str(h), "value": str(val)}
    lines = [f"w({h}) = {val}"]
    if val == Value(0):
        res = gauss_residue(w, h)
        result["residue"] = str(res)
        result["residue_variable"] = w.residue_var
        lines.append(f"residue: {res}")
    return result, lines, 0


def _cmd_hilbert(args):
    place = args.place.strip()
    a = Fraction(parse_field_element(args.a, QQ))
    b = Fraction(parse_field_element(args.b, QQ))
    s = hilbert_symbol(a, b, place if place == "inf" else int(place))
    return ({"a": str(a), "b": str(b), "place": place, "symbol": s},
            [f"({a}, {b})_{place} = {s:+d}"], 0)


def _cmd_quat_split(args):
    field = parse_base_field(args.field)
    a = parse_field_element(args.a, field)
    b = parse_field_element(args.b, field)
    sr = is_split(QuaternionAlgebra(field, a, b), search_bound=args.search_bound)
    d = sr.as_dict()
    lines = [f"split: {sr.split}"]
    if sr.certificate:
        lines.append("certificate (x, y, z): "
                     + ", ".join(str(c) for c in sr.certificate))
    if sr.failing_place:
        lines.append(f"division witnessed at place {sr.failing_place}")
    if sr.note:
        lines.append(sr.note)
    return d, lines, 0


def _cmd_quat_decide(args):
    v = parse_valuation(args.val)
    if args.field:
        _check_field_matches(parse_base_field(args.field), v)
    a = parse_field_element(args.a, v.base)
    b = parse_field_element(args.b, v.base)
    verdict = decide_unramified_extension(QuaternionAlgebra(v.base, a, b), v,
                                          search_bound=args.search_bound)
    d = verdict.as_dict()
    lines = [f"kind: {verdict.kind}",
             f"normalized presentation: ({verdict.normalization.a}, "
             f"{verdict.normalization.b}) [{verdict.normalization.shape}]"]
    return d, lines, 0


def _cmd_family(args):
    v = parse_valuation(args.val)
    if args.field:
        _check_field_matches(parse_base_field(args.field), v)
    a = parse_field_element(args.a, v.base)
    b = parse_field_element(args.b, v.base)
    cf = ConicFunctionField(v.base, a, b)
    members = rational_residue_family(v, cf, args.count,
                                      search_bound=args.search_bound)
    d = {"count": len(members), "members": [m.as_dict() for m in members]}
    lines = [f"{len(members)} extension(s) with rational residue field"]
    for m in members:
        lines.append(f"  pivot {m.pivot}  v(c) = {m.c_value}  "
                     f"[{m.quadratic_kind}]")
    return d, lines, 0


def _cmd_polyrep(args):
    field = parse_base_field(args.field) if args.field else QQ
    ef = FunctionField(field, "x")
    variables = dict(field_variables(field))
    variables["x"] = ef.gen()
    y = ef.coerce(parse_element(args.pivot, ef, variables))
    degree, integral = subfield_degree(y)
    return ({"pivot": str(y), "degree": degree, "integral": integral},
            [f"[E(x) : E(Y)] = {degree}; x integral over E[Y]: {integral}"], 0)


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------


def _gauss_fixtures():
    qt = FunctionField(QQ, "t")
    f3t = FunctionField(GF(3), "t")
    f5t = FunctionField(GF(5), "t")
    vals = [
        PAdicValuation(5),
        PAdicValuation(3),
        PlaceValuation(qt, qt.ring.gen()),
        PlaceValuation(qt, qt.ring.poly([-2, 1])),
        InfinitePlaceValuation(qt),
        PlaceValuation(f3t, f3t.ring.gen()),
        PlaceValuation(f3t, f3t.ring.poly([1, 0, 1])),
        InfinitePlaceValuation(f5t),
    ]
    return vals


def _wstar_fixtures():
    qt = FunctionField(QQ, "t")
    vt = PlaceValuation(qt, qt.ring.gen())
    v5 = PAdicValuation(5)
    return [
        DistinguishedExtension(vt, ConicFunctionField(qt, -1, -1)),
        DistinguishedExtension(vt, ConicFunctionField(qt, qt.gen(), 1)),
        DistinguishedExtension(v5, ConicFunctionField(QQ, 2, 3)),
    ]


def _suite_gauss(seed, samples):
    reports = []
    for v in _gauss_fixtures():
        w = GaussExtension(v, FunctionField(v.base, "x").gen())
        reports.append(valuation_axiom_fuzz(w, samples, seed))
    return reports


def _suite_wstar(seed, samples):
    return [valuation_axiom_fuzz(ext, samples, seed,
                                 name=f"wstar_axioms[{ext.describe()}]")
            for ext in _wstar_fixtures()]


def _suite_hilbert(seed, samples):
    rng = random.Random(seed)
    bad = None
    checked = 0
    for _ in range(samples):
        a = sample_rational(rng, 10 ** 4)
        b = sample_rational(rng, 10 ** 4)
        if not a or not b:
            continue
        places = ["inf", 2] + rational_support(a, b)
        prod = 1
        for pl in places:
            prod *= hilbert_symbol(a, b, pl)
        if prod != 1:
            bad = (a, b, "product formula")
            break
        checked += 1
    return [OracleReport("hilbert_product_formula", f"seed={seed}",
                         bad is None, checked, bad)]


def _suite_degree(seed, samples):
    rng = random.Random(seed)
    f7x = FunctionField(GF(7), "x")
    bad = None
    checked = 0
    for _ in range(samples):
        y = sample_ratfunc(rng, f7x, 5, 5)
        if y.degree() < 1:
            continue
        deg, _ = subfield_degree(y)
        if deg != degree_oracle(y):
            bad = (y, "degree mismatch")
            break
        checked += 1
    return [OracleReport("degree_formula_vs_linear_algebra", f"seed={seed}",
                         bad is None, checked, bad)]


def _suite_hensel(seed, samples):
    rng = random.Random(seed)
    bad = None
    checked = 0
    for _ in range(samples):
        p = rng.choice([3, 5, 7, 11, 13])
        v = PAdicValuation(p)
        a = sample_rational(rng, 50)
        if not a:
            continue
        if int(v.value_of(a).fraction) % 2:
            continue
        ok, _root = is_square(a, QQ)
        if ok:
            continue
        kind = quadratic_extension_analysis(v, a).kind
        roots = hensel_count(v, a, 6)
        if (kind, roots) not in (("split_pair", 2), ("inert", 0)):
            bad = (p, a, kind, roots)
            break
        checked += 1
    return [OracleReport("quadratic_trichotomy_vs_hensel", f"seed={seed}",
                         bad is None, checked, bad)]


def _suite_isotropy(seed, samples):
    del seed, samples
    reports = []
    for q in (3, 5, 7, 9):
        k = GF(q)
        bad = None
        checked = 0
        for a in k.nonzero_elements():
            for b in k.nonzero_elements():
                sr = is_split(QuaternionAlgebra(k, a, b))
                point = isotropy_search(a, b)
                x, y, z = sr.certificate
                if not (sr.split and point is not None
                        and a * x * x + b * y * y == z * z):
                    bad = (a, b)
                    break
                checked += 1
            if bad:
                break
        reports.append(OracleReport(f"isotropy_exhaustive[GF({q})]", f"q={q}",
                                    bad is None, checked, bad))
    return reports


_SUITES = {
    "gauss": _suite_gauss,
    "wstar": _suite_wstar,
    "hilbert": _suite_hilbert,
    "degree": _suite_degree,
    "hensel": _suite_hensel,
    "isotropy": _suite_isotropy,
}


def _cmd_verify(args):
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in _SUITES:
            raise InputError(f"unknown suite {args.suite!r}; "
                             f"choose from {', '.join(_SUITES)} or all")
    reports = []
    for name in names:
        reports.extend(_SUITES[name](args.seed, args.samples))
    ok = all(r.agreement for r in reports)
    result = {"suite": args.suite, "seed": args.seed, "samples": args.samples,
              "agreement": ok, "reports": [r.as_dict() for r in reports]}
    lines = [f"{r.name}: {'ok' if r.agreement else 'DISAGREEMENT'} "
             f"({r.checked} checks)" for r in reports]
    lines.append("verify: " + ("all agree" if ok else "DISAGREEMENT FOUND"))
    return result, lines, 0 if ok else 3


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def build_argument_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="conicval",
        description="Exact computation with valuations on conic function "
                    "fields: Gauss extensions, Hilbert symbols, quaternion "
                    "splitting, and the distinguished extension decision.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, field=True, val=True, ab=True):
        if field:
            p.add_argument("--field", help='base field descriptor, e.g. "Q", '
                           '"Q(t)", "GF(9)", "Fq(t):q=3"')
        if val:
            p.add_argument("--val", required=True,
                           help='valuation descriptor, e.g. "Q:p=5", '
                           '"Q(t):place=t", "Fq(t):q=3,place=t^2+1", '
                           '"Fq(t):q=5,place=inf"')
        if ab:
            p.add_argument("--a", required=True, help="first coefficient")
            p.add_argument("--b", required=True, help="second coefficient")
        p.add_argument("--json", action="store_true", help="machine output")
        p.add_argument("--search-bound", type=int, default=200,
                       help="height bound for rational point searches")

    p = sub.add_parser("analyze", help="decide the distinguished extension "
                       "and report all constructive data")
    common(p)
    p.add_argument("--family", type=int, default=3,
                   help="sample size for the rational-residue family")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("eval", help="value (and residue) of f + g*s under "
                       "the distinguished extension")
    common(p)
    p.add_argument("--f", required=True, help="rational function in x")
    p.add_argument("--g", required=True, help="rational function in x")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("gauss", help="Gauss extension value and residue")
    common(p, field=False, ab=False)
    p.add_argument("--pivot", required=True, help="pivot, e.g. 5*x or t*(x-1)")
    p.add_argument("--eval", required=True, help="element of E(x)")
    p.set_defaults(handler=_cmd_gauss)

    p = sub.add_parser("hilbert", help="Hilbert symbol over Q")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--place", required=True, help="odd prime, 2, or inf")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_hilbert)

    quat = sub.add_parser("quat", help="quaternion algebra operations")
    qsub = quat.add_subparsers(dest="subcommand", required=True)
    p = qsub.add_parser("split", help="splitting test with certificate")
    p.add_argument("--field", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--search-bound", type=int, default=200)
    p.set_defaults(handler=_cmd_quat_split)
    p = qsub.add_parser("decide", help="unramified extension decision")
    common(p)
    p.set_defaults(handler=_cmd_quat_decide)

    p = sub.add_parser("family", help="extensions with rational residue field")
    common(p)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("polyrep", help="degree of E(x) over E(Y)")
    p.add_argument("--pivot", required=True, help="rational function in x")
    p.add_argument("--field", help="coefficient field (default Q)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_polyrep)

    p = sub.add_parser("verify", help="run oracle cross-check suites")
    p.add_argument("--suite", default="all",
                   help=f"one of {', '.join(_SUITES)} or all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)
    return top


def _command_name(args) -> str:
    name = args.command
    if getattr(args, "subcommand", None):
        name += "-" + args.subcommand
    return name


def main(argv=None) -> int:
    parser = build_argument_parser()
    args = parser.parse_args(argv)
    use_json = getattr(args, "json", False)
    name = _command_name(args)
    try:
        result, lines, code = args.handler(args)
    except InputError as exc:
        _emit_error(name, exc, use_json)
        return 2
    except ConicvalError as exc:
        _emit_error(name, exc, use_json)
        return 1
    if use_json:
        print(json.dumps({"command": name, "status": "ok", "result": result},
                         indent=2))
    else:
        for line in lines:
            print(line)
    return code


def _emit_error(name: str, exc: Exception, use_json: bool):
    if use_json:
        print(json.dumps({"command": name, "status": "error",
                          "error": {"type": type(exc).__name__,
                                    "message": str(exc)}}, indent=2))
    else:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
