"""Command-line front end.

Examples::

    laurent-med classify endo --n 2 --q "1,1" --A "0,1;1,0"
    laurent-med image member --endo --n 1 --q 3 --A 1 --f "x1 + x1^-1" --json
    laurent-med ms-test --V constant-free --n 1 --f x1 --probes "x1^-5" --M 8 --Mprime 12

Exit status is 0 on success, 1 on a semantic failure (map not locally
finite, size mismatch, ...) and 2 when an argument does not parse.
Diagnostics are a single line on stderr.
"""
import argparse
import json
import sys
from fractions import Fraction

from laurentmed.intlat import hnf, snf, zeros
from laurentmed.laurent import DimensionError
from laurentmed.maps import (
    Derivation,
    MonomialEndo,
    NotLocallyFinite,
    classify_derivation,
    classify_endo,
    orbit,
)
from laurentmed.image import (
    OrbitOverflow,
    image_description,
    image_member_derivation,
    image_member_ederivation,
)
from laurentmed.mzspace import (
    constant_free_oracle,
    image_oracle,
    kernel_ideal_oracle,
    ms_probe,
    origin_in_polytope,
)
from laurentmed.parser import (
    ParseError,
    format_fraction,
    format_matrix,
    format_poly,
    parse_int_vector,
    parse_matrix,
    parse_poly,
    parse_poly_list,
    parse_rational_list,
)

SCHEMA = "laurent-med/1"


class SemanticError(Exception):
    pass


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# serialization


def _rat(x):
    return format_fraction(x)


def _vec(v):
    return [_rat(x) if isinstance(x, Fraction) else x for x in v]


def _mat(m):
    return [list(row) for row in m] if m is not None else None


def _poly(f):
    return format_poly(f) if f is not None else None


def _membership(report):
    return {
        "member": report.member,
        "route": report.route,
        "witness": _poly(report.witness),
        "obstruction": _poly(report.obstruction),
    }


def _description(desc):
    return {
        "route": desc.route,
        "n": desc.n,
        "k0": desc.k0,
        "S": _mat(desc.S),
        "B": _mat(desc.B),
        "r": desc.r,
        "q_conj": _vec(desc.q_conj),
        "W": _mat(desc.W.basis.generators) if desc.W is not None else None,
        "T": _mat(desc.T),
        "d": list(desc.d),
        "k": desc.k,
        "s": desc.s,
        "E1": _mat(desc.E1),
        "E2": _mat(desc.E2),
    }


def _classification(res):
    out = {"kind": res.kind.value, "locally_finite": res.kind.locally_finite}
    if res.q is not None:
        out["q"] = _vec(res.q)
    if res.normal_form is not None:
        nf = res.normal_form
        out.update(S=_mat(nf.S), k=nf.k, B=_mat(nf.B), r=nf.r)
    return out


# input handling


def _parse_field(label, fn, *args):
    try:
        return fn(*args)
    except ParseError as exc:
        raise ParseError(f"--{label}: {exc.message}", exc.line, exc.column) from None


def _endo(args):
    if args.q is None or args.A is None:
        raise SemanticError("an endomorphism needs --q and --A")
    q = _parse_field("q", parse_rational_list, args.q)
    A = _parse_field("A", parse_matrix, args.A)
    n = args.n
    if len(q) != n or len(A) != n or any(len(row) != n for row in A):
        raise SemanticError(f"--q and --A must have size {n}")
    if not any(q):
        # the zero endomorphism is written with q = 0 and A = 0
        if A != zeros(n, n):
            raise SemanticError("the zero map needs A = 0")
        return MonomialEndo.zero(n)
    return MonomialEndo(n, q, A)


def _derivation(args):
    if args.coeffs is None:
        raise SemanticError("a derivation needs --coeffs")
    coeffs = _parse_field("coeffs", parse_poly_list, args.coeffs, args.n)
    if len(coeffs) != args.n:
        raise SemanticError(f"--coeffs must list {args.n} polynomials")
    return Derivation(coeffs)


def _f(args, label="f"):
    text = getattr(args, label)
    if text is None:
        raise SemanticError(f"--{label} is required")
    return _parse_field(label, parse_poly, text, args.n)


def _endo_inputs(phi):
    if phi.is_zero:
        return {"map": "endo", "q": _vec((Fraction(0),) * phi.nvars), "A": _mat(zeros(phi.nvars, phi.nvars))}
    return {"map": "endo", "q": _vec(phi.q), "A": _mat(phi.A)}


# commands


def cmd_classify(args):
    if args.kind == "derivation":
        D = _derivation(args)
        inputs = {"n": args.n, "coeffs": [format_poly(c) for c in D.coeffs]}
        return inputs, _classification(classify_derivation(D))
    phi = _endo(args)
    inputs = dict(n=args.n, **_endo_inputs(phi))
    return inputs, _classification(classify_endo(phi))


def cmd_image(args):
    if args.derivation:
        D = _derivation(args)
        inputs = {"n": args.n, "map": "derivation", "coeffs": [format_poly(c) for c in D.coeffs]}
        if args.action == "describe":
            raise SemanticError("describe applies to E-derivations only")
        f = _f(args)
        inputs["f"] = format_poly(f)
        return inputs, _membership(image_member_derivation(D, f))
    phi = _endo(args)
    inputs = dict(n=args.n, **_endo_inputs(phi))
    if args.action == "describe":
        return inputs, _description(image_description(phi))
    f = _f(args)
    inputs["f"] = format_poly(f)
    return inputs, _membership(image_member_ederivation(phi, f))


def cmd_mstest(args):
    inputs = {"n": args.n, "V": args.V}
    if args.V == "constant-free":
        V = constant_free_oracle
    elif args.V == "kernel-ideal":
        if args.q is None:
            raise SemanticError("--V kernel-ideal needs --q")
        q = _parse_field("q", parse_rational_list, args.q)
        if len(q) != args.n or not all(q):
            raise SemanticError(f"--q must list {args.n} nonzero rationals")
        inputs["q"] = _vec(q)
        V = kernel_ideal_oracle(q)
    else:
        phi = _endo(args)
        if not classify_endo(phi).kind.locally_finite:
            raise NotLocallyFinite("cannot bind V: I - phi is not locally finite")
        inputs.update(_endo_inputs(phi))
        V = image_oracle(phi)
    f = _f(args)
    probes = _parse_field("probes", parse_poly_list, args.probes or "", args.n)
    inputs.update(f=format_poly(f), probes=[format_poly(g) for g in probes], M=args.M, Mprime=args.Mprime)
    res = ms_probe(V, f, probes, args.M, args.Mprime)
    absorbed = {format_poly(g): N for g, N in res.absorbed.items()}
    return inputs, {"radical_ok": res.radical_ok, "first_failure": res.first_failure, "absorbed": absorbed}


def cmd_polytope(args):
    f = _f(args)
    if not f:
        raise SemanticError("the zero polynomial has an empty polytope")
    points = sorted(f.support(), reverse=True)
    res = origin_in_polytope(points)
    out = {"points": _mat(points), "origin_in_polytope": res.contains}
    if res.contains:
        out["weights"] = _vec(res.weights)
    else:
        out["functional"] = list(res.functional)
    return {"n": args.n, "f": format_poly(f)}, out


def cmd_orbit(args):
    phi = _endo(args)
    if phi.is_zero:
        raise SemanticError("the zero map has no exponent orbit")
    alpha = _parse_field("alpha", parse_int_vector, args.alpha)
    if len(alpha) != args.n:
        raise SemanticError(f"--alpha must have {args.n} entries")
    seq = orbit(phi, alpha, args.cap)
    inputs = dict(n=args.n, **_endo_inputs(phi), alpha=list(alpha), cap=args.cap)
    if seq is None:
        return inputs, {"overflow": True, "orbit": None}
    return inputs, {"overflow": False, "orbit": _mat(seq)}


def cmd_snf(args):
    A = _parse_field("A", parse_matrix, args.A)
    D, U, V = snf(A)
    H, W = hnf(A)
    return {"A": _mat(A)}, {"D": _mat(D), "U": _mat(U), "V": _mat(V), "H": _mat(H), "H_transform": _mat(W)}


# text rendering


def _render_text(command, inputs, result, out):
    out.write(f"{command}\n")
    for key, value in inputs.items():
        out.write(f"  {key}: {_text_value(value)}\n")
    out.write("result\n")
    for key, value in result.items():
        if isinstance(value, dict):
            out.write(f"  {key}:\n")
            for k2, v2 in value.items():
                out.write(f"    {k2}: {_text_value(v2)}\n")
        else:
            out.write(f"  {key}: {_text_value(value)}\n")


def _text_value(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return format_matrix(value) if value[0] else "[]"
        return ",".join(str(v) for v in value) if value else "[]"
    return str(value)


def build_parser():
    parser = _ArgumentParser(prog="laurent-med", description="Locally finite (E-)derivations of Laurent polynomial algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def common(p, map_flags=True):
        p.add_argument("--n", type=int, required=True, help="number of variables")
        if map_flags:
            p.add_argument("--q", help='endomorphism scalars, e.g. "-1,2"')
            p.add_argument("--A", help='exponent matrix, rows separated by ";", e.g. "0,1;1,0"')
            p.add_argument("--coeffs", help='derivation coefficients a_i, comma separated, e.g. "2*x1,3*x2"')
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("classify", help="classify a derivation or an E-derivation I - phi")
    p.add_argument("kind", choices=["derivation", "endo"])
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("image", help="image membership or structural description")
    p.add_argument("action", choices=["member", "describe"])
    which = p.add_mutually_exclusive_group()
    which.add_argument("--endo", action="store_true", help="map is I - phi (default)")
    which.add_argument("--derivation", action="store_true", help="map is a derivation")
    common(p)
    p.add_argument("--f", help="polynomial to test")
    p.set_defaults(func=cmd_image)

    p = sub.add_parser("ms-test", help="radical scan and Mathieu-subspace probes")
    p.add_argument("--V", choices=["image", "constant-free", "kernel-ideal"], default="image")
    common(p)
    p.add_argument("--f", help="candidate radical element")
    p.add_argument("--probes", help="comma separated probe polynomials")
    p.add_argument("--M", type=int, default=8, help="radical scan bound (default 8)")
    p.add_argument("--Mprime", type=int, default=12, help="absorption bound (default 12)")
    p.set_defaults(func=cmd_mstest)

    p = sub.add_parser("polytope", help="origin test for the Newton polytope of f")
    common(p, map_flags=False)
    p.add_argument("--f", help="polynomial")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("orbit", help="exponent orbit under a monomial map")
    common(p)
    p.add_argument("--alpha", required=True, help='starting exponent, e.g. "0,1"')
    p.add_argument("--cap", type=int, default=64, help="maximum orbit length (default 64)")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("snf", help="Smith and Hermite normal forms of an integer matrix")
    p.add_argument("--A", required=True, help="integer matrix")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.set_defaults(func=cmd_snf)
    return parser


_VALUE_FLAGS = {"--n", "--q", "--A", "--coeffs", "--f", "--probes", "--M", "--Mprime", "--alpha", "--cap", "--V"}


def _glue_values(argv):
    """Attach values to their flags so that ``--q "-1,2"`` is not read as an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_values(argv))
    except UsageError as exc:
        err.write(f"error: usage: {exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return exc.code
    if getattr(args, "n", 1) < 1:
        err.write("error: semantic: --n must be positive\n")
        return 1
    try:
        inputs, result = args.func(args)
    except ParseError as exc:
        err.write(f"error: parse: {exc}\n")
        return 2
    except (SemanticError, NotLocallyFinite, DimensionError, OrbitOverflow, ValueError) as exc:
        err.write(f"error: semantic: {' '.join(str(exc).split())}\n")
        return 1
    if args.json:
        report = {"schema": SCHEMA, "command": args.command, "inputs": inputs, "result": result}
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        _render_text(args.command, inputs, result, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
