"""Command line front end.

Verdict text goes to stdout and is byte-for-byte deterministic for a
given input; wall-clock timing goes to stderr.  Exit codes: 0 for
pass/simple/success, 1 for fail/not-simple, 2 for undetermined, 3 for
bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import catalog, io
from .checks import (
    check_binary_jordan,
    check_dxy_identity,
    check_jts_identity,
    check_total_commutativity,
)
from .derivations import compare, derivation_algebra, inner_derivation_space
from .fields import GF, QQ
from .identities import identity_space, lifting_span, verify_identity
from .structure import simplicity


def parse_field(text):
    text = text.strip()
    if text == "Q":
        return QQ
    if text.startswith("F"):
        try:
            return GF(int(text[1:]))
        except ValueError as exc:
            raise ValueError("bad field %r: %s" % (text, exc)) from exc
    raise ValueError("field must be Q or F<p>, got %r" % text)


def parse_element(alg, text):
    text = text.strip()
    if text in alg.labels:
        return alg.by_label(text)
    parts = text.split(",")
    if len(parts) != alg.dim:
        raise ValueError(
            "element must be a basis label or %d comma-separated scalars"
            % alg.dim
        )
    return alg.element([alg.field.parse(p) for p in parts])


def _format_args(alg, els):
    return "(%s)" % ", ".join(alg.format_element(e) for e in els)


_WITNESS_KEYS = {
    "commutativity": ("args", "permuted"),
    "dxy": ("x", "y", "z"),
    "jts": ("args",),
    "jordan_raw": ("x", "y"),
    "jordan_linearized": ("x", "y"),
    "derivation": ("args",),
    "identity": ("substitution",),
    "composition": ("args",),
}


def print_witness(alg, witness, out):
    for key in _WITNESS_KEYS.get(witness.kind, ()):
        value = witness.data[key]
        if isinstance(value, tuple):
            out.write("%s = %s\n" % (key, _format_args(alg, value)))
        else:
            out.write("%s = %s\n" % (key, alg.format_element(value)))
    out.write("LHS = %s\n" % alg.format_element(witness.lhs))
    out.write("RHS = %s\n" % alg.format_element(witness.rhs))


def _build_catalog(args):
    field = parse_field(args.field)
    name = args.name
    if name == "vfgh":
        return catalog.form_extension(
            field, args.dimv, f=args.f, g=args.g, h=args.h
        )
    if name == "A":
        return catalog.dot_triple(field, args.dim)
    if name == "J-form":
        return catalog.spin_factor(field, args.dimv)
    if name == "sym-matrix":
        return catalog.sym_matrix(field, args.n)
    if name == "s1":
        return catalog.s1(field, args.n, args.i, args.j)
    if name == "s2":
        return catalog.s2(field, args.n, args.i, args.j)
    if name == "quaternion-ternary":
        return catalog.conj_triple(
            catalog.quaternions(field, field.parse(args.a), field.parse(args.b))
        )
    if name == "octonion-ternary":
        return catalog.conj_triple(
            catalog.octonions(
                field,
                field.parse(args.a),
                field.parse(args.b),
                field.parse(args.c),
            )
        )
    if name == "a1":
        return catalog.filippov_a1(field)
    if name == "tca1":
        return catalog.tca1(field)
    if name == "tkk-J":
        return catalog.tkk_ternary(catalog.tkk_grading_a1(field))
    raise ValueError("unknown catalog name %r" % name)


def cmd_catalog(args, out):
    alg = _build_catalog(args)
    out.write(io.dumps(alg))
    return 0


def cmd_check(args, out):
    alg = io.load_file(args.file)
    kind = args.kind
    if kind == "commutative":
        verdict = check_total_commutativity(alg)
    elif kind == "dxy":
        verdict = check_dxy_identity(alg, par=args.par)
    elif kind == "jts":
        verdict = check_jts_identity(alg)
    elif kind == "binary-jordan":
        verdict = check_binary_jordan(alg)
    else:
        raise ValueError("unknown check %r" % kind)
    out.write("check: %s\n" % kind)
    out.write(
        "algebra: arity %d, dim %d, field %r\n" % (alg.arity, alg.dim, alg.field)
    )
    out.write("status: %s\n" % ("pass" if verdict.passed else "fail"))
    if verdict.witness is not None:
        print_witness(alg, verdict.witness, out)
    return 0 if verdict.passed else 1


def cmd_simple(args, out):
    alg = io.load_file(args.file)
    report = simplicity(alg)
    out.write("simple: %s\n" % report.status)
    out.write("certificate: %s\n" % report.certificate)
    if report.ideal is not None:
        out.write("ideal dim = %d\n" % report.ideal.dim)
        for v in report.ideal.vectors:
            out.write("ideal basis: %s\n" % alg.format_element(alg.element(v)))
    return {"simple": 0, "not_simple": 1, "undetermined": 2}[report.status]


def cmd_der(args, out):
    alg = io.load_file(args.file)
    der = derivation_algebra(alg)
    out.write("derivations: dim %d\n" % der.rank)
    for k, mat in enumerate(der.matrices()):
        out.write("D%d:\n" % (k + 1))
        for i in range(alg.dim):
            img = alg.element(mat.rows[i])
            out.write(
                "  %s -> %s\n" % (alg.labels[i], alg.format_element(img))
            )
    if args.inner:
        inner = inner_derivation_space(alg)
        out.write("inner derivations: dim %d\n" % inner.rank)
        out.write("compare: %s\n" % compare(inner, der))
    return 0


def _format_identity(alg, monomials, vec):
    parts = []
    one = alg.field.one
    for m, c in zip(monomials, vec):
        if c == 0:
            continue
        if c == one:
            parts.append(m.render())
        elif c == -one:
            parts.append("-" + m.render())
        else:
            parts.append("%s*%s" % (alg.field.format(c), m.render()))
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return out


def cmd_identities(args, out):
    alg = io.load_file(args.file)
    space = identity_space(alg, args.degree, args.mode)
    out.write("identities: degree %d, mode %s\n" % (args.degree, args.mode))
    out.write("monomials: %d\n" % len(space.monomials))
    out.write("dim = %d\n" % space.solutions.dim)
    for k, vec in enumerate(space.solutions.vectors):
        out.write(
            "gen %d: %s\n" % (k + 1, _format_identity(alg, space.monomials, vec))
        )
    if args.modulo is not None:
        if args.modulo != "degree1" or args.degree != 2:
            raise ValueError("--modulo only supports degree1 against degree 2")
        base = identity_space(alg, 1, "general")
        lifted = lifting_span(alg.arity, base, args.mode)
        out.write("lifting dim = %d\n" % lifted.solutions.dim)
        contained = space.solutions.contains(lifted.solutions)
        out.write("lifting contained: %s\n" % ("yes" if contained else "no"))
        out.write(
            "lifting equal: %s\n"
            % ("yes" if contained and lifted.solutions.contains(space.solutions) else "no")
        )
    return 0


def cmd_reduce(args, out):
    alg = io.load_file(args.file)
    el = parse_element(alg, args.element)
    out.write(io.dumps(alg.reduce(args.slot, el)))
    return 0


def cmd_validate(args, out):
    alg = io.load_file(args.file)
    out.write(
        "ok: arity %d, dim %d, field %r, symmetry %s, products %d\n"
        % (alg.arity, alg.dim, alg.field, alg.symmetry, len(alg.tensor))
    )
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nalg",
        description="exact computations with n-ary algebras given by "
        "structure constants",
    )
    parser.add_argument(
        "--par",
        type=int,
        default=int(os.environ.get("NALG_PAR", "1")),
        help="worker count for the heavy scans (default NALG_PAR or 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="emit a built-in algebra as JSON")
    p.add_argument(
        "name",
        choices=[
            "vfgh",
            "A",
            "J-form",
            "sym-matrix",
            "s1",
            "s2",
            "quaternion-ternary",
            "octonion-ternary",
            "a1",
            "tca1",
            "tkk-J",
        ],
    )
    p.add_argument("--field", default="Q")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--dimv", type=int, default=1)
    p.add_argument("--f", action="store_true")
    p.add_argument("--g", action="store_true")
    p.add_argument("--h", action="store_true")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=2)
    p.add_argument("--a", default="-1")
    p.add_argument("--b", default="-1")
    p.add_argument("--c", default="-1")
    p.set_defaults(run=cmd_catalog)

    p = sub.add_parser("check", help="run one identity check on a file")
    p.add_argument("kind", choices=["commutative", "dxy", "jts", "binary-jordan"])
    p.add_argument("file")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("simple", help="three-outcome simplicity test")
    p.add_argument("file")
    p.set_defaults(run=cmd_simple)

    p = sub.add_parser("der", help="derivation space of a file")
    p.add_argument("file")
    p.add_argument("--inner", action="store_true")
    p.set_defaults(run=cmd_der)

    p = sub.add_parser("identities", help="multilinear identity spaces")
    p.add_argument("file")
    p.add_argument("--degree", type=int, choices=[1, 2], required=True)
    p.add_argument("--mode", choices=["general", "commutative"], default="general")
    p.add_argument("--modulo", choices=["degree1"], default=None)
    p.set_defaults(run=cmd_identities)

    p = sub.add_parser("reduce", help="freeze one slot at an element")
    p.add_argument("file")
    p.add_argument("--slot", type=int, required=True)
    p.add_argument("--element", required=True)
    p.set_defaults(run=cmd_reduce)

    p = sub.add_parser("validate", help="parse a file and report its shape")
    p.add_argument("file")
    p.set_defaults(run=cmd_validate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        code = args.run(args, sys.stdout)
    except (ValueError, TypeError, OSError, ZeroDivisionError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 3
    finally:
        sys.stderr.write("time: %.3fs\n" % (time.perf_counter() - start))
    return code


if __name__ == "__main__":
    sys.exit(main())
