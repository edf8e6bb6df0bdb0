"""Command-line interface: ``homlie COMMAND SOURCE [options]``.

SOURCE is a path to an algebra JSON file or ``catalog:ID`` for a built-in
algebra.  Exit codes: 0 success (or a true verdict), 1 a mathematical
failure (axioms fail, a cross-check disagrees, a sequence is not exact),
2 usage or parse errors, 3 unmet preconditions or the size cap.
"""

import argparse
import sys

from . import __version__
from .algebra import (
    abelianisation, alpha_identity_check, centre, derived, is_perfect, naive_centre, verify_axioms,
)
from .capability import capability_report
from .catalogue import TWIST_KINDS, get, list_catalogue, random_homlie
from .errors import ConstructionError, HomLieError, ParseError, PreconditionError
from .exactla import Subspace
from .homology import homology, verify_complex
from .io import (
    canonical_json, dumps_algebra, loads_algebra, matrix_out, sha256_text, subspace_out, table_out,
    vectors_from_json,
)
from .tensor import (
    exterior_sequence_check, exterior_square, tensor_lemma_report, tensor_square, uce_of_perfect,
)

EXIT_OK, EXIT_MATH, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


class _Fail(Exception):
    """A report was produced but the verdict is a mathematical failure."""


def _load(source, verify=True):
    """Return (algebra, canonical-or-raw text, label)."""
    if source.startswith("catalog:"):
        try:
            L = get(source[len("catalog:"):]).algebra
        except KeyError as exc:
            raise ParseError(str(exc.args[0])) from None
        text = dumps_algebra(L)
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from None
        L = loads_algebra(text)
    if verify:
        r = verify_axioms(L)
        if not r.ok:
            what, where = r.first_failure()
            raise PreconditionError(f"{source} fails {what} at {_names(L, where)} (use --no-verify to skip)")
    return L, text, source


def _names(L, idx):
    return "(" + ", ".join(L.basis_names[k] for k in idx) + ")"


def _report(command, source, text, results):
    return {"command": command, "inputs": {"file": source, "sha256": sha256_text(text)},
            "results": results, "tool_version": __version__}


def _emit(args, report, lines):
    if args.json:
        sys.stdout.write(canonical_json(report))
    else:
        for line in lines:
            print(line)


# -- commands ----------------------------------------------------------------------

def cmd_verify(args):
    L, text, src = _load(args.source, verify=False)
    r = verify_axioms(L)
    res = r.as_dict()
    lines = []
    if r.ok:
        lines.append(f"{L.name or src}: skew-symmetric, Hom-Jacobi and multiplicative")
    else:
        what, where = r.first_failure()
        lines.append(f"{L.name or src}: {what} fails at {_names(L, where)} (indices {list(where)})")
    _emit(args, _report("verify", src, text, res), lines)
    return EXIT_OK if r.ok else EXIT_MATH


def cmd_info(args):
    L, text, src = _load(args.source, not args.no_verify)
    Z, Zn, Dv = centre(L), naive_centre(L), derived(L)
    res = {"name": L.name, "dim": L.dim, "basis": list(L.basis_names),
           "centre": subspace_out(Z), "naive_centre": subspace_out(Zn),
           "derived_dim": Dv.dim, "perfect": is_perfect(L),
           "abelianisation_dim": abelianisation(L).quotient.dim,
           "alpha_identity": alpha_identity_check(L), "twist_is_identity": L.twist.is_identity()}
    lines = [f"{L.name or src}: dim {L.dim}",
             f"  centre dim {Z.dim} (naive {Zn.dim})",
             f"  derived dim {Dv.dim}, perfect {str(res['perfect']).lower()}",
             f"  abelianisation dim {res['abelianisation_dim']}",
             f"  alpha-identity {str(res['alpha_identity']).lower()}"]
    _emit(args, _report("info", src, text, res), lines)
    return EXIT_OK


def cmd_homology(args):
    L, text, src = _load(args.source, not args.no_verify)
    if args.degree is not None and not 0 <= args.degree <= L.dim:
        raise PreconditionError(f"degree must lie in 0..{L.dim}")
    degrees = [args.degree] if args.degree is not None else list(range(L.dim + 1))
    reports = [homology(L, n).as_dict() for n in degrees]
    res = {"homology": reports}
    lines = [f"H_{r['degree']} dim {r['dim']}" for r in reports]
    ok = True
    if args.verify_complex:
        ok = verify_complex(L, L.dim)
        res["complex_ok"] = ok
        lines.append(f"d o d = 0: {'pass' if ok else 'FAIL'}")
    _emit(args, _report("homology", src, text, res), lines)
    return EXIT_OK if ok else EXIT_MATH


def _audit_results(T):
    a = T.audit()
    lem = tensor_lemma_report(T)
    return {"well_defined": a.ok, "checks": dict(vars(a)), "structure": dict(vars(lem))}, a.ok and lem.ok


def cmd_tensor_square(args):
    L, text, src = _load(args.source, not args.no_verify)
    T = tensor_square(L)
    res = {"ambient_dim": T.ambient_dim, "relations_dim": T.relations.dim, "dim": T.dim,
           "basis": list(T.product.basis_names)}
    if args.table:
        res["brackets"] = table_out(T.product)
        res["twist"] = matrix_out(T.product.twist)
    ok = True
    lines = [f"{L.name or src} * {L.name or src}: dim {T.dim} (ambient {T.ambient_dim}, relations {T.relations.dim})"]
    if args.audit:
        res["audit"], ok = _audit_results(T)
        lines.append(f"audit: {'pass' if ok else 'FAIL'}")
    _emit(args, _report("tensor-square", src, text, res), lines)
    return EXIT_OK if ok else EXIT_MATH


def cmd_exterior_square(args):
    L, text, src = _load(args.source, not args.no_verify)
    E = exterior_square(L)
    res = {"ambient_dim": E.tensor.ambient_dim, "relations_dim": E.tensor.relations.dim,
           "tensor_dim": E.tensor.dim, "box_dim": E.box.dim, "dim": E.dim,
           "basis": list(E.product.basis_names)}
    if args.table:
        res["brackets"] = table_out(E.product)
        res["twist"] = matrix_out(E.product.twist)
    ok = True
    lines = [f"{L.name or src} ^ {L.name or src}: dim {E.dim} (tensor square {E.tensor.dim}, box {E.box.dim})"]
    if args.audit:
        res["audit"], ok = _audit_results(E.tensor)
        lines.append(f"audit: {'pass' if ok else 'FAIL'}")
    _emit(args, _report("exterior-square", src, text, res), lines)
    return EXIT_OK if ok else EXIT_MATH


def cmd_capability(args):
    L, text, src = _load(args.source, not args.no_verify)
    r = capability_report(L)
    res = r.as_dict()
    epi = r.epicentre.dim if isinstance(r.epicentre, Subspace) else r.epicentre
    lines = [f"{L.name or src}: capable {str(r.capable).lower()}",
             f"  centre dim {r.centre.dim}, tensor centre dim {r.tensor_centre.dim}, "
             f"exterior centre dim {r.exterior_centre.dim}",
             f"  epicentre: {epi}"]
    _emit(args, _report("capability", src, text, res), lines)
    # a verdict of "not capable" is still a successful computation
    return EXIT_OK if r.tower_holds else EXIT_MATH


def cmd_uce(args):
    L, text, src = _load(args.source, not args.no_verify)
    try:
        u = uce_of_perfect(L)
    except ConstructionError as exc:
        raise _Fail(str(exc)) from None
    h2 = homology(L, 2).dim
    agree = u.kernel.dim == h2
    res = {"dim": u.exterior.dim, "kernel": subspace_out(u.kernel), "h2_dim": h2,
           "h2_cross_check": "pass" if agree else "fail", "box_zero": u.box_zero,
           "kernel_central": u.kernel_central, "perfect": u.exterior_perfect}
    lines = [f"{L.name or src}: universal central extension of dim {u.exterior.dim}",
             f"  kernel of theta dim {u.kernel.dim}, H_2 dim {h2}: {'pass' if agree else 'FAIL'}"]
    _emit(args, _report("uce", src, text, res), lines)
    return EXIT_OK if agree else EXIT_MATH


def cmd_sequence(args):
    L, text, src = _load(args.source, not args.no_verify)
    if args.ideal is None:
        raise ParseError("sequence needs --ideal, e.g. --ideal \"[0,0,1]\"")
    N = Subspace.span(vectors_from_json(args.ideal, L.dim), L.dim)
    r = exterior_sequence_check(L, N)
    res = r.as_dict()
    res["ideal"] = subspace_out(N)
    lines = [f"N ^ L -> L ^ L -> L/N ^ L/N -> 0 with dims {r.dim_nl}, {r.dim_ll}, {r.dim_qq}",
             f"  image {r.image_first.dim}, kernel {r.kernel_second.dim}, "
             f"surjective {str(r.surjective).lower()}",
             f"  exact: {str(r.exact).lower()}"]
    _emit(args, _report("sequence", src, text, res), lines)
    return EXIT_OK if r.exact else EXIT_MATH


def cmd_catalog(args):
    entries = [{"id": e.id, "dim": e.algebra.dim, "provenance": e.provenance,
                "description": e.description} for e in list_catalogue()]
    if args.json:
        sys.stdout.write(canonical_json({"command": "catalog", "results": entries,
                                         "tool_version": __version__}))
    else:
        width = max(len(e["id"]) for e in entries)
        for e in entries:
            print(f"{e['id']:<{width}}  dim {e['dim']}  {e['provenance']:<13}  {e['description']}")
    return EXIT_OK


def cmd_export(args):
    src = args.source
    if src.startswith("random:"):
        try:
            dim = int(src[len("random:"):])
        except ValueError:
            raise ParseError(f"bad random source {src!r}; use random:DIM") from None
        L = random_homlie(dim, args.density, args.twist_kind, args.seed if args.seed is not None else 0)
    elif src.startswith("catalog:") or not _looks_like_path(src):
        key = src[len("catalog:"):] if src.startswith("catalog:") else src
        try:
            L = get(key).algebra
        except KeyError as exc:
            raise ParseError(str(exc.args[0])) from None
    else:
        L, _, _ = _load(src, not args.no_verify)
    out = dumps_algebra(L)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK


def _looks_like_path(s):
    return "/" in s or s.endswith(".json")


# -- argument parsing ----------------------------------------------------------

def _global_flags(parser, suppress):
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--json", action="store_true", default=d if suppress else False,
                        help="emit a machine-readable JSON report")
    parser.add_argument("--no-verify", action="store_true", default=d if suppress else False,
                        help="skip the axiom check when loading")
    parser.add_argument("--audit", action="store_true", default=d if suppress else False,
                        help="run the well-definedness audit for tensor/exterior squares")
    parser.add_argument("--seed", type=int, default=d, help="seed for random algebras")


def build_parser():
    p = argparse.ArgumentParser(prog="homlie", description="Exact computations with Hom-Lie algebras over Q.")
    p.add_argument("--version", action="version", version=f"homlie {__version__}")
    _global_flags(p, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def cmd(name, fn, help_, source=True):
        s = sub.add_parser(name, parents=[common], help=help_)
        if source:
            s.add_argument("source", help="algebra JSON file or catalog:ID")
        s.set_defaults(func=fn)
        return s

    cmd("verify", cmd_verify, "check skew-symmetry, Hom-Jacobi and multiplicativity")
    cmd("info", cmd_info, "centre, derived algebra, perfectness, alpha-identity")
    s = cmd("homology", cmd_homology, "homology of the Yau complex")
    s.add_argument("--degree", type=int, help="a single degree (default: all)")
    s.add_argument("--verify-complex", action="store_true", help="also check d o d = 0")
    for name, fn in (("tensor-square", cmd_tensor_square), ("exterior-square", cmd_exterior_square)):
        s = cmd(name, fn, f"the non-abelian {name.replace('-', ' ')}")
        s.add_argument("--table", action="store_true", help="include the bracket table and twist")
    cmd("capability", cmd_capability, "tensor and exterior centres, capability verdict")
    cmd("uce", cmd_uce, "universal central extension of a perfect algebra")
    s = cmd("sequence", cmd_sequence, "exactness of N ^ L -> L ^ L -> L/N ^ L/N -> 0")
    s.add_argument("--ideal", help="JSON vector or list of vectors spanning N")
    cmd("catalog", cmd_catalog, "list built-in algebras", source=False)
    s = cmd("export", cmd_export, "write an algebra as canonical JSON")
    s.add_argument("-o", "--output", help="output file (default stdout)")
    s.add_argument("--twist-kind", choices=TWIST_KINDS, default="identity")
    s.add_argument("--density", type=float, default=0.5, help="bracket density for random:DIM")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (_Fail, ConstructionError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_MATH
    except HomLieError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
