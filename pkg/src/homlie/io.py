"""JSON formats for algebras, actions and reports.

Algebra files look like::

    {"name": "E2", "dim": 2, "basis": ["e1", "e2"], "field": "Q",
     "brackets": [{"i": 0, "j": 1, "value": ["1", "0"]}],
     "alpha": [["1", "1"], ["0", "1"]]}

Indices are 0-based.  Only pairs i < j need to be listed; [e_j, e_i] is
filled in as -[e_i, e_j].  Rationals are strings in lowest terms, and
``alpha`` is row-major with column j the image of e_j.  A pair with i >= j
is taken literally, so a file can describe a bracket that is not skew (the
axiom check then reports it).

>>> from homlie.catalogue import get
>>> text = dumps_algebra(get("E2").algebra)
>>> dumps_algebra(loads_algebra(text)) == text
True
"""

import hashlib
import json
from fractions import Fraction

from .actions import HomAction
from .algebra import HomLieAlgebra
from .errors import ParseError
from .exactla import Matrix, format_fraction, zero_vector

FIELD = "Q"


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def sha256_text(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def parse_rational(x, where="value"):
    """Exact rational from a string like "3/4" or an integer; floats are refused."""
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"{where}: {x!r} is not an exact rational (use a string such as \"1/3\")")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{where}: cannot read {x!r} as a rational") from None
    raise ParseError(f"{where}: expected a rational string, got {type(x).__name__}")


def _vector(v, dim, where):
    if not isinstance(v, list) or len(v) != dim:
        raise ParseError(f"{where}: expected a list of {dim} rationals")
    return tuple(parse_rational(x, where) for x in v)


def _index(x, dim, where):
    if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < dim:
        raise ParseError(f"{where}: index {x!r} out of range 0..{dim - 1}")
    return x


def algebra_from_dict(d):
    if not isinstance(d, dict):
        raise ParseError("algebra file must contain a JSON object")
    for key in ("dim", "brackets", "alpha"):
        if key not in d:
            raise ParseError(f"missing key {key!r}")
    if d.get("field", FIELD) != FIELD:
        raise ParseError(f"only the field {FIELD!r} is supported, got {d.get('field')!r}")
    n = d["dim"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParseError(f"dim must be a non-negative integer, got {n!r}")
    names = d.get("basis") or [f"e{k + 1}" for k in range(n)]
    if not isinstance(names, list) or len(names) != n or not all(isinstance(s, str) for s in names):
        raise ParseError(f"basis must be a list of {n} labels")
    c = [[zero_vector(n) for _ in range(n)] for _ in range(n)]
    explicit = set()
    if not isinstance(d["brackets"], list):
        raise ParseError("brackets must be a list")
    entries = []
    for k, b in enumerate(d["brackets"]):
        where = f"brackets[{k}]"
        if not isinstance(b, dict) or set(b) - {"i", "j", "value"} or not {"i", "j", "value"} <= set(b):
            raise ParseError(f"{where}: expected an object with keys i, j, value")
        i, j = _index(b["i"], n, where + ".i"), _index(b["j"], n, where + ".j")
        if (i, j) in explicit:
            raise ParseError(f"{where}: pair ({i}, {j}) listed twice")
        explicit.add((i, j))
        entries.append((i, j, _vector(b["value"], n, where + ".value")))
    for i, j, v in entries:
        c[i][j] = v
        if i < j and (j, i) not in explicit:
            c[j][i] = tuple(-a for a in v)
    alpha = d["alpha"]
    if not isinstance(alpha, list) or len(alpha) != n:
        raise ParseError(f"alpha must be a {n} x {n} matrix")
    rows = [_vector(r, n, f"alpha[{k}]") for k, r in enumerate(alpha)]
    name = d.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name must be a string")
    return HomLieAlgebra(n, tuple(tuple(r) for r in c), Matrix(rows, n), name, tuple(names))


def algebra_to_dict(L):
    n = L.dim
    brackets = [{"i": i, "j": j, "value": [format_fraction(a) for a in L.bracket[i][j]]}
                for i in range(n) for j in range(i + 1, n) if any(L.bracket[i][j])]
    return {"name": L.name, "dim": n, "basis": list(L.basis_names), "field": FIELD,
            "brackets": brackets,
            "alpha": [[format_fraction(a) for a in row] for row in L.twist.rows]}


def loads_algebra(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return algebra_from_dict(d)


def dumps_algebra(L):
    return canonical_json(algebra_to_dict(L))


def read_algebra(path):
    with open(path, encoding="utf-8") as fh:
        return loads_algebra(fh.read())


def write_algebra(L, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_algebra(L))


# -- actions ----------------------------------------------------------------------

def action_to_dict(act):
    return {"actor": algebra_to_dict(act.actor), "actee": algebra_to_dict(act.actee),
            "coefficients": [[[format_fraction(a) for a in v] for v in row] for row in act.coeffs]}


def action_from_dict(d):
    try:
        actor, actee, t = algebra_from_dict(d["actor"]), algebra_from_dict(d["actee"]), d["coefficients"]
    except (KeyError, TypeError):
        raise ParseError("action must have keys actor, actee, coefficients") from None
    if not isinstance(t, list) or len(t) != actor.dim:
        raise ParseError("coefficients must have one row per actor basis vector")
    rows = []
    for i, r in enumerate(t):
        if not isinstance(r, list) or len(r) != actee.dim:
            raise ParseError(f"coefficients[{i}] must have one entry per actee basis vector")
        rows.append(tuple(_vector(v, actee.dim, f"coefficients[{i}]") for v in r))
    return HomAction(actor, actee, tuple(rows))


def vectors_from_json(text, dim):
    """Read "[0, 0, 1]" or "[[1, 0, 0], [0, 1, 0]]" as a list of vectors of length ``dim``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid vector list: {exc}") from None
    if not isinstance(data, list):
        raise ParseError("expected a JSON list")
    if data and not isinstance(data[0], list):
        data = [data]
    return [_vector(v, dim, f"vector {k}") for k, v in enumerate(data)]


def fractions_out(v):
    return [format_fraction(a) for a in v]


def subspace_out(S):
    return {"dim": S.dim, "basis": [fractions_out(v) for v in S.basis]}


def matrix_out(M):
    return [fractions_out(r) for r in M.rows]


def table_out(L):
    """Nonzero brackets of L as {"i", "j", "value"} entries, i < j."""
    n = L.dim
    return [{"i": i, "j": j, "value": fractions_out(L.bracket[i][j])}
            for i in range(n) for j in range(i + 1, n) if any(L.bracket[i][j])]


__all__ = ["canonical_json", "sha256_text", "parse_rational", "algebra_from_dict", "algebra_to_dict",
           "loads_algebra", "dumps_algebra", "read_algebra", "write_algebra", "action_to_dict",
           "action_from_dict", "vectors_from_json", "subspace_out", "matrix_out", "table_out"]
