"""The Yau chain complex of a Hom-Lie algebra with trivial coefficients.

C_n = Lambda^n L with

    d_n(x_1 ^ ... ^ x_n) = sum_{i<j} (-1)^(i+j+1) [x_i, x_j] ^ a(x_1) ^ ... ^ a(x_n)

where the i-th and j-th twisted factors are omitted.  The sign makes
d_2(x ^ y) = [x, y]; dropping it breaks d o d = 0 (see ``signed=False``).

>>> from homlie.catalogue import get
>>> [homology(get("heisenberg3").algebra, n).dim for n in range(4)]
[1, 2, 2, 1]
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import PreconditionError
from .exactla import ZERO, Matrix, QuotientSpace, Subspace, format_fraction, image, kernel


def wedge_basis(dim, n):
    """Strictly increasing index tuples, lexicographic."""
    return list(combinations(range(dim), n))


def wedge(vectors):
    """Expand v_1 ^ ... ^ v_m into {sorted index tuple: coefficient}."""
    terms = {(): Fraction(1)}
    for v in vectors:
        new = {}
        for t, c in terms.items():
            for k, a in enumerate(v):
                if not a or k in t:
                    continue
                # sign of moving k into place behind the larger entries of t
                larger = sum(1 for s in t if s > k)
                key = tuple(sorted(t + (k,)))
                val = c * a if larger % 2 == 0 else -c * a
                new[key] = new.get(key, ZERO) + val
        terms = {t: c for t, c in new.items() if c}
        if not terms:
            break
    return terms


def boundary(L, n, signed=True):
    """Matrix of d_n : Lambda^n L -> Lambda^(n-1) L on sorted-tuple bases."""
    dim = L.dim
    if n < 1 or n > dim:
        raise PreconditionError(f"boundary degree must lie in 1..{dim}, got {n}")
    return _boundary(L, n, signed)


@lru_cache(maxsize=256)
def _boundary(L, n, signed):
    dim = L.dim
    src, tgt = wedge_basis(dim, n), wedge_basis(dim, n - 1)
    if n == 1:
        return Matrix.zeros(1, dim)
    index = {t: r for r, t in enumerate(tgt)}
    tw = L.twist.columns()
    cols = []
    for t in src:
        col = [ZERO] * len(tgt)
        for a, b in combinations(range(n), 2):
            # 1-based positions a+1, b+1
            sign = 1 if not signed or (a + b) % 2 == 1 else -1
            rest = [tw[t[k]] for k in range(n) if k != a and k != b]
            for key, c in wedge([L.bracket[t[a]][t[b]]] + rest).items():
                col[index[key]] += sign * c
        cols.append(tuple(col))
    return Matrix.from_columns(cols, len(tgt))


@dataclass(eq=False)
class ChainComplex:
    algebra: object
    max_degree: int
    bases: list
    boundaries: dict = field(repr=False)
    signed: bool = True

    def d(self, n):
        return self.boundaries[n]

    def squares_vanish(self):
        return all((self.boundaries[n - 1] @ self.boundaries[n]).is_zero()
                   for n in range(2, self.max_degree + 1))


def chain_complex(L, max_degree=None, signed=True):
    top = L.dim if max_degree is None else max_degree
    if top > L.dim:
        raise PreconditionError(f"max degree {top} exceeds the dimension {L.dim}")
    bases = [wedge_basis(L.dim, n) for n in range(top + 1)]
    return ChainComplex(L, top, bases, {n: boundary(L, n, signed) for n in range(1, top + 1)}, signed)


def verify_complex(L, max_degree=None, signed=True):
    """Whether d_(n-1) d_n = 0 for 2 <= n <= max_degree."""
    return chain_complex(L, max_degree, signed).squares_vanish()


@dataclass(eq=False)
class HomologyReport:
    degree: int
    dim: int
    cycle_basis: list
    boundary_dim: int
    cycle_dim: int
    basis: list = field(repr=False, default_factory=list)

    def as_dict(self):
        return {"degree": self.degree, "dim": self.dim, "cycles_dim": self.cycle_dim,
                "boundaries_dim": self.boundary_dim,
                "cycle_basis": [[format_fraction(c) for c in v] for v in self.cycle_basis]}


def homology(L, n):
    """H_n of the Yau complex; degrees above dim L give zero."""
    if n < 0:
        raise PreconditionError("homology degree must be non-negative")
    dim = L.dim
    if n > dim:
        return HomologyReport(n, 0, [], 0, 0, [])
    basis = wedge_basis(dim, n)
    size = len(basis)
    if n == 0:
        cycles = Subspace.full(1)
    else:
        cycles = kernel(boundary(L, n))
    bounds = image(boundary(L, n + 1)) if n + 1 <= dim else Subspace.zero(size)
    q = QuotientSpace(bounds)
    classes = Subspace.span([q.project(z) for z in cycles.basis], q.dim)
    reps = [q.lift(c) for c in classes.basis]
    return HomologyReport(n, classes.dim, reps, bounds.dim, cycles.dim, basis)


__all__ = ["wedge_basis", "wedge", "boundary", "ChainComplex", "chain_complex", "verify_complex",
           "HomologyReport", "homology"]
