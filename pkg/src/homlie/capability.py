"""Tensor and exterior centres, capability, epicentres of perfect algebras, derivations.

An algebra is capable exactly when its exterior centre vanishes.

>>> from homlie.catalogue import get
>>> is_capable(get("abelian_1").algebra), is_capable(get("abelian_2").algebra)
(False, True)
"""

from dataclasses import dataclass
from typing import Union

from .algebra import (
    HomLieAlgebra, alpha_identity_check, bracket_eval, centre, is_perfect, is_twist_invariant,
    quotient_algebra,
)
from .errors import ConstructionError, PreconditionError
from .exactla import (
    ZERO, Matrix, Subspace, format_fraction, image, kernel, largest_invariant_subspace, subspace_leq,
    unit_vector, vstack,
)
from .tensor import exterior_square, induced_map, tensor_square


def _annihilator(L, element, qdim):
    """{l : element(l, e_j) = 0 for all j}, with element(l, x) in Q^qdim."""
    n = L.dim
    blocks = []
    for j in range(n):
        ej = unit_vector(n, j)
        blocks.append(Matrix.from_columns([element(unit_vector(n, i), ej) for i in range(n)], qdim))
    if not blocks or qdim == 0:
        return Subspace.full(n)
    return kernel(vstack(blocks, n))


def tensor_centre(L, cap=None):
    """{l : alpha^k(l) * x = 0 in L * L for all x and k >= 0}."""
    T = tensor_square(L, cap)
    C = _annihilator(L, T.element, T.dim)
    return largest_invariant_subspace(L.twist, C)


def exterior_centre(L, cap=None):
    """{l : alpha^k(l) ^ x = 0 in L ^ L for all x and k >= 0}."""
    E = exterior_square(L, cap)
    C = _annihilator(L, E.element, E.dim)
    return largest_invariant_subspace(L.twist, C)


def is_capable(L, cap=None):
    return exterior_centre(L, cap).is_zero()


def epicentre_perfect(L, cap=None):
    """The epicentre of a perfect algebra, which coincides with its exterior centre."""
    if not is_perfect(L):
        raise PreconditionError("the epicentre is only available for perfect algebras")
    return exterior_centre(L, cap)


@dataclass(eq=False)
class CapabilityReport:
    algebra: HomLieAlgebra
    centre: Subspace
    tensor_centre: Subspace
    exterior_centre: Subspace
    capable: bool
    epicentre: Union[Subspace, str]
    perfect: bool

    @property
    def tower_holds(self):
        return subspace_leq(self.tensor_centre, self.exterior_centre) and \
            subspace_leq(self.exterior_centre, self.centre)

    def as_dict(self):
        sub = lambda S: {"dim": S.dim, "basis": [[format_fraction(c) for c in v] for v in S.basis]}
        epi = sub(self.epicentre) if isinstance(self.epicentre, Subspace) else self.epicentre
        return {"algebra": self.algebra.name, "dim": self.algebra.dim, "perfect": self.perfect,
                "centre": sub(self.centre), "tensor_centre": sub(self.tensor_centre),
                "exterior_centre": sub(self.exterior_centre), "capable": self.capable,
                "epicentre": epi, "tower_holds": self.tower_holds}


def capability_report(L, cap=None):
    zs, zx = tensor_centre(L, cap), exterior_centre(L, cap)
    perfect = is_perfect(L)
    epi = zx if perfect else "unavailable (non-perfect)"
    return CapabilityReport(L, centre(L), zs, zx, zx.is_zero(), epi, perfect)


@dataclass(eq=False)
class CentralIdealReport:
    ideal: Subspace
    isomorphism: bool
    contained_in_exterior_centre: bool
    dim_square: int
    dim_quotient_square: int

    @property
    def consistent(self):
        return self.isomorphism == self.contained_in_exterior_centre

    def as_dict(self):
        return {"ideal_dim": self.ideal.dim, "isomorphism": self.isomorphism,
                "contained_in_exterior_centre": self.contained_in_exterior_centre,
                "consistent": self.consistent, "dim_LxL": self.dim_square,
                "dim_QxQ": self.dim_quotient_square}


def central_ideal_multiplier_check(L, N, cap=None):
    """Whether pi ^ pi : L ^ L -> L/N ^ L/N is an isomorphism, against N in the exterior centre."""
    if not isinstance(N, Subspace):
        N = Subspace.span(N, L.dim)
    if not is_perfect(L):
        raise PreconditionError("the algebra must be perfect")
    if not subspace_leq(N, centre(L)) or not is_twist_invariant(L, N):
        raise PreconditionError("N must be a twist-invariant subspace of the centre")
    E = exterior_square(L, cap)
    Q = quotient_algebra(L, N)
    EQ = exterior_square(Q.quotient, cap)
    p = Q.projection.matrix
    f = induced_map(E, EQ, p, p)
    iso = E.dim == EQ.dim and f.rank() == E.dim
    return CentralIdealReport(N, iso, subspace_leq(N, exterior_centre(L, cap)), E.dim, EQ.dim)


# -- derivations ---------------------------------------------------------------------

@dataclass(eq=False)
class DerivationSpace:
    algebra: HomLieAlgebra
    k: int
    basis: list

    @property
    def dim(self):
        return len(self.basis)

    def __contains__(self, d):
        return is_derivation(self.algebra, d, self.k)


def _derivation_residual(L, d, k):
    """All entries of d alpha - alpha d and of d[x, y] - [dx, a^k y] - [a^k x, dy] on basis pairs."""
    n = L.dim
    ak = L.twist.power(k)
    out = list((d @ L.twist - L.twist @ d).flat())
    dc, ac = d.columns(), ak.columns()
    for i in range(n):
        for j in range(i + 1, n):
            lhs = d.apply(L.bracket[i][j])
            r1 = bracket_eval(L, dc[i], ac[j])
            r2 = bracket_eval(L, ac[i], dc[j])
            out.extend(a - b - c for a, b, c in zip(lhs, r1, r2))
    return out


def is_derivation(L, d, k):
    return not any(_derivation_residual(L, d, k))


def derivations(L, k=0):
    """Basis of the alpha^k-derivations, found by a linear solve in the n^2 entries."""
    if k < 0:
        raise PreconditionError("k must be non-negative")
    n = L.dim
    cols = []
    for a in range(n):
        for b in range(n):
            E = Matrix.from_columns([unit_vector(n, a) if c == b else (ZERO,) * n for c in range(n)], n)
            cols.append(tuple(_derivation_residual(L, E, k)))
    if not cols or not cols[0]:
        sol = Subspace.full(n * n)
    else:
        sol = kernel(Matrix.from_columns(cols, len(cols[0])))
    basis = [Matrix([v[a * n:(a + 1) * n] for a in range(n)], n) for v in sol.basis]
    return DerivationSpace(L, k, basis)


@dataclass(eq=False)
class InnerDerivations:
    algebra: HomLieAlgebra
    phi: Matrix
    image: Subspace
    kernel: Subspace

    @property
    def dim(self):
        return self.image.dim

    def matrices(self):
        n = self.algebra.dim
        return [Matrix([v[a * n:(a + 1) * n] for a in range(n)], n) for v in self.image.basis]


def inner_derivations(L):
    """phi(x) = [x, -] as a flattened n x n matrix; its kernel must be the centre."""
    if not alpha_identity_check(L):
        raise PreconditionError("inner derivations need the alpha-identity condition")
    n = L.dim
    cols = []
    for i in range(n):
        ad = Matrix.from_columns([L.bracket[i][j] for j in range(n)], n)
        cols.append(ad.flat())
    phi = Matrix.from_columns(cols, n * n) if n else Matrix.zeros(0, 0)
    inner = InnerDerivations(L, phi, image(phi), kernel(phi))
    if inner.kernel != centre(L):
        raise ConstructionError("kernel of the inner derivation map differs from the centre")
    return inner


__all__ = [
    "tensor_centre", "exterior_centre", "is_capable", "epicentre_perfect", "CapabilityReport",
    "capability_report", "CentralIdealReport", "central_ideal_multiplier_check",
    "DerivationSpace", "derivations", "is_derivation", "InnerDerivations", "inner_derivations",
]
