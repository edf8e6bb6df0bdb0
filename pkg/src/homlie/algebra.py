"""Finite-dimensional multiplicative Hom-Lie algebras given by structure constants.

An algebra of dimension n is stored as a skew tensor ``bracket[i][j]``
(the coordinates of ``[e_i, e_j]``) and an n x n twist matrix whose j-th
column is ``alpha(e_j)``.

>>> E2 = HomLieAlgebra.from_brackets(2, {(0, 1): (1, 0)}, twist=[[1, 1], [0, 1]], name="E2")
>>> verify_axioms(E2).ok
True
>>> bracket_eval(E2, (1, 0), (0, 1))
(Fraction(1, 1), Fraction(0, 1))
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .errors import DimensionMismatch, PreconditionError
from .exactla import (
    ZERO, Matrix, QuotientSpace, Subspace, apply_to_subspace, as_matrix, as_vector, image,
    is_invariant, kernel, largest_invariant_subspace, preimage, subspace_leq, subspace_sum,
    unit_vector, vadd, zero_vector,
)


@dataclass(frozen=True, eq=True)
class HomLieAlgebra:
    dim: int
    bracket: tuple
    twist: Matrix
    name: str = ""
    basis_names: tuple = ()

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise ValueError("dimension must be non-negative")
        if len(self.bracket) != n or any(len(row) != n for row in self.bracket):
            raise DimensionMismatch(f"bracket tensor is not {n} x {n}")
        for row in self.bracket:
            for v in row:
                if len(v) != n:
                    raise DimensionMismatch(f"structure constant vector of length {len(v)} in dimension {n}")
        if self.twist.shape != (n, n):
            raise DimensionMismatch(f"twist has shape {self.twist.shape}, expected {(n, n)}")
        if not self.basis_names:
            object.__setattr__(self, "basis_names", tuple(f"e{i + 1}" for i in range(n)))
        elif len(self.basis_names) != n:
            raise DimensionMismatch("wrong number of basis names")

    @classmethod
    def from_tensor(cls, tensor, twist=None, name="", basis_names=()):
        tensor = tuple(tuple(as_vector(v) for v in row) for row in tensor)
        n = len(tensor)
        twist = Matrix.identity(n) if twist is None else as_matrix(twist, n, n)
        return cls(n, tensor, twist, name, tuple(basis_names))

    @classmethod
    def from_brackets(cls, dim, brackets, twist=None, name="", basis_names=()):
        """Build from ``{(i, j): [e_i, e_j]}``; the skew half is filled in."""
        c = [[zero_vector(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in brackets.items():
            if i == j:
                raise ValueError(f"[e{i}, e{i}] must vanish by skew-symmetry")
            v = as_vector(v, dim)
            c[i][j] = v
            c[j][i] = tuple(-a for a in v)
        twist = Matrix.identity(dim) if twist is None else as_matrix(twist, dim, dim)
        return cls(dim, tuple(tuple(r) for r in c), twist, name, tuple(basis_names))

    @classmethod
    def abelian(cls, dim, twist=None, name=""):
        return cls.from_brackets(dim, {}, twist, name or f"abelian_{dim}")

    @cached_property
    def _terms(self):
        # nonzero structure constants, grouped by basis pair
        return [[[(k, a) for k, a in enumerate(self.bracket[i][j]) if a] for j in range(self.dim)]
                for i in range(self.dim)]

    def br(self, x, y):
        return bracket_eval(self, x, y)

    def alpha(self, x):
        return self.twist.apply(x)

    def basis_bracket(self, i, j):
        return self.bracket[i][j]

    def is_abelian(self):
        return all(not any(v) for row in self.bracket for v in row)

    def renamed(self, name):
        return HomLieAlgebra(self.dim, self.bracket, self.twist, name, self.basis_names)

    def __repr__(self):
        return f"HomLieAlgebra({self.name or '?'}, dim={self.dim})"


def bracket_eval(L, x, y):
    """Bilinear extension of the structure constants."""
    n = L.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"vectors of length {len(x)}, {len(y)} in a {n}-dimensional algebra")
    out = [ZERO] * n
    terms = L._terms
    for i, a in enumerate(x):
        if not a:
            continue
        ti = terms[i]
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, c in ti[j]:
                out[k] += ab * c
    return tuple(out)


def twist_eval(L, x):
    return L.twist.apply(x)


def basis(L):
    return [unit_vector(L.dim, i) for i in range(L.dim)]


def ad_matrix(L, x):
    """Matrix of y -> [x, y]."""
    return Matrix.from_columns([bracket_eval(L, x, e) for e in basis(L)], L.dim)


# -- axioms --------------------------------------------------------------------

@dataclass
class AxiomReport:
    skew: bool
    hom_jacobi: bool
    multiplicative: bool
    skew_failure: Optional[tuple] = None
    jacobi_failure: Optional[tuple] = None
    multiplicative_failure: Optional[tuple] = None

    @property
    def ok(self):
        return self.skew and self.hom_jacobi and self.multiplicative

    def first_failure(self):
        if not self.skew:
            return "skew-symmetry", self.skew_failure
        if not self.hom_jacobi:
            return "Hom-Jacobi", self.jacobi_failure
        if not self.multiplicative:
            return "multiplicativity", self.multiplicative_failure
        return None

    def as_dict(self):
        fail = lambda t: None if t is None else list(t)
        return {
            "skew": self.skew, "skew_failure": fail(self.skew_failure),
            "hom_jacobi": self.hom_jacobi, "jacobi_failure": fail(self.jacobi_failure),
            "multiplicative": self.multiplicative, "multiplicative_failure": fail(self.multiplicative_failure),
            "ok": self.ok,
        }


def verify_axioms(L):
    """Check skew-symmetry, Hom-Jacobi and multiplicativity on basis tuples.

    All three identities are multilinear, so the basis check is complete.
    """
    n = L.dim
    E = basis(L)
    aE = [L.alpha(e) for e in E]
    skew_fail = next(((i, j) for i in range(n) for j in range(i, n)
                      if vadd(L.bracket[i][j], L.bracket[j][i]) != zero_vector(n)), None)
    jac_fail = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = vadd(vadd(bracket_eval(L, aE[i], L.bracket[j][k]),
                              bracket_eval(L, aE[k], L.bracket[i][j])),
                         bracket_eval(L, aE[j], L.bracket[k][i]))
                if any(s):
                    jac_fail = (i, j, k)
                    break
            if jac_fail:
                break
        if jac_fail:
            break
    mult_fail = next(((i, j) for i in range(n) for j in range(n)
                      if L.alpha(L.bracket[i][j]) != bracket_eval(L, aE[i], aE[j])), None)
    return AxiomReport(skew_fail is None, jac_fail is None, mult_fail is None,
                       skew_fail, jac_fail, mult_fail)


def require_valid(L):
    report = verify_axioms(L)
    if not report.ok:
        what, where = report.first_failure()
        raise PreconditionError(f"{L.name or 'algebra'} fails {what} at basis tuple {where}")
    return L


# -- homomorphisms -------------------------------------------------------------

@dataclass(frozen=True)
class Homomorphism:
    source: HomLieAlgebra
    target: HomLieAlgebra
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatch(
                f"homomorphism matrix {self.matrix.shape} between dims {self.source.dim} -> {self.target.dim}")

    def __call__(self, x):
        return self.matrix.apply(x)

    def failures(self):
        """First basis pair violating f[x,y] = [fx,fy], and first basis vector violating f alpha = alpha f."""
        S, T, f = self.source, self.target, self.matrix
        n = S.dim
        cols = f.columns()
        br = next(((i, j) for i in range(n) for j in range(i + 1, n)
                   if f.apply(S.bracket[i][j]) != bracket_eval(T, cols[i], cols[j])), None)
        tw = next((i for i in range(n) if f.apply(S.twist.column(i)) != T.alpha(cols[i])), None)
        return br, tw

    def is_valid(self):
        return self.failures() == (None, None)

    def kernel(self):
        return kernel(self.matrix)

    def image(self):
        return image(self.matrix)

    def is_surjective(self):
        return self.matrix.rank() == self.target.dim

    def is_injective(self):
        return self.kernel().is_zero()


def identity_map(L):
    return Homomorphism(L, L, Matrix.identity(L.dim))


# -- subspaces of an algebra ---------------------------------------------------

def _as_subspace(L, W):
    if isinstance(W, Subspace):
        if W.ambient_dim != L.dim:
            raise DimensionMismatch(f"subspace of Q^{W.ambient_dim} in a {L.dim}-dimensional algebra")
        return W
    return Subspace.span(W, L.dim)


def full_space(L):
    return Subspace.full(L.dim)


def bracket_space(L, H, K):
    """span{[h, k]} over basis vectors of H and K."""
    return Subspace.span([bracket_eval(L, h, k) for h in H.basis for k in K.basis], L.dim)


def is_twist_invariant(L, W):
    return is_invariant(L.twist, _as_subspace(L, W))


def is_subalgebra(L, W):
    W = _as_subspace(L, W)
    return is_twist_invariant(L, W) and subspace_leq(bracket_space(L, W, W), W)


def is_ideal(L, W):
    W = _as_subspace(L, W)
    return is_twist_invariant(L, W) and subspace_leq(bracket_space(L, W, full_space(L)), W)


def _saturate(L, seed, partner):
    W = _as_subspace(L, seed)
    while True:
        other = W if partner is None else partner
        nxt = subspace_sum(subspace_sum(W, apply_to_subspace(L.twist, W)), bracket_space(L, W, other))
        if nxt == W:
            return W
        W = nxt


def subalgebra_closure(L, seed):
    """Smallest twist-invariant, bracket-closed subspace containing ``seed``."""
    return _saturate(L, seed, None)


def ideal_closure(L, seed):
    """Smallest ideal (twist-invariant, absorbing brackets with L) containing ``seed``."""
    return _saturate(L, seed, full_space(L))


def commutator(L, H, K):
    """The Higgins commutator: the plain span of brackets [h, k].

    The result is deliberately not closed up to an ideal; call
    :func:`ideal_closure` for the generated ideal.
    """
    H, K = _as_subspace(L, H), _as_subspace(L, K)
    for name, W in (("H", H), ("K", K)):
        if not is_twist_invariant(L, W):
            raise PreconditionError(f"{name} is not invariant under the twist")
        if not subspace_leq(bracket_space(L, W, W), W):
            raise PreconditionError(f"{name} is not closed under the bracket")
    return bracket_space(L, H, K)


def derived(L):
    return commutator(L, full_space(L), full_space(L))


def is_perfect(L):
    return derived(L).is_full()


def naive_centre(L):
    """{x : [x, e_j] = 0 for every j}, ignoring the twist."""
    n = L.dim
    # row (j, k) of the system is the k-th coordinate of [x, e_j]
    rows = [tuple(L.bracket[i][j][k] for i in range(n)) for j in range(n) for k in range(n)]
    if not rows:
        return Subspace.zero(n)
    return kernel(Matrix(rows))


def centre(L):
    """{x : [alpha^k(x), y] = 0 for all y and all k >= 0}."""
    return largest_invariant_subspace(L.twist, naive_centre(L))


def centre_from_k1(L):
    """Variant of :func:`centre` that only quantifies over k >= 1.

    Equals the preimage under the twist of :func:`centre`; the two agree
    whenever the twist is surjective.
    """
    return preimage(L.twist, centre(L))


def alpha_identity_check(L):
    """Whether [x, y] = [alpha(x), y] for all x, y."""
    n = L.dim
    d = L.twist - Matrix.identity(n)
    cols = d.columns()
    return all(not any(bracket_eval(L, unit_vector(n, i), cols[j])) for i in range(n) for j in range(n))


# -- sub- and quotient algebras ----------------------------------------------------

def subalgebra(L, W, name=""):
    """The subalgebra on W in its canonical basis, with the inclusion map.

    Returns ``(H, inclusion)`` where ``inclusion`` is a Homomorphism H -> L.
    """
    W = _as_subspace(L, W)
    if not is_subalgebra(L, W):
        raise PreconditionError("subspace is not a subalgebra (twist-invariant and bracket-closed)")
    B = W.basis
    m = len(B)
    tensor = tuple(tuple(W.coordinates(bracket_eval(L, B[a], B[b])) for b in range(m)) for a in range(m))
    tw = Matrix.from_columns([W.coordinates(L.alpha(b)) for b in B], m)
    H = HomLieAlgebra(m, tensor, tw, name or f"sub({L.name})")
    return H, Homomorphism(H, L, W.inclusion())


@dataclass(frozen=True)
class AlgebraQuotient:
    parent: HomLieAlgebra
    ideal: Subspace
    quotient: HomLieAlgebra
    projection: Homomorphism
    space: QuotientSpace = field(repr=False, compare=False)


def quotient_algebra(L, I, name=""):
    I = _as_subspace(L, I)
    if not is_twist_invariant(L, I):
        raise PreconditionError("ideal is not invariant under the twist")
    if not subspace_leq(bracket_space(L, I, full_space(L)), I):
        raise PreconditionError("subspace does not absorb brackets, so it is not an ideal")
    q = QuotientSpace(I)
    reps = q.representative_columns
    tensor = tuple(tuple(q.project(L.bracket[a][b]) for b in reps) for a in reps)
    tw = Matrix.from_columns([q.project(L.twist.column(b)) for b in reps], q.dim)
    names = tuple(L.basis_names[r] + "+I" for r in reps)
    Q = HomLieAlgebra(q.dim, tensor, tw, name or f"{L.name}/I", names)
    return AlgebraQuotient(L, I, Q, Homomorphism(L, Q, q.projection), q)


def abelianisation(L):
    return quotient_algebra(L, derived(L), name=f"{L.name}^ab")


def is_central_extension(f):
    """Whether the kernel of the surjection ``f`` lies in the centre of its source."""
    if not f.is_surjective():
        raise PreconditionError("a central extension must be surjective")
    return subspace_leq(f.kernel(), centre(f.source))


# -- constructors ---------------------------------------------------------------

def is_endomorphism(L, endo):
    return Homomorphism(L, L, endo).is_valid()


def yau_twist(lie, endo, name=""):
    """Deform a Lie algebra by an endomorphism: [x, y]' = [endo x, endo y], twist = endo."""
    endo = as_matrix(endo, lie.dim, lie.dim)
    if not lie.twist.is_identity():
        raise PreconditionError("the Yau twist starts from a Lie algebra (identity twist)")
    if not Homomorphism(lie, lie, endo).is_valid():
        raise PreconditionError("the twisting map is not an algebra endomorphism")
    cols = endo.columns()
    n = lie.dim
    tensor = tuple(tuple(bracket_eval(lie, cols[i], cols[j]) for j in range(n)) for i in range(n))
    return HomLieAlgebra(n, tensor, endo, name or f"{lie.name}_yau", lie.basis_names)


def direct_sum(A, B, name=""):
    n = A.dim + B.dim

    def embed(v, offset):
        out = [ZERO] * n
        out[offset:offset + len(v)] = v
        return tuple(out)

    tensor = [[zero_vector(n) for _ in range(n)] for _ in range(n)]
    for i in range(A.dim):
        for j in range(A.dim):
            tensor[i][j] = embed(A.bracket[i][j], 0)
    for i in range(B.dim):
        for j in range(B.dim):
            tensor[A.dim + i][A.dim + j] = embed(B.bracket[i][j], A.dim)
    rows = [embed(r, 0) for r in A.twist.rows] + [embed(r, A.dim) for r in B.twist.rows]
    names = tuple(f"{s}" for s in A.basis_names) + tuple(f"{s}'" for s in B.basis_names)
    return HomLieAlgebra(n, tuple(tuple(r) for r in tensor), Matrix._raw(tuple(rows), n),
                         name or f"{A.name}+{B.name}", names)


__all__ = [
    "HomLieAlgebra", "AxiomReport", "Homomorphism", "AlgebraQuotient",
    "verify_axioms", "require_valid", "bracket_eval", "twist_eval", "ad_matrix", "basis",
    "yau_twist", "subalgebra_closure", "ideal_closure", "commutator", "derived",
    "is_perfect", "abelianisation", "naive_centre", "centre", "centre_from_k1",
    "quotient_algebra", "is_central_extension", "alpha_identity_check", "subalgebra",
    "is_ideal", "is_subalgebra", "is_twist_invariant", "direct_sum", "identity_map",
    "bracket_space", "full_space", "is_endomorphism",
]
