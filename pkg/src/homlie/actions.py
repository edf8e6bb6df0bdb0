"""Hom-actions, compatible pairs of actions, and (pre)crossed modules."""

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .algebra import (
    Homomorphism, HomLieAlgebra, bracket_eval, centre, is_ideal, subalgebra,
    bracket_space, full_space,
)
from .errors import DimensionMismatch, PreconditionError
from .exactla import ZERO, Matrix, Subspace, as_vector, subspace_leq, unit_vector, vsub, zero_vector


@dataclass(frozen=True)
class HomAction:
    """An action of ``actor`` on ``actee``: coeffs[i][j] are the coordinates of e_i . f_j."""

    actor: HomLieAlgebra
    actee: HomLieAlgebra
    coeffs: tuple

    def __post_init__(self):
        a, b = self.actor.dim, self.actee.dim
        if len(self.coeffs) != a or any(len(r) != b for r in self.coeffs):
            raise DimensionMismatch(f"action coefficients are not {a} x {b}")
        if any(len(v) != b for r in self.coeffs for v in r):
            raise DimensionMismatch("action coefficient vectors have the wrong length")

    @classmethod
    def from_function(cls, actor, actee, fn):
        """Tabulate ``fn(x, m)`` on basis vectors."""
        rows = tuple(tuple(as_vector(fn(unit_vector(actor.dim, i), unit_vector(actee.dim, j)), actee.dim)
                           for j in range(actee.dim)) for i in range(actor.dim))
        return cls(actor, actee, rows)

    @classmethod
    def trivial(cls, actor, actee):
        z = zero_vector(actee.dim)
        return cls(actor, actee, tuple(tuple(z for _ in range(actee.dim)) for _ in range(actor.dim)))

    @cached_property
    def _terms(self):
        return [[[(k, c) for k, c in enumerate(v) if c] for v in row] for row in self.coeffs]

    def act(self, x, m):
        out = [ZERO] * self.actee.dim
        terms = self._terms
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(m):
                if not b:
                    continue
                ab = a * b
                for k, c in terms[i][j]:
                    out[k] += ab * c
        return tuple(out)

    def is_trivial(self):
        return all(not any(v) for r in self.coeffs for v in r)

    def with_coefficient(self, i, j, value):
        """A copy with one coefficient vector replaced (used to build counterexamples)."""
        rows = [list(r) for r in self.coeffs]
        rows[i][j] = as_vector(value, self.actee.dim)
        return HomAction(self.actor, self.actee, tuple(tuple(r) for r in rows))


@dataclass
class ActionReport:
    a: bool
    b: bool
    c: bool
    a_failure: Optional[tuple] = None
    b_failure: Optional[tuple] = None
    c_failure: Optional[tuple] = None

    @property
    def ok(self):
        return self.a and self.b and self.c


def verify_action(act):
    L, M = act.actor, act.actee
    n, m = L.dim, M.dim
    EL = [unit_vector(n, i) for i in range(n)]
    EM = [unit_vector(m, j) for j in range(m)]
    aL = [L.alpha(x) for x in EL]
    aM = [M.alpha(v) for v in EM]
    A = act.act

    a_fail = None
    for i in range(n):
        for i2 in range(n):
            for j in range(m):
                lhs = A(L.bracket[i][i2], aM[j])
                rhs = vsub(A(aL[i], A(EL[i2], EM[j])), A(aL[i2], A(EL[i], EM[j])))
                if lhs != rhs:
                    a_fail = (i, i2, j)
                    break
            if a_fail:
                break
        if a_fail:
            break

    b_fail = None
    for i in range(n):
        for j in range(m):
            for j2 in range(m):
                lhs = A(aL[i], M.bracket[j][j2])
                rhs = bracket_eval(M, A(EL[i], EM[j]), aM[j2])
                rhs = tuple(p + q for p, q in zip(rhs, bracket_eval(M, aM[j], A(EL[i], EM[j2]))))
                if lhs != rhs:
                    b_fail = (i, j, j2)
                    break
            if b_fail:
                break
        if b_fail:
            break

    c_fail = next(((i, j) for i in range(n) for j in range(m)
                   if M.alpha(A(EL[i], EM[j])) != A(aL[i], aM[j])), None)
    return ActionReport(a_fail is None, b_fail is None, c_fail is None, a_fail, b_fail, c_fail)


def require_action(act):
    r = verify_action(act)
    if not r.ok:
        bad = [k for k in "abc" if not getattr(r, k)]
        raise PreconditionError(f"Hom-action fails axiom(s) {', '.join(bad)}")
    return act


def adjoint_action(L):
    return HomAction(L, L, L.bracket)


def action_from_ideal(L, K):
    """Action of L on the ideal K by the bracket of L, in K's canonical basis.

    Returns ``(action, inclusion)``; ``inclusion`` is the homomorphism K -> L.
    """
    if not isinstance(K, Subspace):
        K = Subspace.span(K, L.dim)
    if not is_ideal(L, K):
        raise PreconditionError("subspace is not a twist-invariant ideal")
    Kalg, inc = subalgebra(L, K, name=f"ideal({L.name})")
    B = K.basis
    coeffs = tuple(tuple(K.coordinates(bracket_eval(L, unit_vector(L.dim, i), b)) for b in B)
                   for i in range(L.dim))
    return HomAction(L, Kalg, coeffs), inc


def action_from_hom(f):
    """x . m = [f(x), m] for a homomorphism f: L -> M."""
    if not f.is_valid():
        raise PreconditionError("map is not a homomorphism of Hom-Lie algebras")
    M = f.target
    cols = f.matrix.columns()
    coeffs = tuple(tuple(bracket_eval(M, c, unit_vector(M.dim, j)) for j in range(M.dim)) for c in cols)
    return HomAction(f.source, M, coeffs)


def verify_compatible(a, b):
    """``a`` is an action of M on N, ``b`` an action of N on M."""
    M, N = a.actor, a.actee
    if (b.actor.dim, b.actee.dim) != (N.dim, M.dim):
        raise DimensionMismatch("the two actions do not run between the same pair of algebras")
    EM = [unit_vector(M.dim, i) for i in range(M.dim)]
    EN = [unit_vector(N.dim, j) for j in range(N.dim)]
    for m in EM:
        for n in EN:
            mn = a.act(m, n)
            nm = b.act(n, m)
            for m2 in EM:
                if b.act(mn, m2) != bracket_eval(M, m2, nm):
                    return False
            for n2 in EN:
                if a.act(nm, n2) != bracket_eval(N, n2, mn):
                    return False
    return True


# -- crossed modules -------------------------------------------------------------

@dataclass(frozen=True)
class CrossedModule:
    m_alg: HomLieAlgebra
    l_alg: HomLieAlgebra
    mu: Matrix
    action: HomAction

    def __post_init__(self):
        if self.mu.shape != (self.l_alg.dim, self.m_alg.dim):
            raise DimensionMismatch("structure map has the wrong shape")
        if self.action.actor.dim != self.l_alg.dim or self.action.actee.dim != self.m_alg.dim:
            raise DimensionMismatch("action does not run from the base to the module")

    @property
    def hom(self):
        return Homomorphism(self.m_alg, self.l_alg, self.mu)


def _check_xmod_inputs(x):
    if not x.hom.is_valid():
        raise PreconditionError("structure map is not a homomorphism")
    require_action(x.action)


def _precrossed_failure(x):
    L, M, mu, A = x.l_alg, x.m_alg, x.mu, x.action.act
    for i in range(L.dim):
        e = unit_vector(L.dim, i)
        for j in range(M.dim):
            m = unit_vector(M.dim, j)
            if mu.apply(A(e, m)) != bracket_eval(L, e, mu.column(j)):
                return (i, j)
    return None


def _crossed_failure(x):
    M, mu, A = x.m_alg, x.mu, x.action.act
    for j in range(M.dim):
        for j2 in range(M.dim):
            if A(mu.column(j), unit_vector(M.dim, j2)) != M.bracket[j][j2]:
                return (j, j2)
    return None


def verify_precrossed(x):
    _check_xmod_inputs(x)
    return _precrossed_failure(x) is None


def verify_crossed(x):
    _check_xmod_inputs(x)
    return _precrossed_failure(x) is None and _crossed_failure(x) is None


def inclusion_crossed_module(L, K):
    """The inclusion of an ideal K into L, acted on by the bracket."""
    act, inc = action_from_ideal(L, K)
    return CrossedModule(act.actee, L, inc.matrix, act)


def identity_crossed_module(L):
    return CrossedModule(L, L, Matrix.identity(L.dim), adjoint_action(L))


def zero_crossed_module(module_action):
    """0: M -> L for a Hom-module M over L (M abelian)."""
    L, M = module_action.actor, module_action.actee
    return CrossedModule(M, L, Matrix.zeros(L.dim, M.dim), module_action)


@dataclass
class CrossedModuleReport:
    image: Subspace
    image_is_ideal: bool
    kernel: Subspace
    kernel_in_centre: bool

    def as_dict(self):
        return {"image_dim": self.image.dim, "image_is_ideal": self.image_is_ideal,
                "kernel_dim": self.kernel.dim, "kernel_in_centre": self.kernel_in_centre}


def xmod_structure_report(x):
    if not verify_crossed(x):
        raise PreconditionError("not a crossed module")
    f = x.hom
    im, ker = f.image(), f.kernel()
    L = x.l_alg
    im_ideal = subspace_leq(bracket_space(L, im, full_space(L)), im) and is_ideal(L, im)
    return CrossedModuleReport(im, im_ideal, ker, subspace_leq(ker, centre(x.m_alg)))
