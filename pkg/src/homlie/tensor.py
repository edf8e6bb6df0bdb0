"""Non-abelian tensor and exterior products of Hom-Lie algebras.

The tensor product M * N is the quotient of the vector space tensor product
by the relation subspace D(M, N); the exterior product further divides by
the central subspace spanned by the classes m * n with eta(m) = mu(n).

Ambient coordinates: the basis tensor e_i (x) f_j sits at index
``i * dim N + j``.  Every quotient here takes its coordinates on non-pivot
columns of the killed subspace, so each quotient basis vector is represented
by a single basis tensor.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Optional

from .actions import (
    CrossedModule, HomAction, adjoint_action, identity_crossed_module,
    inclusion_crossed_module, require_action, verify_action, verify_compatible, verify_crossed,
)
from .algebra import (
    Homomorphism, HomLieAlgebra, alpha_identity_check, bracket_eval, centre, is_ideal,
    is_perfect, quotient_algebra, subalgebra,
)
from .errors import CapExceeded, ConstructionError, DimensionMismatch, PreconditionError
from .exactla import (
    ZERO, Matrix, QuotientSpace, Subspace, _Echelon, hstack, image, kernel, outer,
    subspace_intersect, subspace_leq, subspace_sum, unit_vector,
)

MAX_FACTOR_DIM = 8


def _check_cap(M, N, cap):
    cap = MAX_FACTOR_DIM if cap is None else cap
    if M.dim > cap or N.dim > cap:
        raise CapExceeded(
            f"relation enumeration is capped at factor dimension {cap}; got {M.dim} and {N.dim}")


def _lin(vectors, coeffs, dim):
    out = [ZERO] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


class _Tables:
    """Basis-level data shared by relation enumeration and the product structure."""

    def __init__(self, M, N, act_mn, act_nm):
        self.M, self.N = M, N
        dm, dn = M.dim, N.dim
        self.dm, self.dn = dm, dn
        self.EM = [unit_vector(dm, i) for i in range(dm)]
        self.EN = [unit_vector(dn, j) for j in range(dn)]
        self.aM = [M.alpha(e) for e in self.EM]
        self.aN = [N.alpha(f) for f in self.EN]
        # ^m n and ^n m on basis vectors
        self.mn = [[act_mn.coeffs[i][j] for j in range(dn)] for i in range(dm)]
        self.nm = [[act_nm.coeffs[j][i] for i in range(dm)] for j in range(dn)]
        # for the basis tensor p = (i, j): X_p = ^{f_j} e_i in M, Z_p = ^{e_i} f_j in N
        self.X = [self.nm[j][i] for i in range(dm) for j in range(dn)]
        self.Z = [self.mn[i][j] for i in range(dm) for j in range(dn)]
        self.Y = [N.alpha(z) for z in self.Z]

    def X_of(self, u):
        return _lin(self.X, u, self.dm)

    def Z_of(self, u):
        return _lin(self.Z, u, self.dn)

    def bracket(self, u, v):
        """[u, v] on M (x) N extended from [m(x)n, m'(x)n'] = -(^n m) (x) (^m' n')."""
        x, z = self.X_of(u), self.Z_of(v)
        return tuple(-a for a in outer(x, z))

    def twist(self, u):
        out = [ZERO] * (self.dm * self.dn)
        dn = self.dn
        for p, c in enumerate(u):
            if c:
                i, j = divmod(p, dn)
                for k, a in enumerate(outer(self.aM[i], self.aN[j])):
                    if a:
                        out[k] += c * a
        return tuple(out)


def _image_basis(first, second):
    """Indices p whose pairs (first[p], second[p]) form a basis of their span."""
    e = _Echelon(len(first[0]) + len(second[0]) if first else 0)
    keep = []
    for p, (a, b) in enumerate(zip(first, second)):
        if e.add(tuple(a) + tuple(b)):
            keep.append(p)
    return keep


def relation_generators(M, N, act_mn, act_nm, exhaustive=False):
    """Yield (family, vector) for the generators of D(M, N) in ambient coordinates.

    With ``exhaustive=True`` every basis tuple of every family is produced
    verbatim.  The default drops terms that are negatives or duplicates of
    others (families a, b, d, e are (anti)symmetric in their pairs) and runs
    families d and e over a basis of the image of p -> (^n m, ^m n) resp.
    (^n m, alpha(^m n)); both give the same span because those families are
    multilinear in the basis tensor p through these maps only.
    """
    t = _Tables(M, N, act_mn, act_nm)
    dm, dn = t.dm, t.dn
    if exhaustive:
        yield from _generators_exhaustive(M, N, act_mn, act_nm)
        return
    for i, i2 in combinations(range(dm), 2):
        for j in range(dn):
            v = outer(M.bracket[i][i2], t.aN[j])
            _axpy(v, -1, outer(t.aM[i], t.mn[i2][j]))
            _axpy(v, 1, outer(t.aM[i2], t.mn[i][j]))
            yield "a", v
    for i in range(dm):
        for j, j2 in combinations(range(dn), 2):
            v = outer(t.aM[i], N.bracket[j][j2])
            _axpy(v, -1, outer(t.nm[j2][i], t.aN[j]))
            _axpy(v, 1, outer(t.nm[j][i], t.aN[j2]))
            yield "b", v
    for p in range(dm * dn):
        yield "c", outer(t.X[p], t.Z[p])
    keep = _image_basis(t.X, t.Z)
    for p, q in combinations_with_replacement(keep, 2):
        v = outer(t.X[p], t.Z[q])
        _axpy(v, 1, outer(t.X[q], t.Z[p]))
        yield "d", v
    keep = _image_basis(t.X, t.Y)
    for p, q, r in combinations(keep, 3):
        v = outer(bracket_eval(M, t.X[p], t.X[q]), t.Y[r])
        _axpy(v, 1, outer(bracket_eval(M, t.X[q], t.X[r]), t.Y[p]))
        _axpy(v, 1, outer(bracket_eval(M, t.X[r], t.X[p]), t.Y[q]))
        yield "e", v


def _axpy(v, c, w):
    for k, a in enumerate(w):
        if a:
            v[k] += c * a


def _generators_exhaustive(M, N, act_mn, act_nm):
    # Written directly from the five generator families, one basis tuple at a time.
    dm, dn = M.dim, N.dim
    EM = [unit_vector(dm, i) for i in range(dm)]
    EN = [unit_vector(dn, j) for j in range(dn)]
    aM, aN = M.alpha, N.alpha
    mn = act_mn.act                  # ^m n
    nm = lambda n, m: act_nm.act(n, m)  # ^n m

    def t(m, n):
        return outer(m, n)

    def add(*vs):
        out = [ZERO] * (dm * dn)
        for s, v in vs:
            _axpy(out, s, v)
        return out

    for m in EM:
        for m2 in EM:
            for n in EN:
                yield "a", add((1, t(bracket_eval(M, m, m2), aN(n))),
                               (-1, t(aM(m), mn(m2, n))), (1, t(aM(m2), mn(m, n))))
    for m in EM:
        for n in EN:
            for n2 in EN:
                yield "b", add((1, t(aM(m), bracket_eval(N, n, n2))),
                               (-1, t(nm(n2, m), aN(n))), (1, t(nm(n, m), aN(n2))))
    for m in EM:
        for n in EN:
            yield "c", t(nm(n, m), mn(m, n))
    for m in EM:
        for n in EN:
            for m2 in EM:
                for n2 in EN:
                    yield "d", add((1, t(nm(n, m), mn(m2, n2))), (1, t(nm(n2, m2), mn(m, n))))
    pairs = [(m, n) for m in EM for n in EN]
    for m, n in pairs:
        for m2, n2 in pairs:
            for m3, n3 in pairs:
                x1, x2, x3 = nm(n, m), nm(n2, m2), nm(n3, m3)
                yield "e", add((1, t(bracket_eval(M, x1, x2), aN(mn(m3, n3)))),
                               (1, t(bracket_eval(M, x2, x3), aN(mn(m, n)))),
                               (1, t(bracket_eval(M, x3, x1), aN(mn(m2, n2)))))


def relation_space(M, N, act_mn, act_nm, exhaustive=False, cap=None, check=True):
    """The subspace D(M, N) of Q^(dim M * dim N).

    ``act_mn`` is the action of M on N (m . n), ``act_nm`` that of N on M.
    """
    _check_cap(M, N, cap)
    if check:
        _require_compatible(act_mn, act_nm)
    e = _Echelon(M.dim * N.dim)
    for _, v in relation_generators(M, N, act_mn, act_nm, exhaustive):
        e.add(v)
        if e.full:
            break
    return Subspace._from_echelon(e)


def _require_compatible(act_mn, act_nm):
    require_action(act_mn)
    require_action(act_nm)
    if not verify_compatible(act_mn, act_nm):
        raise PreconditionError("the actions are not compatible")


# -- tensor product ----------------------------------------------------------------

@dataclass
class TensorAudit:
    psi_left_kills_relations: bool
    psi_right_kills_relations: bool
    twist_preserves_relations: bool
    bracket_preserves_relations: bool
    product_axioms: bool
    psi_homomorphisms: bool

    @property
    def ok(self):
        return all(vars(self).values())


@dataclass(eq=False)
class TensorProduct:
    left: HomLieAlgebra
    right: HomLieAlgebra
    act_mn: HomAction
    act_nm: HomAction
    relations: Subspace
    space: QuotientSpace
    product: HomLieAlgebra
    psi_left: Matrix
    psi_right: Matrix
    _tables: _Tables = field(repr=False)

    @property
    def ambient_dim(self):
        return self.left.dim * self.right.dim

    @property
    def dim(self):
        return self.product.dim

    def rep_pair(self, a):
        """Basis tensor (i, j) representing the a-th basis vector of the product."""
        return divmod(self.space.representative_columns[a], self.right.dim)

    def element(self, m, n):
        """Class of m (x) n in product coordinates."""
        return self.space.project(outer(m, n))

    def ambient_bracket(self, u, v):
        return self._tables.bracket(u, v)

    def ambient_twist(self, u):
        return self._tables.twist(u)

    def psi_left_ambient(self, u):
        return tuple(-a for a in self._tables.X_of(u))

    def psi_right_ambient(self, u):
        return self._tables.Z_of(u)

    def audit(self):
        """Check, generator by generator, that the quotient structure is well defined."""
        D = self.relations
        t = self._tables
        psi_l = all(not any(t.X_of(d)) for d in D.basis)
        psi_r = all(not any(t.Z_of(d)) for d in D.basis)
        tw = all(t.twist(d) in D for d in D.basis)
        n = self.ambient_dim
        E = [unit_vector(n, p) for p in range(n)]
        br = all(t.bracket(d, e) in D and t.bracket(e, d) in D for d in D.basis for e in E)
        from .algebra import verify_axioms
        axioms = verify_axioms(self.product).ok
        homs = (Homomorphism(self.product, self.left, self.psi_left).is_valid()
                and Homomorphism(self.product, self.right, self.psi_right).is_valid())
        return TensorAudit(psi_l, psi_r, tw, br, axioms, homs)


def tensor_product(M, N, act_mn, act_nm, cap=None, audit=True, exhaustive=False):
    """The non-abelian tensor product of M and N under compatible actions."""
    _check_cap(M, N, cap)
    _require_compatible(act_mn, act_nm)
    D = relation_space(M, N, act_mn, act_nm, exhaustive=exhaustive, cap=cap, check=False)
    t = _Tables(M, N, act_mn, act_nm)
    q = QuotientSpace(D)
    reps = q.representative_columns
    tensor = tuple(tuple(q.project(tuple(-a for a in outer(t.X[ra], t.Z[rb]))) for rb in reps)
                   for ra in reps)
    dn = N.dim
    tw_cols = []
    for rb in reps:
        i, j = divmod(rb, dn)
        tw_cols.append(q.project(outer(t.aM[i], t.aN[j])))
    names = tuple(f"{M.basis_names[r // dn]}*{N.basis_names[r % dn]}" for r in reps)
    prod = HomLieAlgebra(q.dim, tensor, Matrix.from_columns(tw_cols, q.dim),
                         f"{M.name}*{N.name}", names)
    psi_l = Matrix.from_columns([tuple(-a for a in t.X[r]) for r in reps], M.dim)
    psi_r = Matrix.from_columns([t.Z[r] for r in reps], N.dim)
    T = TensorProduct(M, N, act_mn, act_nm, D, q, prod, psi_l, psi_r, t)
    if audit:
        report = T.audit()
        if not report.ok:
            raise ConstructionError(f"tensor product audit failed: {report}")
    return T


@lru_cache(maxsize=64)
def tensor_square(L, cap=None):
    """L * L with both actions adjoint."""
    ad = adjoint_action(L)
    return tensor_product(L, L, ad, ad, cap=cap)


def induced_actions_on_tensor(T):
    """Actions of M and of N on M * N.

    m'.(m*n) = [m', m] * alpha(n) + alpha(m) * (m'.n)
    n'.(m*n) = (n'.m) * alpha(n) + alpha(m) * [n', n]
    """
    M, N = T.left, T.right
    t = T._tables
    q = T.space

    def on_m(i2, u):
        out = [ZERO] * T.ambient_dim
        for p, c in enumerate(u):
            if c:
                i, j = divmod(p, N.dim)
                _axpy(out, c, outer(M.bracket[i2][i], t.aN[j]))
                _axpy(out, c, outer(t.aM[i], t.mn[i2][j]))
        return out

    def on_n(j2, u):
        out = [ZERO] * T.ambient_dim
        for p, c in enumerate(u):
            if c:
                i, j = divmod(p, N.dim)
                _axpy(out, c, outer(t.nm[j2][i], t.aN[j]))
                _axpy(out, c, outer(t.aM[i], N.bracket[j2][j]))
        return out

    for fn, count in ((on_m, M.dim), (on_n, N.dim)):
        for k in range(count):
            if not all(tuple(fn(k, d)) in T.relations for d in T.relations.basis):
                raise ConstructionError("induced action does not preserve the relation subspace")

    reps = q.representative_columns
    amb = T.ambient_dim
    cm = tuple(tuple(q.project(on_m(i2, unit_vector(amb, r))) for r in reps) for i2 in range(M.dim))
    cn = tuple(tuple(q.project(on_n(j2, unit_vector(amb, r))) for r in reps) for j2 in range(N.dim))
    return HomAction(M, T.product, cm), HomAction(N, T.product, cn)


@dataclass
class TensorLemmaReport:
    kernel_psi_left_central: bool
    kernel_psi_right_central: bool
    image_acts_trivially_left: bool
    image_acts_trivially_right: bool
    identity_psi_left: bool
    identity_psi_right: bool
    identity_inner_left: bool
    identity_inner_right: bool
    induced_actions_valid: bool

    @property
    def ok(self):
        return all(vars(self).values())


def tensor_lemma_report(T):
    """Structural identities relating M * N to M and N through the psi maps."""
    P = T.product
    q = P.dim
    act_m, act_n = induced_actions_on_tensor(T)
    Z = centre(P)
    kl, kr = kernel(T.psi_left), kernel(T.psi_right)
    il, ir = image(T.psi_left), image(T.psi_right)

    def trivial(act, im, ker):
        return all(not any(act.act(x, k)) for x in im.basis for k in ker.basis)

    E = [unit_vector(q, a) for a in range(q)]
    M, N = T.left, T.right
    psl = lambda v: T.psi_left.apply(v)
    psr = lambda v: T.psi_right.apply(v)
    id_l = all(psl(act_m.act(unit_vector(M.dim, i), e)) == bracket_eval(M, M.alpha(unit_vector(M.dim, i)), psl(e))
               for i in range(M.dim) for e in E)
    id_r = all(psr(act_n.act(unit_vector(N.dim, j), e)) == bracket_eval(N, N.alpha(unit_vector(N.dim, j)), psr(e))
               for j in range(N.dim) for e in E)
    inner_l = all(act_m.act(psl(e), e2) == bracket_eval(P, P.alpha(e), e2) for e in E for e2 in E)
    inner_r = all(act_n.act(psr(e), e2) == bracket_eval(P, P.alpha(e), e2) for e in E for e2 in E)
    return TensorLemmaReport(
        subspace_leq(kl, Z), subspace_leq(kr, Z),
        trivial(act_m, il, kl), trivial(act_n, ir, kr),
        id_l, id_r, inner_l, inner_r,
        verify_action(act_m).ok and verify_action(act_n).ok,
    )


# -- exterior product ------------------------------------------------------------

def _pullback(eta, mu):
    """Basis of {(m, n) : eta(m) = mu(n)} as pairs of vectors."""
    dm = eta.m_alg.dim
    system = hstack([eta.mu, mu.mu.scale(-1)], eta.l_alg.dim)
    return [(v[:dm], v[dm:]) for v in kernel(system).basis]


def _quadratic_span(pairs):
    """Spanning set of {m (x) n : (m, n) in the span of ``pairs``} (needs 2 invertible)."""
    gens = [outer(m, n) for m, n in pairs]
    for (m1, n1), (m2, n2) in combinations(pairs, 2):
        v = outer(m1, n2)
        _axpy(v, 1, outer(m2, n1))
        gens.append(v)
    return gens


def induced_compatible_actions(eta, mu):
    """Actions of M on N and N on M through the common base: m.n = eta(m).n, n.m = mu(n).m."""
    M, N = eta.m_alg, mu.m_alg
    act_mn = HomAction(M, N, tuple(tuple(mu.action.act(eta.mu.column(i), unit_vector(N.dim, j))
                                         for j in range(N.dim)) for i in range(M.dim)))
    act_nm = HomAction(N, M, tuple(tuple(eta.action.act(mu.mu.column(j), unit_vector(M.dim, i))
                                         for i in range(M.dim)) for j in range(N.dim)))
    return act_mn, act_nm


@dataclass(eq=False)
class ExteriorProduct:
    tensor: TensorProduct
    eta: CrossedModule
    mu: CrossedModule
    box: Subspace
    space: QuotientSpace
    product: HomLieAlgebra
    pi: Matrix
    box_ambient: Subspace = field(repr=False)

    @property
    def dim(self):
        return self.product.dim

    @property
    def left(self):
        return self.tensor.left

    @property
    def right(self):
        return self.tensor.right

    @property
    def killed_ambient(self):
        return subspace_sum(self.tensor.relations, self.box_ambient)

    def project_ambient(self, u):
        return self.space.project(self.tensor.space.project(u))

    def element(self, m, n):
        return self.project_ambient(outer(m, n))

    def rep_pair(self, a):
        return self.tensor.rep_pair(self.space.representative_columns[a])


def box_subspace(eta, mu, T):
    """M box N inside the coordinates of M * N, plus its ambient lift."""
    pairs = _pullback(eta, mu)
    gens = _quadratic_span(pairs)
    amb = Subspace.span(gens, T.ambient_dim)
    return Subspace.span([T.space.project(g) for g in gens], T.dim), amb


def exterior_product(eta, mu, cap=None, audit=True):
    """(M * N) / (M box N) for crossed modules eta: M -> L and mu: N -> L."""
    if eta.l_alg.dim != mu.l_alg.dim or eta.l_alg != mu.l_alg:
        raise PreconditionError("the crossed modules must share their base algebra")
    for x in (eta, mu):
        if not verify_crossed(x):
            raise PreconditionError("input is not a crossed module")
    act_mn, act_nm = induced_compatible_actions(eta, mu)
    T = tensor_product(eta.m_alg, mu.m_alg, act_mn, act_nm, cap=cap, audit=audit)
    box, box_amb = box_subspace(eta, mu, T)
    if audit and not subspace_leq(box, centre(T.product)):
        raise ConstructionError("the box subspace is not central in the tensor product")
    Q = quotient_algebra(T.product, box, name=f"{eta.m_alg.name}^{mu.m_alg.name}")
    prod = Q.quotient
    names = tuple(n.replace("*", "^").removesuffix("+I") for n in prod.basis_names)
    prod = HomLieAlgebra(prod.dim, prod.bracket, prod.twist, prod.name, names)
    return ExteriorProduct(T, eta, mu, box, Q.space, prod, Q.projection.matrix, box_amb)


@lru_cache(maxsize=64)
def exterior_square(L, cap=None):
    x = identity_crossed_module(L)
    return exterior_product(x, x, cap=cap)


def induced_map(src, tgt, f, g):
    """Matrix of m ^ n -> f(m) ^ g(n) between exterior (or tensor) products.

    Raises ConstructionError unless the kernel generators of the source land
    in the killed subspace of the target, i.e. unless the map is well defined.
    """
    f, g = _as_mat(f), _as_mat(g)
    src_kill = _killed(src)
    tgt_kill = _killed(tgt)
    dn = _right(src).dim

    def push(u):
        out = [ZERO] * (_left(tgt).dim * _right(tgt).dim)
        fc, gc = f.columns(), g.columns()
        for p, c in enumerate(u):
            if c:
                i, j = divmod(p, dn)
                _axpy(out, c, outer(fc[i], gc[j]))
        return tuple(out)

    if not all(push(v) in tgt_kill for v in src_kill.basis):
        raise ConstructionError("induced map is not well defined on the quotient")
    cols = []
    for a in range(src.dim):
        i, j = src.rep_pair(a)
        cols.append(_project(tgt, outer(f.column(i), g.column(j))))
    return Matrix.from_columns(cols, tgt.dim)


def _as_mat(f):
    return f.matrix if isinstance(f, Homomorphism) else f


def _killed(x):
    return x.killed_ambient if isinstance(x, ExteriorProduct) else x.relations


def _left(x):
    return x.left


def _right(x):
    return x.right


def _project(x, u):
    return x.project_ambient(u) if isinstance(x, ExteriorProduct) else x.space.project(u)


# -- theta, phi and the universal central extension --------------------------------

@dataclass(eq=False)
class ThetaMap:
    exterior: ExteriorProduct
    target_space: Subspace
    target: HomLieAlgebra
    matrix: Matrix
    ambient: Matrix = field(repr=False)
    crossed_module: Optional[bool] = None

    @property
    def hom(self):
        return Homomorphism(self.exterior.product, self.target, self.matrix)

    def kernel(self):
        return kernel(self.matrix)

    def image(self):
        return image(self.matrix)


def _require_ideal_inclusions(e):
    for x in (e.eta, e.mu):
        if not kernel(x.mu).is_zero():
            raise PreconditionError("theta needs the crossed modules to be inclusions of ideals")


def theta(e):
    """theta(m ^ n) = [m, n], a homomorphism M ^ N -> M cap N."""
    _require_ideal_inclusions(e)
    L = e.eta.l_alg
    I, J = image(e.eta.mu), image(e.mu.mu)
    K = subspace_intersect(I, J)
    target, _ = subalgebra(L, K, name=f"{L.name} cap")
    ec, mc = e.eta.mu.columns(), e.mu.mu.columns()
    dn = e.right.dim
    amb_cols = []
    for p in range(e.left.dim * dn):
        i, j = divmod(p, dn)
        amb_cols.append(bracket_eval(L, ec[i], mc[j]))
    ambient = Matrix.from_columns(amb_cols, L.dim)
    if not all(not any(ambient.apply(v)) for v in e.killed_ambient.basis):
        raise ConstructionError("theta does not vanish on the relations and the box")
    cols = []
    for a in range(e.dim):
        i, j = e.rep_pair(a)
        cols.append(K.coordinates(bracket_eval(L, ec[i], mc[j])))
    th = ThetaMap(e, K, target, Matrix.from_columns(cols, K.dim), ambient)
    if not th.hom.is_valid():
        raise ConstructionError("theta is not a homomorphism")
    if alpha_identity_check(L):
        th.crossed_module = _theta_is_crossed(th)
    return th


def _theta_is_crossed(th):
    e = th.exterior
    L = e.eta.l_alg
    K = th.target_space
    I, J = image(e.eta.mu), image(e.mu.mu)
    M, N = e.left, e.right
    amb = M.dim * N.dim
    coeffs = []
    for x in K.basis:
        row = []
        for a in range(e.dim):
            i, j = e.rep_pair(a)
            m, n = e.eta.mu.column(i), e.mu.mu.column(j)
            xm = I.coordinates(bracket_eval(L, x, m))
            xn = J.coordinates(bracket_eval(L, x, n))
            u = outer(xm, N.alpha(unit_vector(N.dim, j)))
            _axpy(u, 1, outer(M.alpha(unit_vector(M.dim, i)), xn))
            row.append(e.project_ambient(u))
        coeffs.append(tuple(row))
    assert amb == e.tensor.ambient_dim
    act = HomAction(th.target, e.product, tuple(coeffs))
    x = CrossedModule(e.product, th.target, th.matrix, act)
    try:
        return verify_crossed(x)
    except PreconditionError:
        return False


@dataclass
class PhiReport:
    matrix: Matrix
    formulas_agree: bool
    is_homomorphism: bool
    action_valid: bool
    precrossed: bool

    @property
    def ok(self):
        return self.formulas_agree and self.is_homomorphism and self.action_valid and self.precrossed


def phi_precrossed(e):
    """phi(m ^ n) = mu(m . n) = -eta(n . m) with the action of L on M ^ N."""
    L = e.eta.l_alg
    if not alpha_identity_check(L):
        raise PreconditionError("the base algebra does not satisfy the alpha-identity condition")
    T = e.tensor
    t = T._tables
    M, N = e.left, e.right
    cols, agree = [], True
    for a in range(e.dim):
        i, j = e.rep_pair(a)
        p = i * N.dim + j
        v1 = e.mu.mu.apply(t.Z[p])
        v2 = tuple(-c for c in e.eta.mu.apply(t.X[p]))
        agree = agree and v1 == v2
        cols.append(v1)
    phi = Matrix.from_columns(cols, L.dim)
    # phi must vanish on everything killed in the exterior product
    amb_phi = [e.mu.mu.apply(t.Z[p]) for p in range(T.ambient_dim)]
    amb = Matrix.from_columns(amb_phi, L.dim)
    agree = agree and all(not any(amb.apply(v)) for v in e.killed_ambient.basis)

    coeffs = []
    for l in range(L.dim):
        el = unit_vector(L.dim, l)
        row = []
        for a in range(e.dim):
            i, j = e.rep_pair(a)
            lm = e.eta.action.act(el, unit_vector(M.dim, i))
            ln = e.mu.action.act(el, unit_vector(N.dim, j))
            u = outer(lm, N.alpha(unit_vector(N.dim, j)))
            _axpy(u, 1, outer(M.alpha(unit_vector(M.dim, i)), ln))
            row.append(e.project_ambient(u))
        coeffs.append(tuple(row))
    act = HomAction(L, e.product, tuple(coeffs))
    hom_ok = Homomorphism(e.product, L, phi).is_valid()
    act_ok = verify_action(act).ok
    pre = all(phi.apply(act.act(unit_vector(L.dim, l), unit_vector(e.dim, a)))
              == bracket_eval(L, unit_vector(L.dim, l), phi.column(a))
              for l in range(L.dim) for a in range(e.dim))
    return PhiReport(phi, agree, hom_ok, act_ok, pre)


@dataclass(eq=False)
class UceReport:
    exterior: ExteriorProduct
    theta: ThetaMap
    kernel: Subspace
    box_zero: bool
    kernel_central: bool
    exterior_perfect: bool
    theta_surjective: bool

    @property
    def ok(self):
        return self.box_zero and self.kernel_central and self.exterior_perfect and self.theta_surjective


def uce_of_perfect(L, cap=None):
    """The exterior square of a perfect algebra with theta, its universal central extension."""
    if not is_perfect(L):
        raise PreconditionError(f"{L.name or 'algebra'} is not perfect")
    e = exterior_square(L, cap)
    th = theta(e)
    ker = th.kernel()
    rep = UceReport(e, th, ker, e.box.is_zero(), subspace_leq(ker, centre(e.product)),
                    is_perfect(e.product), th.hom.is_surjective())
    if not rep.ok:
        raise ConstructionError(f"universal central extension checks failed: {rep}")
    return rep


# -- the right exact sequence N ^ L -> L ^ L -> L/N ^ L/N -> 0 ---------------------

@dataclass(eq=False)
class SequenceReport:
    ideal: Subspace
    dim_nl: int
    dim_ll: int
    dim_qq: int
    first_map: Matrix
    second_map: Matrix
    image_first: Subspace
    kernel_second: Subspace
    surjective: bool
    exact_middle: bool

    @property
    def exact(self):
        return self.surjective and self.exact_middle

    def as_dict(self):
        return {"ideal_dim": self.ideal.dim, "dim_NxL": self.dim_nl, "dim_LxL": self.dim_ll,
                "dim_QxQ": self.dim_qq, "image_dim": self.image_first.dim,
                "kernel_dim": self.kernel_second.dim, "surjective": self.surjective,
                "exact_middle": self.exact_middle, "exact": self.exact}


def exterior_sequence_check(L, N, cap=None):
    if not isinstance(N, Subspace):
        N = Subspace.span(N, L.dim)
    if not is_ideal(L, N):
        raise PreconditionError("N is not a twist-invariant ideal")
    inc = inclusion_crossed_module(L, N)
    idx = identity_crossed_module(L)
    e_nl = exterior_product(inc, idx, cap=cap)
    e_ll = exterior_square(L, cap)
    Q = quotient_algebra(L, N)
    e_qq = exterior_square(Q.quotient, cap)
    f1 = induced_map(e_nl, e_ll, inc.mu, Matrix.identity(L.dim))
    p = Q.projection.matrix
    f2 = induced_map(e_ll, e_qq, p, p)
    im1, ker2 = image(f1), kernel(f2)
    return SequenceReport(N, e_nl.dim, e_ll.dim, e_qq.dim, f1, f2, im1, ker2,
                          f2.rank() == e_qq.dim, im1 == ker2)


# -- exterior pairings ----------------------------------------------------------------

@dataclass
class PairingReport:
    a: bool
    b: bool
    c: bool
    d: bool
    e: bool

    @property
    def ok(self):
        return self.a and self.b and self.c and self.d and self.e


def verify_pairing(h, eta, mu, P):
    """Check the exterior pairing axioms for h[i][j] = h(e_i, f_j) in P."""
    M, N = eta.m_alg, mu.m_alg
    if len(h) != M.dim or any(len(r) != N.dim for r in h):
        raise DimensionMismatch("pairing table has the wrong shape")
    if any(len(v) != P.dim for r in h for v in r):
        raise DimensionMismatch("pairing values have the wrong length")
    act_mn, act_nm = induced_compatible_actions(eta, mu)
    H = lambda m, n: _pair(h, m, n, P.dim)
    EM = [unit_vector(M.dim, i) for i in range(M.dim)]
    EN = [unit_vector(N.dim, j) for j in range(N.dim)]
    aM, aN = M.alpha, N.alpha

    def sub(u, v):
        return tuple(x - y for x, y in zip(u, v))

    ax_a = all(H(bracket_eval(M, m, m2), aN(n)) == sub(H(aM(m), act_mn.act(m2, n)), H(aM(m2), act_mn.act(m, n)))
               for m in EM for m2 in EM for n in EN)
    ax_b = all(H(aM(m), bracket_eval(N, n, n2)) == sub(H(act_nm.act(n2, m), aN(n)), H(act_nm.act(n, m), aN(n2)))
               for m in EM for n in EN for n2 in EN)
    ax_c = all(H(act_nm.act(n, m), act_mn.act(m2, n2)) == tuple(-x for x in bracket_eval(P, H(m, n), H(m2, n2)))
               for m in EM for n in EN for m2 in EM for n2 in EN)
    pairs = _pullback(eta, mu)
    ax_d = all(not any(H(m, n)) for m, n in pairs) and all(
        not any(tuple(x + y for x, y in zip(H(m1, n2), H(m2, n1))))
        for (m1, n1), (m2, n2) in combinations(pairs, 2))
    ax_e = all(H(aM(m), aN(n)) == P.alpha(H(m, n)) for m in EM for n in EN)
    return PairingReport(ax_a, ax_b, ax_c, ax_d, ax_e)


def _pair(h, m, n, dim):
    out = [ZERO] * dim
    for i, a in enumerate(m):
        if a:
            for j, b in enumerate(n):
                if b:
                    _axpy(out, a * b, h[i][j])
    return tuple(out)


def canonical_pairing(e):
    """h(m, n) = m ^ n as a table into the exterior product."""
    M, N = e.left, e.right
    return tuple(tuple(e.element(unit_vector(M.dim, i), unit_vector(N.dim, j)) for j in range(N.dim))
                 for i in range(M.dim))


def bracket_pairing(eta, mu):
    """h(m, n) = [m, n] into M cap N for two ideal inclusions; returns (table, target algebra)."""
    L = eta.l_alg
    K = subspace_intersect(image(eta.mu), image(mu.mu))
    target, _ = subalgebra(L, K)
    ec, mc = eta.mu.columns(), mu.mu.columns()
    table = tuple(tuple(K.coordinates(bracket_eval(L, ec[i], mc[j])) for j in range(len(mc)))
                  for i in range(len(ec)))
    return table, target


__all__ = [
    "MAX_FACTOR_DIM", "relation_generators", "relation_space", "TensorProduct", "tensor_product",
    "tensor_square", "induced_actions_on_tensor", "tensor_lemma_report", "box_subspace",
    "ExteriorProduct", "exterior_product", "exterior_square", "induced_map", "theta", "ThetaMap",
    "phi_precrossed", "PhiReport", "uce_of_perfect", "UceReport", "exterior_sequence_check",
    "SequenceReport", "verify_pairing", "canonical_pairing", "bracket_pairing",
    "induced_compatible_actions",
]
