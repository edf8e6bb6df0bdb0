"""Non-abelian tensor and exterior products.

Dimensions frozen here come from the exhaustive relation enumeration
(``exhaustive=True``, every basis tuple of every generator family), which
the default reduced enumeration is checked against.
"""

import itertools

import pytest

from homlie.actions import (
    HomAction, adjoint_action, identity_crossed_module, inclusion_crossed_module,
)
from homlie.algebra import (
    HomLieAlgebra, centre, derived, direct_sum, is_perfect, verify_axioms,
)
from homlie.catalogue import get, list_catalogue, random_homlie
from homlie.errors import CapExceeded, ConstructionError, PreconditionError
from homlie.exactla import Matrix, Subspace, outer, subspace_leq
from homlie.tensor import (
    bracket_pairing, canonical_pairing, exterior_product, exterior_sequence_check,
    exterior_square, induced_actions_on_tensor, induced_compatible_actions, induced_map,
    phi_precrossed, relation_space, tensor_lemma_report, tensor_product, tensor_square, theta,
    uce_of_perfect, verify_pairing,
)

SL2 = get("sl2").algebra
H3 = get("heisenberg3").algebra
E2 = get("E2").algebra
A1 = get("abelian_1").algebra
A2 = get("abelian_2").algebra


def small_entries():
    return [e for e in list_catalogue() if e.algebra.dim <= 4]


# -- relation space ------------------------------------------------------------

def test_relation_space_trivial():
    t = HomAction.trivial(A1, A1)
    assert relation_space(A1, A1, t, t).is_zero()


def test_relation_space_sl2_dim_6():
    ad = adjoint_action(SL2)
    assert relation_space(SL2, SL2, ad, ad).dim == 6
    assert relation_space(SL2, SL2, ad, ad, exhaustive=True).dim == 6


def test_relation_space_heisenberg():
    ad = adjoint_action(H3)
    D = relation_space(H3, H3, ad, ad, exhaustive=True)
    assert D.dim == 3
    assert tensor_square(H3).dim == 6


@pytest.mark.parametrize("entry", small_entries(), ids=lambda e: e.id)
def test_reduced_enumeration_matches_exhaustive(entry):
    L = entry.algebra
    ad = adjoint_action(L)
    assert relation_space(L, L, ad, ad) == relation_space(L, L, ad, ad, exhaustive=True)


@pytest.mark.parametrize("seed", range(12))
def test_reduced_enumeration_matches_exhaustive_random(seed):
    kind = ("identity", "zero", "diagonal", "nilpotent", "general")[seed % 5]
    L = random_homlie(3, 0.6, kind, seed)
    ad = adjoint_action(L)
    assert relation_space(L, L, ad, ad) == relation_space(L, L, ad, ad, exhaustive=True)


def test_reduced_enumeration_matches_exhaustive_for_ideal_pairs():
    for L, I in ((H3, [(0, 0, 1)]), (E2, [(1, 0)]), (SL2, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])):
        inc = inclusion_crossed_module(L, I)
        mn, nm = induced_compatible_actions(inc, identity_crossed_module(L))
        assert relation_space(inc.m_alg, L, mn, nm) == \
            relation_space(inc.m_alg, L, mn, nm, exhaustive=True)


def test_incompatible_actions_rejected():
    ad, triv = adjoint_action(SL2), HomAction.trivial(SL2, SL2)
    with pytest.raises(PreconditionError):
        tensor_product(SL2, SL2, ad, triv)


def test_cap():
    big = HomLieAlgebra.abelian(9)
    with pytest.raises(CapExceeded):
        tensor_square(big)
    assert tensor_square(HomLieAlgebra.abelian(2), cap=2).dim == 4
    with pytest.raises(CapExceeded):
        tensor_square(HomLieAlgebra.abelian(3), cap=2)


# -- tensor product --------------------------------------------------------------

def test_abelian_tensor_is_vector_tensor():
    M, N = HomLieAlgebra.abelian(2), HomLieAlgebra.abelian(3)
    T = tensor_product(M, N, HomAction.trivial(M, N), HomAction.trivial(N, M))
    assert T.dim == 6 and T.product.is_abelian()
    a, b = induced_actions_on_tensor(T)
    assert a.is_trivial() and b.is_trivial()


def test_sl2_tensor_square():
    T = tensor_square(SL2)
    assert T.dim == 3 and is_perfect(T.product)
    assert verify_axioms(T.product).ok


def test_E2_tensor_square():
    T = tensor_square(E2)
    assert T.relations.dim == 2 and T.dim == 2
    assert T.audit().ok


def test_psi_formulas():
    T = tensor_square(H3)
    x, y = (1, 0, 0), (0, 1, 0)
    # psi_left(m * n) = -(n . m) = -[n, m];  psi_right(m * n) = m . n = [m, n]
    u = T.element(x, y)
    assert T.psi_left.apply(u) == (0, 0, 1)
    assert T.psi_right.apply(u) == (0, 0, 1)


@pytest.mark.parametrize("entry", list_catalogue(), ids=lambda e: e.id)
def test_tensor_structure_lemmas(entry):
    T = tensor_square(entry.algebra)
    assert T.audit().ok
    assert tensor_lemma_report(T).ok


@pytest.mark.parametrize("entry", list_catalogue(), ids=lambda e: e.id)
def test_tensor_square_dims_frozen(entry):
    if "tensor_square_dim" in entry.expected:
        assert tensor_square(entry.algebra).dim == entry.value("tensor_square_dim")
    if "exterior_square_dim" in entry.expected:
        assert exterior_square(entry.algebra).dim == entry.value("exterior_square_dim")


def test_literal_audit_on_relations():
    # bracket every basis vector of D with every basis tensor, on both sides
    for L in (H3, E2, get("heisenberg3_twisted").algebra, get("dim4_alpha_iteration").algebra):
        T = tensor_square(L)
        D = T.relations
        n = T.ambient_dim
        for d in D.basis:
            for p in range(n):
                e = tuple(1 if k == p else 0 for k in range(n))
                assert T.ambient_bracket(d, e) in D
                assert T.ambient_bracket(e, d) in D
            assert T.ambient_twist(d) in D


# -- box and exterior products ------------------------------------------------------

def test_box_for_identity_is_symmetric_span():
    E = exterior_square(A2)
    assert E.box.dim == 3
    sym = Subspace.span([outer(v, v) for v in itertools.product((0, 1, -1), repeat=2)], 4)
    assert E.box_ambient == sym


def test_box_zero_for_perfect():
    for name in ("sl2", "sl2_plus_sl2", "sl2_yau", "sl2_ltimes_h3"):
        E = exterior_square(get(name).algebra)
        assert E.box.is_zero(), name
        assert E.dim == E.tensor.dim


def test_box_zero_when_ideals_meet_trivially():
    L = get("sl2_plus_sl2").algebra
    first = inclusion_crossed_module(L, [tuple(1 if k == i else 0 for k in range(6)) for i in range(3)])
    second = inclusion_crossed_module(L, [tuple(1 if k == i else 0 for k in range(6)) for i in range(3, 6)])
    E = exterior_product(first, second)
    assert E.box.is_zero()
    # [M, N] = 0 and M ^ N = 0 here: the two copies commute
    assert E.dim == 0


@pytest.mark.parametrize("entry", list_catalogue(), ids=lambda e: e.id)
def test_box_is_central(entry):
    E = exterior_square(entry.algebra)
    assert subspace_leq(E.box, centre(E.tensor.product))
    assert verify_axioms(E.product).ok


def test_small_exterior_squares():
    assert exterior_square(A1).dim == 0
    assert exterior_square(A2).dim == 1
    assert exterior_square(SL2).dim == 3


# -- theta, phi, uce -----------------------------------------------------------

def test_theta_sl2():
    th = theta(exterior_square(SL2))
    assert th.kernel().is_zero() and th.hom.is_surjective()
    assert th.crossed_module is True


def test_theta_abelian_is_zero():
    th = theta(exterior_square(A2))
    assert th.matrix.is_zero()


def test_theta_heisenberg():
    E = exterior_square(H3)
    th = theta(E)
    assert th.target_space == Subspace.span([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert th.image().dim == 1
    # image is span{z} inside L
    im = Subspace.span([th.target_space.inclusion().apply(v) for v in th.image().basis], 3)
    assert im == Subspace.span([(0, 0, 1)])
    assert th.kernel().dim == E.dim - 1


def test_theta_for_ideal_pair():
    L = get("sl2_ltimes_h3").algebra
    rad = [tuple(1 if k == i else 0 for k in range(6)) for i in (3, 4, 5)]
    E = exterior_product(inclusion_crossed_module(L, rad), identity_crossed_module(L))
    th = theta(E)
    assert th.hom.is_valid()
    assert th.crossed_module is True


def test_theta_requires_inclusions():
    Q = identity_crossed_module(A2)
    zero = type(Q)(A2, A2, Matrix.zeros(2, 2), HomAction.trivial(A2, A2))
    E = exterior_product(zero, zero)
    with pytest.raises(PreconditionError):
        theta(E)


def test_phi_heisenberg_matches_theta():
    E = exterior_square(H3)
    r = phi_precrossed(E)
    assert r.ok
    th = theta(E)
    assert r.matrix == th.target_space.inclusion() @ th.matrix


def test_phi_abelian_and_sl2():
    assert phi_precrossed(exterior_square(A2)).matrix.is_zero()
    r = phi_precrossed(exterior_square(SL2))
    assert r.ok and r.matrix.rank() == 3


def test_phi_requires_alpha_identity():
    with pytest.raises(PreconditionError):
        phi_precrossed(exterior_square(E2))


def test_uce():
    for name in ("sl2", "sl2_plus_sl2"):
        u = uce_of_perfect(get(name).algebra)
        assert u.kernel.is_zero() and u.ok
    with pytest.raises(PreconditionError):
        uce_of_perfect(E2)


# -- exact sequence ----------------------------------------------------------------

def test_sequence_trivial_ideals():
    r = exterior_sequence_check(H3, Subspace.zero(3))
    assert r.first_map.is_zero() and r.exact
    assert r.second_map.rank() == r.dim_ll == r.dim_qq
    r = exterior_sequence_check(H3, Subspace.full(3))
    assert r.dim_qq == 0 and r.image_first.dim == r.dim_ll and r.exact


def test_sequence_heisenberg_centre():
    r = exterior_sequence_check(H3, [(0, 0, 1)])
    assert r.exact
    assert (r.dim_nl, r.dim_ll, r.dim_qq) == (2, 3, 1)
    assert r.image_first.dim == r.kernel_second.dim == 2


def test_sequence_E2_derived():
    r = exterior_sequence_check(E2, derived(E2))
    assert r.exact


def test_sequence_rejects_non_ideal():
    with pytest.raises(PreconditionError):
        exterior_sequence_check(H3, [(1, 0, 0)])


def test_induced_map_checks_well_definedness():
    T = tensor_square(H3)
    # z -> y is linear but not a homomorphism, and does not respect D
    f = Matrix([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
    with pytest.raises(ConstructionError):
        induced_map(T, T, f, f)
    # the identity does
    assert induced_map(T, T, Matrix.identity(3), Matrix.identity(3)).is_identity()


# -- pairings ----------------------------------------------------------------------

@pytest.mark.parametrize("name", ["heisenberg3", "sl2", "E2", "abelian_2", "heisenberg3_twisted"])
def test_canonical_pairing(name):
    L = get(name).algebra
    E = exterior_square(L)
    x = identity_crossed_module(L)
    assert verify_pairing(canonical_pairing(E), x, x, E.product).ok


def test_bracket_pairing():
    for L, I in ((H3, [(0, 0, 1)]), (SL2, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])):
        eta, mu = inclusion_crossed_module(L, I), identity_crossed_module(L)
        h, P = bracket_pairing(eta, mu)
        assert verify_pairing(h, eta, mu, P).ok


def test_zero_and_broken_pairings():
    x = identity_crossed_module(H3)
    E = exterior_square(H3)
    zero = tuple(tuple((0,) * E.dim for _ in range(3)) for _ in range(3))
    assert verify_pairing(zero, x, x, E.product).ok
    h = [list(r) for r in canonical_pairing(E)]
    h[0][0] = tuple(1 if k == 0 else 0 for k in range(E.dim))  # x ^ x must vanish
    assert not verify_pairing(h, x, x, E.product).d


def test_direct_sum_squares_add_up():
    L = direct_sum(SL2, SL2)
    assert exterior_square(L).dim == 2 * exterior_square(SL2).dim
