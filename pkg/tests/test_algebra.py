from fractions import Fraction

import pytest

from homlie.algebra import (
    HomLieAlgebra, Homomorphism, abelianisation, alpha_identity_check, bracket_eval, centre,
    centre_from_k1, commutator, derived, direct_sum, ideal_closure, is_central_extension, is_ideal,
    is_perfect, naive_centre, quotient_algebra, subalgebra, verify_axioms, yau_twist,
)
from homlie.catalogue import get, list_catalogue
from homlie.errors import DimensionMismatch, PreconditionError
from homlie.exactla import Matrix, Subspace


def S(*vecs, n):
    return Subspace.span(list(vecs), n)


E2 = get("E2").algebra
H3 = get("heisenberg3").algebra
SL2 = get("sl2").algebra
D4 = get("dim4_alpha_iteration").algebra


def test_E2_structure():
    # [e1, e2] = e1, twist [[1, 1], [0, 1]]
    assert E2.bracket[0][1] == (1, 0)
    assert E2.bracket[1][0] == (-1, 0)
    assert E2.twist == Matrix([[1, 1], [0, 1]])
    assert verify_axioms(E2).ok


def test_E2_alpha_identity_fails():
    # [e2, e2] = 0 but [a(e2), e2] = [e1 + e2, e2] = e1
    assert alpha_identity_check(E2) is False
    assert alpha_identity_check(H3) is True


def test_E2_invariants():
    assert naive_centre(E2).is_zero()
    assert centre(E2).is_zero()
    assert derived(E2) == S((1, 0), n=2)
    assert not is_perfect(E2)


def test_heisenberg_invariants():
    assert centre(H3) == S((0, 0, 1), n=3)
    assert derived(H3) == S((0, 0, 1), n=3)
    assert abelianisation(H3).quotient.dim == 2
    assert ideal_closure(E2, [(0, 1)]).is_full()


def test_dim4_centre_uses_twist_iteration():
    assert naive_centre(D4) == S((1, 0, 0, 0), (0, 1, 0, 0), n=4)
    assert centre(D4) == S((1, 0, 0, 0), n=4)
    # k >= 1 variant, recorded to document the difference
    assert centre_from_k1(D4) == S((1, 0, 0, 0), (0, 1, -1, 0), (0, 0, 0, 1), n=4)


def test_sl2_is_perfect_and_centreless():
    assert is_perfect(SL2)
    assert centre(SL2).is_zero()


def test_skew_failure_is_reported():
    bad = HomLieAlgebra(2, (((1, 0), (1, 0)), ((0, 0), (0, 0))), Matrix.identity(2))
    r = verify_axioms(bad)
    assert not r.ok and r.first_failure()[0] == "skew-symmetry"


def test_multiplicativity_failure_is_reported():
    bad = HomLieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1)}, [[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    r = verify_axioms(bad)
    assert r.skew and r.hom_jacobi and not r.multiplicative
    assert r.multiplicative_failure == (0, 1)


def test_jacobi_failure_is_reported():
    # [e1, e2] = e1, [e1, e3] = e2: the Jacobi sum on (e1, e2, e3) is -e2
    bad = HomLieAlgebra.from_brackets(3, {(0, 1): (1, 0, 0), (0, 2): (0, 1, 0)})
    r = verify_axioms(bad)
    assert not r.hom_jacobi


def test_shape_validation():
    with pytest.raises(DimensionMismatch):
        HomLieAlgebra.from_brackets(2, {(0, 1): (1, 0, 0)})
    with pytest.raises(ValueError):
        HomLieAlgebra.from_brackets(2, {(0, 0): (1, 0)})


def test_yau_twist():
    Y = yau_twist(SL2, [[2, 0, 0], [0, Fraction(1, 2), 0], [0, 0, 1]])
    assert verify_axioms(Y).ok
    # [e, f]' = [2e, f/2] = h and [h, e]' = [h, 2e] = 4e
    assert Y.bracket[0][1] == (0, 0, 1)
    assert Y.bracket[2][0] == (4, 0, 0)
    with pytest.raises(PreconditionError):
        yau_twist(E2, Matrix.identity(2))
    with pytest.raises(PreconditionError):
        yau_twist(SL2, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])


def test_yau_twists_of_catalogue_lie_algebras():
    # the zero map and the identity are endomorphisms of every Lie algebra;
    # on abelian ones every matrix is
    for e in list_catalogue():
        L = e.algebra
        if not L.twist.is_identity():
            continue
        n = L.dim
        endos = [Matrix.zeros(n, n), Matrix.identity(n)]
        if L.is_abelian():
            endos.append(Matrix([[i + 2 * j - 1 for j in range(n)] for i in range(n)], n))
        for endo in endos:
            assert verify_axioms(yau_twist(L, endo)).ok, e.id


def test_quotient_algebra():
    Q = quotient_algebra(H3, S((0, 0, 1), n=3))
    assert Q.quotient.dim == 2 and Q.quotient.is_abelian()
    assert verify_axioms(Q.quotient).ok
    assert Q.projection.is_valid()
    assert is_central_extension(Q.projection)
    with pytest.raises(PreconditionError):
        quotient_algebra(H3, S((1, 0, 0), n=3))
    with pytest.raises(PreconditionError):
        quotient_algebra(D4, S((0, 1, 0, 0), n=4))  # not twist-invariant


def test_quotients_of_catalogue_pass_axioms():
    for e in list_catalogue():
        L = e.algebra
        for I in (derived(L), centre(L), Subspace.zero(L.dim), Subspace.full(L.dim)):
            if is_ideal(L, I):
                assert verify_axioms(quotient_algebra(L, I).quotient).ok, e.id


def test_subalgebra_and_homomorphisms():
    H, inc = subalgebra(H3, S((0, 1, 0), (0, 0, 1), n=3))
    assert H.dim == 2 and H.is_abelian()
    assert inc.is_valid() and inc.is_injective()
    bad = Homomorphism(E2, E2, Matrix([[0, 1], [1, 0]]))
    assert not bad.is_valid()


def test_commutator_of_ideals():
    L = direct_sum(SL2, H3)
    assert verify_axioms(L).ok
    assert commutator(L, Subspace.full(6), Subspace.full(6)).dim == 4
    assert bracket_eval(L, (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0)) == (0, 0, 0, 0, 0, 1)
