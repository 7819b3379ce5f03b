import pytest

from invhom.algebras import (Algebra, Bimodule, diagonal_algebra,
                             dual_numbers, field_algebra,
                             hochschild_cohomology, hochschild_homology,
                             is_separable, matrix_algebra, regular_bimodule,
                             semigroup_algebra)
from invhom.linalg import Field, Matrix
from invhom.monoids import cyclic_group, symmetric_inverse_monoid

Q = Field(0)
F2 = Field(2)


def test_algebra_validation_catches_nonassociative():
    # (b1 b1) b1 = b0 b1 = b0 but b1 (b1 b1) = b1 b0 = b1
    z, one = Q.zero, Q.one
    sc = [[[one, z], [one, z]],
          [[z, one], [one, z]]]
    with pytest.raises(ValueError, match="not associative"):
        Algebra(Q, 2, sc, [one, z])


def test_algebra_validation_catches_bad_unit():
    z, one = Q.zero, Q.one
    sc = [[[one, z], [z, one]], [[z, one], [z, z]]]
    with pytest.raises(ValueError, match="unit"):
        Algebra(Q, 2, sc, [z, one])


def test_matrix_algebra_is_matrix_units():
    m2 = matrix_algebra(Q, 2)
    # e_01 * e_10 = e_00, e_01 * e_01 = 0
    e01, e10 = m2.basis_vec(1), m2.basis_vec(2)
    assert m2.mul(e01, e10) == m2.basis_vec(0)
    assert m2.mul(e01, e01) == [Q.zero] * 4
    assert not m2.is_commutative()


def test_group_algebra_multiplication():
    kz2 = semigroup_algebra(Q, cyclic_group(2))
    g = kz2.basis_vec(1)
    assert kz2.mul(g, g) == kz2.basis_vec(0)


def test_semigroup_algebra_of_inverse_monoid():
    ki1 = semigroup_algebra(Q, symmetric_inverse_monoid(1))
    zero_elt = ki1.basis_vec(0)
    assert ki1.mul(zero_elt, zero_elt) == zero_elt


def test_bimodule_validation():
    k = field_algebra(Q)
    good = Bimodule(k, 1, [Matrix.identity(Q, 1)], [Matrix.identity(Q, 1)])
    assert good.dim == 1
    twisted = [Matrix.from_rows(Q, [[2]])]
    with pytest.raises(ValueError, match="bimodule axioms fail"):
        Bimodule(k, 1, twisted, [Matrix.identity(Q, 1)])


def test_hochschild_base_field():
    k = field_algebra(Q)
    m = regular_bimodule(k)
    assert hochschild_homology(k, m, 2) == [1, 0, 0]
    assert hochschild_cohomology(k, m, 2) == [1, 0, 0]


def test_hochschild_matrix_algebra_separable():
    m2 = matrix_algebra(Q, 2)
    m = regular_bimodule(m2)
    assert hochschild_homology(m2, m, 2) == [1, 0, 0]
    assert hochschild_cohomology(m2, m, 2) == [1, 0, 0]


def test_hochschild_dual_numbers():
    dn = dual_numbers(Q)
    m = regular_bimodule(dn)
    assert hochschild_homology(dn, m, 2) == [2, 1, 1]
    assert hochschild_cohomology(dn, m, 2) == [2, 1, 1]


def test_hochschild_degree_zero_dimensions():
    # H_0 = M/[A,M] and H^0 = M^A, spot-checked on the 2x2 matrix algebra:
    # commutators with all of A span a 3-dim space, the center is 1-dim.
    m2 = matrix_algebra(Q, 2)
    m = regular_bimodule(m2)
    assert hochschild_homology(m2, m, 0) == [1]
    assert hochschild_cohomology(m2, m, 0) == [1]


def test_hochschild_boundary_squares_to_zero():
    from invhom.algebras import (_hochschild_chain_boundary,
                                 _hochschild_cochain_boundary)
    for alg in (dual_numbers(Q), matrix_algebra(Q, 2), diagonal_algebra(F2, 2)):
        m = regular_bimodule(alg)
        for n in (2, 3):
            b_low = _hochschild_chain_boundary(alg, m, n - 1)
            b_high = _hochschild_chain_boundary(alg, m, n)
            assert b_low.compose(b_high).is_zero()
            d_low = _hochschild_cochain_boundary(alg, m, n - 2)
            d_high = _hochschild_cochain_boundary(alg, m, n - 1)
            assert d_high.compose(d_low).is_zero()


def test_hochschild_size_cap():
    m2 = matrix_algebra(Q, 2)
    with pytest.raises(ValueError, match="size cap exceeded"):
        hochschild_homology(m2, regular_bimodule(m2), 2, cap=10)


def test_separability():
    assert is_separable(field_algebra(Q))
    assert is_separable(diagonal_algebra(Q, 3))
    assert is_separable(matrix_algebra(Q, 2))
    assert not is_separable(dual_numbers(Q))
    assert is_separable(semigroup_algebra(Q, cyclic_group(2)))
    # char divides the group order: not separable (Maschke fails)
    assert not is_separable(semigroup_algebra(F2, cyclic_group(2)))
    assert is_separable(semigroup_algebra(Field(3), cyclic_group(2)))
