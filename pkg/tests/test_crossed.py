import random

import pytest

from invhom.algebras import (diagonal_algebra, field_algebra, matrix_algebra,
                             regular_bimodule)
from invhom.crossed import (UnitalAction, bimodule_over_quotient, coinvariants,
                            crossed_product, induced_partial_action,
                            invariants_sub, is_compatible,
                            ks_as_crossed_product, module_as_ks,
                            natural_ke_action, phi_map, skew_group_algebra,
                            trivial_action, validate_action,
                            verify_separable_collapse_cohomology,
                            verify_separable_collapse_homology)
from invhom.linalg import Field, Matrix, vec_is_zero
from invhom.monoids import (chain_semilattice, cyclic_group, direct_product,
                            symmetric_inverse_monoid, trivial_monoid)

Q = Field(0)


def i1_on_k2():
    """I(1) acting on K x K: the empty map gets the first coordinate."""
    i1 = symmetric_inverse_monoid(1)
    a = diagonal_algebra(Q, 2)
    one = [[Q.one, Q.zero], [Q.one, Q.one]]
    theta = [Matrix.from_rows(Q, [[1, 0], [0, 0]]), Matrix.identity(Q, 2)]
    return UnitalAction(i1, a, one, theta)


def test_validate_trivial_action():
    m = trivial_monoid()
    rep = validate_action(trivial_action(m, field_algebra(Q)))
    assert rep.ok


def test_validate_i1_action():
    assert validate_action(i1_on_k2()).ok


def test_validate_rejects_wrong_idempotent():
    act = i1_on_k2()
    bad = UnitalAction(act.monoid, act.algebra,
                       [[Q.one, Q.one], [Q.one, Q.one]], act.theta)
    rep = validate_action(bad)
    assert not rep.ok
    assert any("image(T_" in name for name, _ in rep.failures())


def test_validate_natural_ke_actions():
    for m in [symmetric_inverse_monoid(2), chain_semilattice(3),
              direct_product(chain_semilattice(2), cyclic_group(2))]:
        assert validate_action(natural_ke_action(m, Q)).ok


def test_compatibility():
    assert is_compatible(i1_on_k2())
    # any action of an E-unitary monoid is compatible
    p = direct_product(chain_semilattice(2), cyclic_group(2))
    assert p.is_e_unitary()
    assert is_compatible(natural_ke_action(p, Q))
    assert is_compatible(trivial_action(p, field_algebra(Q)))


def test_crossed_product_trivial_monoid_keeps_algebra():
    a = matrix_algebra(Q, 2)
    cp = crossed_product(trivial_action(trivial_monoid(), a))
    assert cp.algebra.dim == a.dim
    assert cp.n_space.subspace_basis.cols == 0


def test_crossed_product_i1_dimensions():
    cp = crossed_product(i1_on_k2())
    assert cp.l_dim == 3
    assert cp.n_space.subspace_basis.cols == 1
    assert cp.algebra.dim == 2
    assert cp.algebra.is_commutative()


def test_crossed_product_chain2_z2_trivial():
    p = direct_product(chain_semilattice(2), cyclic_group(2))
    cp = crossed_product(trivial_action(p, field_algebra(Q)))
    assert cp.l_dim == 4
    assert cp.n_space.subspace_basis.cols == 2
    assert cp.algebra.dim == 2


def test_gamma_multiplicativity():
    for action in (i1_on_k2(),
                   trivial_action(direct_product(chain_semilattice(2),
                                                 cyclic_group(2)),
                                  field_algebra(Q)),
                   natural_ke_action(chain_semilattice(3), Q)):
        cp = crossed_product(action)
        S = action.monoid
        for s in range(S.size):
            for t in range(S.size):
                assert cp.algebra.mul(cp.gamma[s], cp.gamma[t]) == \
                    cp.gamma[S.table[s][t]]


def test_embed_a_injective_homomorphism():
    cp = crossed_product(i1_on_k2())
    a = cp.action.algebra
    for i in range(a.dim):
        for j in range(a.dim):
            assert cp.algebra.mul(cp.embed_A.col(i), cp.embed_A.col(j)) == \
                cp.embed_A.apply(a.mul(a.basis_vec(i), a.basis_vec(j)))


def test_n_sigma_class_sums_vanish_on_random_elements():
    rng = random.Random(0)
    for action in (i1_on_k2(),
                   natural_ke_action(symmetric_inverse_monoid(2), Q)):
        cp = crossed_product(action)
        basis = cp.n_space.subspace_basis
        for _ in range(10):
            vec = [Q.zero] * cp.l_dim
            for j in range(basis.cols):
                c = Q.of(rng.randint(-4, 4))
                for i, v in enumerate(basis.col(j)):
                    if v:
                        vec[i] += c * v
            assert all(vec_is_zero(s) for s in cp.class_sums(vec))


def test_e_unitary_converse_membership():
    # E-unitary: vanishing class sums characterize membership in N
    from invhom.linalg import Matrix as M, kernel_basis
    rng = random.Random(1)
    p = direct_product(chain_semilattice(2), cyclic_group(2))
    action = natural_ke_action(p, Q)
    assert p.is_e_unitary()
    cp = crossed_product(action)
    # build the class-sum matrix L -> A^{#classes}
    classes = p.sigma_classes()
    dimA = action.algebra.dim
    rows = []
    proj = p.sigma_class_index()
    for c in range(len(classes)):
        for coord in range(dimA):
            row = []
            for k, (s, j) in enumerate(cp.labels):
                vec = cp.ideal_spans[s].basis.col(j)
                row.append(vec[coord] if proj[s] == c else Q.zero)
            rows.append(row)
    sums_mat = M(Q, len(rows), cp.l_dim, rows)
    ker = kernel_basis(sums_mat)
    assert ker.cols == cp.n_space.subspace_basis.cols
    for _ in range(10):
        vec = [Q.zero] * cp.l_dim
        for j in range(ker.cols):
            c = Q.of(rng.randint(-4, 4))
            for i, v in enumerate(ker.col(j)):
                vec[i] += c * v
        assert cp.n_space.contains_in_subspace(vec)


def test_induced_partial_action_group_case():
    z2 = cyclic_group(2)
    act = trivial_action(z2, field_algebra(Q))
    pa = induced_partial_action(act)
    assert pa.group.size == 2
    assert all(d == [Q.one] for d in pa.domains)


def test_induced_partial_action_i1():
    pa = induced_partial_action(i1_on_k2())
    assert pa.group.size == 1
    assert pa.domains[0] == [Q.one, Q.one]
    assert pa.maps[0].is_identity()


def test_induced_partial_action_chain2_z2():
    p = direct_product(chain_semilattice(2), cyclic_group(2))
    act = trivial_action(p, field_algebra(Q))
    pa = induced_partial_action(act)
    assert pa.group.size == 2
    assert all(d == [Q.one] for d in pa.domains)
    assert all(m.is_identity() for m in pa.maps)


def test_skew_group_algebra_dimensions():
    z2 = cyclic_group(2)
    sk = skew_group_algebra(induced_partial_action(
        trivial_action(z2, field_algebra(Q))))
    assert sk.algebra.dim == 2
    # partial Z/2-action on K x K with D_g = first component
    a = diagonal_algebra(Q, 2)
    from invhom.crossed import PartialGroupAction
    dom = [[Q.one, Q.one], [Q.one, Q.zero]]
    maps = [Matrix.identity(Q, 2), Matrix.from_rows(Q, [[1, 0], [0, 0]])]
    pa = PartialGroupAction(z2, a, dom, maps)
    sk = skew_group_algebra(pa)
    assert sk.algebra.dim == 3


def test_phi_bijective_for_compatible_examples():
    _, rep = phi_map(i1_on_k2())
    assert rep.ok and rep.data["bijective"]
    p = direct_product(chain_semilattice(2), cyclic_group(2))
    _, rep = phi_map(trivial_action(p, field_algebra(Q)))
    assert rep.ok and rep.data["bijective"]
    assert rep.data["dim_crossed"] == rep.data["dim_skew"] == 2


def test_phi_group_case_identity_shape():
    z2 = cyclic_group(2)
    phi, rep = phi_map(trivial_action(z2, field_algebra(Q)))
    assert rep.ok and rep.data["bijective"]
    assert phi.rows == phi.cols == 2


def test_ks_as_crossed_product_examples():
    p = direct_product(chain_semilattice(2), cyclic_group(2))
    rep = ks_as_crossed_product(p, Q)
    assert rep.ok
    assert rep.data["dim_KS"] == 4 and rep.data["domain_dims"] == [2, 2]
    rep = ks_as_crossed_product(chain_semilattice(3), Q)
    assert rep.ok and rep.data["dim_skew"] == 3
    rep = ks_as_crossed_product(cyclic_group(3), Q)
    assert rep.ok
    with pytest.raises(ValueError, match="not E-unitary"):
        ks_as_crossed_product(symmetric_inverse_monoid(2), Q)


def test_module_as_ks():
    act = i1_on_k2()
    cp = crossed_product(act)
    m = regular_bimodule(cp.algebra)
    ks = module_as_ks(m, cp)
    assert ks.dim == cp.algebra.dim
    # idempotents act by idempotent matrices
    for e in act.monoid.idempotents():
        assert ks.act[e] @ ks.act[e] == ks.act[e]


def test_module_as_ks_trivial_monoid():
    a = matrix_algebra(Q, 2)
    cp = crossed_product(trivial_action(trivial_monoid(), a))
    ks = module_as_ks(regular_bimodule(cp.algebra), cp)
    assert ks.act[0].is_identity()


def test_coinvariants_commutative_is_everything():
    act = i1_on_k2()
    cp = crossed_product(act)
    m = regular_bimodule(cp.algebra)
    q, co = coinvariants(m, cp)
    assert co.dim == m.dim  # commutative quotient algebra


def test_coinvariants_matrix_algebra_over_diagonal():
    # 2x2 matrices as bimodule over the crossed product of the trivial
    # monoid acting on the diagonal would not be a crossed-product module;
    # instead take S trivial acting on M2 itself and restrict commutators:
    # [M2, M2] is the 3-dim space of trace-zero matrices.
    a = matrix_algebra(Q, 2)
    cp = crossed_product(trivial_action(trivial_monoid(), a))
    q, co = coinvariants(regular_bimodule(cp.algebra), cp)
    assert co.dim == 1


def test_invariants():
    a = matrix_algebra(Q, 2)
    cp = crossed_product(trivial_action(trivial_monoid(), a))
    inv = invariants_sub(regular_bimodule(cp.algebra), cp)
    assert inv.dim == 1  # center of M2
    b = diagonal_algebra(Q, 3)
    cpb = crossed_product(trivial_action(trivial_monoid(), b))
    invb = invariants_sub(regular_bimodule(cpb.algebra), cpb)
    assert invb.dim == 3  # commutative: everything


def test_separable_collapse_homology_examples():
    act = i1_on_k2()
    cp = crossed_product(act)
    rep = verify_separable_collapse_homology(act, regular_bimodule(cp.algebra),
                                             2, crossed=cp)
    assert rep.ok
    assert rep.data["monoid_side"] == [2, 0, 0]
    assert rep.data["hochschild_side"] == [2, 0, 0]


def test_separable_collapse_cohomology_examples():
    act = i1_on_k2()
    cp = crossed_product(act)
    rep = verify_separable_collapse_cohomology(
        act, regular_bimodule(cp.algebra), 2, crossed=cp)
    assert rep.ok
    assert rep.data["monoid_side"] == [2, 0, 0]


def test_separable_collapse_trivial_s_controls():
    for a in (matrix_algebra(Q, 2), diagonal_algebra(Q, 2)):
        act = trivial_action(trivial_monoid(), a)
        cp = crossed_product(act)
        m = regular_bimodule(cp.algebra)
        rh = verify_separable_collapse_homology(act, m, 2, crossed=cp)
        rc = verify_separable_collapse_cohomology(act, m, 2, crossed=cp)
        assert rh.ok and rc.ok


def test_separable_collapse_e_unitary_product():
    p = direct_product(chain_semilattice(2), cyclic_group(2))
    act = trivial_action(p, field_algebra(Q))
    cp = crossed_product(act)
    m = regular_bimodule(cp.algebra)
    rep = verify_separable_collapse_homology(act, m, 2, crossed=cp)
    assert rep.ok and rep.data["monoid_side"] == [2, 0, 0]
    rep = verify_separable_collapse_cohomology(act, m, 2, crossed=cp)
    assert rep.ok and rep.data["monoid_side"] == [2, 0, 0]


def test_collapse_requires_separable():
    from invhom.algebras import dual_numbers
    act = trivial_action(trivial_monoid(), dual_numbers(Q))
    cp = crossed_product(act)
    with pytest.raises(ValueError, match="not separable"):
        verify_separable_collapse_homology(act, regular_bimodule(cp.algebra),
                                           1, crossed=cp)


def test_bimodule_over_quotient_lift():
    # lift the regular bimodule of the quotient through L-coordinates
    act = i1_on_k2()
    cp = crossed_product(act)
    dim = cp.algebra.dim
    left_l = []
    right_l = []
    for k in range(cp.l_dim):
        e = [Q.zero] * cp.l_dim
        e[k] = Q.one
        cls = cp.class_of(e)
        left_l.append(cp.algebra.left_mult_matrix(cls))
        right_l.append(cp.algebra.right_mult_matrix(cls))
    m = bimodule_over_quotient(cp, left_l, right_l)
    reg = regular_bimodule(cp.algebra)
    assert m.left_action(cp.algebra.unit).is_identity()
    for i in range(dim):
        assert m.left[i] == reg.left[i] and m.right[i] == reg.right[i]


def test_zero_bimodule_has_zero_coinvariants():
    from invhom.algebras import Bimodule
    act = i1_on_k2()
    cp = crossed_product(act)
    zero = Bimodule(
        cp.algebra, 0,
        [Matrix.zeros(Q, 0, 0) for _ in range(cp.algebra.dim)],
        [Matrix.zeros(Q, 0, 0) for _ in range(cp.algebra.dim)])
    q, co = coinvariants(zero, cp)
    assert q.dim == 0 and co.dim == 0
    assert invariants_sub(zero, cp).dim == 0


def test_hochschild_degree_zero_is_commutator_quotient_and_centralizer():
    # H_0(A, M) = M/[A,M] and H^0(A, M) = M^A, computed directly
    from invhom.algebras import (dual_numbers, hochschild_cohomology,
                                 hochschild_homology)
    from invhom.linalg import Matrix as M, kernel_basis, mat_rank
    algebras = [matrix_algebra(Q, 2), dual_numbers(Q), diagonal_algebra(Q, 3),
                crossed_product(i1_on_k2()).algebra]
    for a in algebras:
        m = regular_bimodule(a)
        comm_cols = []
        stacked = []
        for i in range(a.dim):
            diff = m.left[i] - m.right[i]
            stacked.extend(diff.data)
            for j in range(m.dim):
                comm_cols.append(diff.col(j))
        span = M.from_cols(Q, m.dim, comm_cols)
        assert hochschild_homology(a, m, 0)[0] == m.dim - mat_rank(span)
        centralizer = kernel_basis(M(Q, len(stacked), m.dim, stacked))
        assert hochschild_cohomology(a, m, 0)[0] == centralizer.cols
