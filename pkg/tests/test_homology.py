import pytest

from invhom.homology import (KSModule, build_resolution,
                             cohomology, cohomology_complex, homology,
                             homology_complex, regular_ks_module,
                             trivial_module_ke)
from invhom.linalg import Field, Matrix
from invhom.monoids import (chain_semilattice, cyclic_group, direct_product,
                            symmetric_inverse_monoid, trivial_monoid)
from oracles import bar_group_cohomology, bar_group_homology

Q = Field(0)
F2 = Field(2)
F3 = Field(3)


def test_trivial_module_ke_group_is_one_dimensional():
    z3 = cyclic_group(3)
    v = trivial_module_ke(z3, Q)
    assert v.dim == 1
    assert all(m.is_identity() for m in v.act)


def test_trivial_module_ke_i2_swaps_rank_one_idempotents():
    i2 = symmetric_inverse_monoid(2)
    v = trivial_module_ke(i2, Q)
    assert v.dim == 4
    idems = i2.idempotents()
    swap = i2.names.index("[12->21]")
    e1 = idems.index(i2.names.index("[1->1]"))
    e2 = idems.index(i2.names.index("[2->2]"))
    m = v.act[swap]
    assert m.data[e2][e1] == Q.one and m.data[e1][e2] == Q.one
    assert m.data[e1][e1] == Q.zero


def test_trivial_module_ke_chain():
    c2 = chain_semilattice(2)
    v = trivial_module_ke(c2, Q)
    assert v.dim == 2
    # e1 sends e0 -> e1 and fixes e1
    assert v.act[1].col(0) == [Q.zero, Q.one]
    assert v.act[1].col(1) == [Q.zero, Q.one]


def test_trivial_module_ke_right_side():
    i2 = symmetric_inverse_monoid(2)
    v = trivial_module_ke(i2, Q, side="right")
    assert v.side == "right" and v.dim == 4


def test_ks_module_rejects_bad_action():
    z2 = cyclic_group(2)
    bad = [Matrix.identity(Q, 2), Matrix.from_rows(Q, [[1, 0], [1, 0]])]
    with pytest.raises(ValueError, match="not a left module"):
        KSModule(z2, Q, 2, bad, side="left")


def test_module_monoid_mismatch():
    z2 = cyclic_group(2)
    z3 = cyclic_group(3)
    v = trivial_module_ke(z3, Q)
    with pytest.raises(ValueError, match="module/monoid mismatch"):
        homology_complex(z2, v, 1)


def test_homology_complex_trivial_monoid():
    t = trivial_monoid()
    v = trivial_module_ke(t, Q)
    cx = homology_complex(t, v, 3)
    assert cx.space_dims == [1, 1, 1, 1]
    assert cx.check_composites()
    assert homology(t, v, 2) == [1, 0, 0]


def test_homology_complex_dims_group_f2():
    z2 = cyclic_group(2)
    v = trivial_module_ke(z2, F2)
    cx = homology_complex(z2, v, 3)
    assert cx.space_dims == [1, 2, 4, 8]


def test_complex_property_chain2_ke():
    c2 = chain_semilattice(2)
    v = trivial_module_ke(c2, Q)
    assert homology_complex(c2, v, 3).check_composites()
    assert cohomology_complex(c2, v, 2).check_composites()


def test_chain2_ke_homology():
    c2 = chain_semilattice(2)
    v = trivial_module_ke(c2, Q)
    assert homology(c2, v, 2) == [2, 0, 0]


def test_z2_homology_classical_values():
    z2 = cyclic_group(2)
    assert homology(z2, trivial_module_ke(z2, F2), 3) == [1, 1, 1, 1]
    assert homology(z2, trivial_module_ke(z2, Q), 2) == [1, 0, 0]


def test_z2_cohomology_classical_values():
    z2 = cyclic_group(2)
    assert cohomology(z2, trivial_module_ke(z2, Q), 2) == [1, 0, 0]
    assert cohomology(z2, trivial_module_ke(z2, F2), 3) == [1, 1, 1, 1]


def test_cochain_complex_trivial_monoid():
    t = trivial_monoid()
    v = trivial_module_ke(t, Q)
    cx = cohomology_complex(t, v, 2)
    assert cx.boundaries[0].is_zero()
    assert all(d == 1 for d in cx.space_dims)


def test_cochain_ranks_z2():
    z2 = cyclic_group(2)
    cx_q = cohomology_complex(z2, trivial_module_ke(z2, Q), 2)
    assert cx_q.boundaries[0].is_zero()
    # over Q the coboundary out of C^1 has rank 2 (cocycles are 1-dim);
    # over F2 it degenerates to rank 1
    assert cx_q.boundaries[1].rank() == 2
    cx_2 = cohomology_complex(z2, trivial_module_ke(z2, F2), 2)
    assert cx_2.boundaries[1].rank() == 1


def test_cochain_complex_property_i2():
    i2 = symmetric_inverse_monoid(2)
    v = trivial_module_ke(i2, Q)
    assert cohomology_complex(i2, v, 2).check_composites()


def test_group_specialization_matches_bar_oracle():
    groups = [cyclic_group(2), cyclic_group(3),
              direct_product(cyclic_group(2), cyclic_group(2))]
    fields = [Q, F2, F3]
    for g in groups:
        for f in fields:
            v = trivial_module_ke(g, f)
            assert homology(g, v, 3) == bar_group_homology(g, v, 3)
            assert cohomology(g, v, 3) == bar_group_cohomology(g, v, 3)


def test_klein_four_f2_known_betti():
    klein = direct_product(cyclic_group(2), cyclic_group(2))
    v = trivial_module_ke(klein, F2)
    assert homology(klein, v, 3) == [1, 2, 3, 4]
    assert cohomology(klein, v, 3) == [1, 2, 3, 4]


def test_semilattice_vanishing():
    for n in (1, 2, 3, 4):
        s = chain_semilattice(n)
        for v in (trivial_module_ke(s, Q), regular_ks_module(s, Q),
                  trivial_module_ke(s, F2)):
            betti = homology(s, v, 3)
            assert betti[0] == v.dim
            assert betti[1:] == [0, 0, 0]


def test_complex_shape_field_independent():
    i2 = symmetric_inverse_monoid(2)
    dims_q = homology_complex(i2, trivial_module_ke(i2, Q), 2).space_dims
    dims_2 = homology_complex(i2, trivial_module_ke(i2, F2), 2).space_dims
    assert dims_q == dims_2


def test_block_index_labels():
    c2 = chain_semilattice(2)
    v = trivial_module_ke(c2, Q)
    cx = homology_complex(c2, v, 1)
    assert cx.block_index[0] == [((), 0), ((), 1)]
    labels = cx.block_index[1]
    assert labels[0][0] == (0,) and labels[-1][0] == (1,)


def test_size_cap():
    i2 = symmetric_inverse_monoid(2)
    v = trivial_module_ke(i2, Q)
    with pytest.raises(ValueError, match="size cap exceeded"):
        homology_complex(i2, v, 3, cap=100)


def test_resolution_trivial_monoid():
    res = build_resolution(trivial_monoid(), Q, 3)
    assert res.dims() == [1, 1, 1, 1]
    assert res.verify_composites() and res.verify_homotopy()


def test_resolution_chain2():
    res = build_resolution(chain_semilattice(2), Q, 2)
    assert res.verify_composites() and res.verify_homotopy()


def test_resolution_i1_p1_dimension():
    res = build_resolution(symmetric_inverse_monoid(1), Q, 2)
    assert res.dims()[1] == 3
    assert res.verify_composites() and res.verify_homotopy()


def test_resolution_homotopy_several_monoids():
    for m in [cyclic_group(2), cyclic_group(3), chain_semilattice(3),
              direct_product(chain_semilattice(2), cyclic_group(2)),
              symmetric_inverse_monoid(2)]:
        if m.size > 4:
            deg = 1
        else:
            deg = 2
        res = build_resolution(m, Q, deg)
        assert res.verify_composites()
        assert res.verify_homotopy()


def test_resolution_cap():
    i2 = symmetric_inverse_monoid(2)
    with pytest.raises(ValueError, match="size cap exceeded"):
        build_resolution(i2, Q, 3, cap=50)
