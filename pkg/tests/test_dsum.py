import pytest
from hypothesis import given

from cohomring.dsum import (
    NAT,
    ConstantFamily,
    DenseSeq,
    ExpIndex,
    SparseSum,
    dsum_equal,
    from_dense,
    to_dense,
)
from cohomring.errors import IndexMismatchError, NotNatIndexedError
from cohomring.rings import IntegerRing, ModularRing

from conftest import Z, Z2, rings, uni_dense_polys, uni_sparse_polys

FZ = ConstantFamily(Z)
FZ2 = ConstantFamily(Z2)


def s(ring, *terms):
    return SparseSum.from_terms(NAT, ConstantFamily(ring), terms)


def test_single_collapses_zero_coefficient():
    assert SparseSum.single(NAT, FZ, 5, 0).is_zero()
    assert SparseSum.single(NAT, FZ2, 5, 2).is_zero()
    assert SparseSum.single(NAT, FZ, 5, 3).terms == ((5, 3),)


def test_same_degree_terms_merge():
    # two terms in one slot add up in place of growing the list
    assert s(Z, (3, 2)) + s(Z, (3, 3)) == s(Z, (3, 5))


def test_merge_to_zero_drops_the_term():
    assert (s(Z2, (3, 1)) + s(Z2, (3, 1))).is_zero()
    assert s(Z, (3, 2)) + s(Z, (3, -2)) == SparseSum.zero(NAT, FZ)


def test_distinct_degrees_stay_sorted():
    a = s(Z, (100, 1)) + s(Z, (3, 2))
    assert a.terms == ((3, 2), (100, 1))
    assert a.coeff(3) == 2 and a.coeff(100) == 1 and a.coeff(7) == 0


def test_mixed_monoids_refuse_to_add():
    a = s(Z, (1, 1))
    b = SparseSum.single(ExpIndex(2), FZ, (1, 0), 1)
    with pytest.raises(IndexMismatchError):
        a + b
    with pytest.raises(IndexMismatchError):
        a + s(Z2, (1, 1))


def test_to_dense_expands_every_position():
    a = s(Z, (3, 2), (100, 1))
    d = to_dense(a)
    assert len(d.coeffs) == 101
    assert d.coeffs[3] == 2 and d.coeffs[100] == 1
    assert sum(1 for c in d.coeffs if c == 0) == 99


def test_to_dense_needs_natural_indices():
    p = SparseSum.single(ExpIndex(2), FZ, (1, 1), 1)
    with pytest.raises(NotNatIndexedError):
        to_dense(p)


def test_dense_equality_ignores_trailing_zeros():
    a = DenseSeq.of(FZ, [1, 0, 2, 5])
    b = DenseSeq.of(FZ, [1, 0, 2, 5, 0, 0])
    assert a == b
    assert hash(a) == hash(b)
    assert a != DenseSeq.of(FZ, [1, 0, 2])
    assert DenseSeq.of(FZ, [0, 0]) == DenseSeq.of(FZ, [])


def test_from_dense_keeps_nonzero_positions():
    d = DenseSeq.of(FZ, [1, 0, 2, 5])
    assert from_dense(d).terms == ((0, 1), (2, 2), (3, 5))


def test_dsum_equal_across_representations():
    a = s(Z, (0, 1), (2, 2), (3, 5))
    assert dsum_equal(a, DenseSeq.of(FZ, [1, 0, 2, 5, 0]))
    assert dsum_equal(DenseSeq.of(FZ, [1, 0, 2, 5]), a)
    assert not dsum_equal(a, DenseSeq.of(FZ, [1, 0, 2]))


@given(rings.flatmap(lambda r: uni_sparse_polys(r)))
def test_roundtrip_through_dense(a):
    assert from_dense(to_dense(a)) == a


@given(rings.flatmap(lambda r: uni_dense_polys(r)))
def test_roundtrip_through_sparse(d):
    assert to_dense(from_dense(d)) == d


@given(rings.flatmap(lambda r: st_pair(r)))
def test_conversion_commutes_with_add_and_neg(pair):
    a, b = pair
    assert to_dense(a + b) == to_dense(a) + to_dense(b)
    assert to_dense(-a) == -to_dense(a)


@given(rings.flatmap(lambda r: st_pair(r)))
def test_abelian_group_laws(pair):
    a, b = pair
    zero = SparseSum.zero(a.monoid, a.family)
    assert a + b == b + a
    assert a + zero == a
    assert a + (-a) == zero
    assert (a - b) + b == a


def st_pair(ring):
    import hypothesis.strategies as st

    return st.tuples(uni_sparse_polys(ring), uni_sparse_polys(ring))
