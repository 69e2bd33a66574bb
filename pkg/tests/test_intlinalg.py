import pytest
from hypothesis import given, settings, strategies as st

from oracles import invariant_factors, small_kernel_vectors
from conftest import int_matrices
from twistcohom.errors import SubgroupNotContained
from twistcohom.intlinalg import (
    AbelianInvariants,
    IntMatrix,
    kernel_basis,
    lattice_coordinates,
    quotient_invariants,
    snf,
)


def test_matrix_construction():
    m = IntMatrix(2, 3, [1, 2, 3, 4, 5, 6])
    assert m.shape == (2, 3)
    assert m[1, 0] == 4
    assert m.entries == (1, 2, 3, 4, 5, 6)
    assert m.T.tolist() == [[1, 4], [2, 5], [3, 6]]
    with pytest.raises(ValueError):
        IntMatrix(2, 2, [1, 2, 3])


def test_arithmetic_is_exact():
    big = 10**40
    m = IntMatrix.from_rows([[big, 1], [0, 1]])
    assert (m @ m)[0, 0] == big * big
    assert (m @ m)[0, 1] == big + 1
    assert m @ (1, 1) == (big + 1, 1)


def test_det_and_inverse():
    m = IntMatrix.from_rows([[2, 1], [1, 1]])
    assert m.det() == 1
    assert m @ m.inverse() == IntMatrix.identity(2)
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[2, 0], [0, 1]]).inverse()


# SNF examples.  Expected diagonal for [[2,4],[6,8]] comes from the
# determinantal-divisor oracle: gcd of entries 2, |det| 8.
@pytest.mark.parametrize(
    "rows, cols, diag",
    [
        ([[2, 4], [6, 8]], 2, (2, 4)),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3, (1, 1, 1)),
        ([[0, 0, 0], [0, 0, 0]], 3, (0, 0)),
    ],
)
def test_snf_examples(rows, cols, diag):
    assert tuple(invariant_factors(rows, cols)) == tuple(d for d in diag if d)
    m = IntMatrix.from_rows(rows, cols)
    res = snf(m)
    assert res.diagonal == diag
    assert res.u @ m @ res.v == res.d


def test_snf_empty():
    for shape in [(0, 3), (3, 0), (0, 0)]:
        m = IntMatrix.zeros(*shape)
        res = snf(m)
        assert res.d.shape == shape
        assert res.u.shape == (shape[0], shape[0])
        assert res.v.shape == (shape[1], shape[1])


def _is_diagonal(d):
    return all(d[i, j] == 0 for i in range(d.rows) for j in range(d.cols) if i != j)


@settings(max_examples=250, deadline=None)
@given(int_matrices())
def test_snf_properties(data):
    rows, cols = data
    m = IntMatrix.from_rows(rows, cols)
    res = snf(m)
    assert res.u @ m @ res.v == res.d
    assert _is_diagonal(res.d)
    assert abs(res.u.det()) == 1 and abs(res.v.det()) == 1
    diag = res.diagonal
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[: len(nz)] == tuple(nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@settings(max_examples=60, deadline=None)
@given(int_matrices(max_dim=4, bound=6))
def test_snf_matches_determinantal_divisors(data):
    rows, cols = data
    assert [x for x in snf(IntMatrix.from_rows(rows, cols)).diagonal if x] == invariant_factors(rows, cols)


def test_kernel_examples():
    (k,) = kernel_basis(IntMatrix.from_rows([[1, 1]]))
    assert k in {(1, -1), (-1, 1)}
    # every small solution is a multiple of the basis vector
    for x in small_kernel_vectors([[1, 1]], 2, 4):
        assert x[0] * k[1] - x[1] * k[0] == 0
    assert kernel_basis(IntMatrix.identity(2)) == []
    assert len(kernel_basis(IntMatrix.zeros(1, 2))) == 2


@settings(max_examples=200, deadline=None)
@given(int_matrices())
def test_kernel_properties(data):
    rows, cols = data
    m = IntMatrix.from_rows(rows, cols)
    ks = kernel_basis(m)
    assert all(not any(m @ x) for x in ks)
    assert len(ks) == cols - snf(m).rank


def test_kernel_is_saturated():
    # 2x + 4y = 0 has kernel spanned by (2, -1), not by (4, -2)
    (k,) = kernel_basis(IntMatrix.from_rows([[2, 4]]))
    assert k in {(2, -1), (-2, 1)}


def test_quotient_examples():
    assert quotient_invariants([(1,)], [(2,)]) == AbelianInvariants(0, (2,))
    assert quotient_invariants([(1, 0), (0, 1)], []) == AbelianInvariants(2)
    assert quotient_invariants([(1, 0), (0, 1)], [(0, 1)]) == AbelianInvariants(1)
    assert quotient_invariants([(1, 0), (0, 1)], [(2, 0), (0, 6)]) == AbelianInvariants(0, (2, 6))
    assert quotient_invariants([(1, 0), (0, 1)], [(2, 0), (0, 3)]) == AbelianInvariants(0, (6,))


def test_quotient_in_sublattice_coordinates():
    # ambient = span{(2, 0)}; (2, 0) is 1 times the basis vector: trivial quotient
    assert quotient_invariants([(2, 0)], [(2, 0)]) == AbelianInvariants(0)
    assert quotient_invariants([(2, 0)], [(6, 0)]) == AbelianInvariants(0, (3,))


def test_subgroup_not_contained():
    with pytest.raises(SubgroupNotContained):
        quotient_invariants([(2, 0)], [(1, 0)])
    with pytest.raises(SubgroupNotContained):
        quotient_invariants([(1, 0)], [(0, 1)])
    with pytest.raises(SubgroupNotContained):
        lattice_coordinates([], [(1,)])


def test_abelian_invariants_validation():
    with pytest.raises(ValueError):
        AbelianInvariants(0, (4, 2))
    with pytest.raises(ValueError):
        AbelianInvariants(-1)
    assert str(AbelianInvariants(1)) == "Z"
    assert str(AbelianInvariants(0)) == "0"
    assert str(AbelianInvariants(2, (2,))) == "Z^2 + Z/2"


def _unimodular_moves():
    op = st.sampled_from(["swap", "neg", "add"])
    return st.lists(st.tuples(op, st.integers(0, 10), st.integers(0, 10)), max_size=8)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3).map(tuple), min_size=0, max_size=4),
    _unimodular_moves(),
)
def test_quotient_invariant_under_generator_changes(subs, moves):
    ambient = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    before = quotient_invariants(ambient, subs)
    subs = list(subs)
    for op, i, j in moves:
        if not subs:
            break
        i, j = i % len(subs), j % len(subs)
        if op == "swap":
            subs[i], subs[j] = subs[j], subs[i]
        elif op == "neg":
            subs[i] = tuple(-x for x in subs[i])
        elif i != j:
            subs[i] = tuple(a + b for a, b in zip(subs[i], subs[j]))
    assert quotient_invariants(ambient, subs) == before
