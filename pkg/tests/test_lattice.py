from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from bisimple import lattice

small = st.integers(-6, 6)


def vectors(rank, max_size=4):
    return st.lists(st.lists(small, min_size=rank, max_size=rank).map(tuple), max_size=max_size)


def spans(basis, v, reach=4):
    """Brute-force membership: v is a small integer combination of basis."""
    for coeffs in product(range(-reach, reach + 1), repeat=len(basis)):
        w = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(len(v))]
        if w == list(v):
            return True
    return not basis and not any(v)


def test_hnf_examples():
    assert lattice.hnf([[4, 6]]) == [[2]]
    assert lattice.hnf([[1, 0], [0, 1]]) == [[1, 0], [0, 1]]
    assert lattice.hnf([[2, 0], [0, 3]]) == lattice.hnf([[0, 2], [3, 0]])


def test_preimage_of_6z_under_doubling():
    assert list(lattice.preimage([[2]], [(6,)], 1)) == [(3,)]


def test_index():
    assert lattice.index([(6,)], [(2,)], 1) == 3
    assert lattice.index([(2, 0), (0, 3)], lattice.identity_basis(2), 2) == 6
    assert lattice.index([(1, 0)], lattice.identity_basis(2), 2) is None


def test_kernel_and_solve():
    M = [[1, 2, 3], [2, 4, 6]]
    for v in lattice.kernel(M, 3):
        assert lattice.matvec(M, v) == (0, 0) or list(lattice.matvec(M, v)) == [0, 0]
    x = lattice.solve([[2, 0], [0, 3]], (4, 9))
    assert list(x) == [2, 3]
    assert lattice.solve([[2]], (3,)) is None


def test_box_ordered_by_norm():
    b = lattice.box(1, 2)
    assert [v[0] for v in b][:1] == [0]
    assert sorted(map(tuple, b)) == [(-2,), (-1,), (0,), (1,), (2,)]


@settings(max_examples=60, deadline=None)
@given(vectors(2, 3))
def test_canonical_basis_is_span_invariant(vs):
    a = lattice.canonical_basis(vs, 2)
    assert lattice.canonical_basis(list(reversed(vs)), 2) == a
    assert lattice.canonical_basis(a, 2) == a
    for v in vs:
        assert lattice.contains(a, v)


tiny = st.lists(st.integers(-3, 3), min_size=2, max_size=2).map(tuple)


@settings(max_examples=60, deadline=None)
@given(st.lists(tiny, max_size=2), st.lists(small, min_size=2, max_size=2))
def test_membership_matches_brute_force(vs, v):
    # entries <= 3 and |v| <= 6 keep the needed coefficients below 40 (Cramer)
    assert lattice.contains(lattice.canonical_basis(vs, 2), v) == spans(vs, v, reach=40)


@settings(max_examples=60, deadline=None)
@given(vectors(2, 2), st.lists(small, min_size=2, max_size=2))
def test_reduce_mod_is_a_coset_label(vs, v):
    basis = lattice.canonical_basis(vs, 2)
    r = lattice.reduce_mod(basis, v)
    diff = [a - b for a, b in zip(v, r)]
    assert lattice.contains(basis, diff)
    for b in basis:
        shifted = [a + c for a, c in zip(v, b)]
        assert lattice.reduce_mod(basis, shifted) == r


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2), vectors(2, 2))
def test_preimage_definition(A, vs):
    basis = lattice.canonical_basis(vs, 2)
    pre = lattice.preimage(A, basis, 2)
    for x in lattice.box(2, 3):
        assert lattice.contains(pre, x) == lattice.contains(basis, lattice.matvec(A, x))
