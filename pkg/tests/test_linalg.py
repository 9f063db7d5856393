"""Exact linear algebra over GF(p): frozen oracle values and properties.

The expected values for the non-trivial cases were produced by brute-force
enumeration oracles (kept in this file) and frozen; the oracles still run
so a regression in either direction is caught.
"""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ardom.linalg import PrimeField, is_probable_prime

F5 = PrimeField(5)
F7 = PrimeField(7)
F101 = PrimeField(101)


# -- oracles --------------------------------------------------------------


def kernel_by_enumeration(field, m):
    """All vectors v with m·v = 0, found by exhaustive enumeration."""
    cols = m.shape[1]
    hits = []
    for v in itertools.product(range(field.p), repeat=cols):
        col = np.array(v, dtype=np.int64).reshape(-1, 1)
        if not np.any(field.mul(m, col)):
            hits.append(v)
    return hits


def solutions_by_enumeration(field, m, rhs):
    cols = m.shape[1]
    hits = []
    for v in itertools.product(range(field.p), repeat=cols):
        col = np.array(v, dtype=np.int64).reshape(-1, 1)
        if np.array_equal(field.mul(m, col), np.mod(rhs, field.p)):
            hits.append(v)
    return hits


# -- field scalars ----------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_field_axioms_exhaustive(p):
    f = PrimeField(p)
    for a in range(p):
        for b in range(p):
            assert f.element(a + b) == (a + b) % p
            assert f.element(a * b) == (a * b) % p
    for a in range(1, p):
        assert f.inv(a) * a % p == 1


def test_bad_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)
    with pytest.raises(ValueError):
        PrimeField(1 << 21)


def test_is_probable_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_probable_prime(n) == (n in primes)


# -- rref -------------------------------------------------------------------


def test_rref_identity():
    m = F5.eye(2)
    r, piv = F5.rref(m)
    assert np.array_equal(r, m)
    assert piv == (0, 1)


def test_rref_proportional_rows():
    m = F5.mat([[1, 2], [2, 4]])
    r, piv = F5.rref(m)
    assert np.array_equal(r, F5.mat([[1, 2], [0, 0]]))
    assert piv == (0,)


def test_rref_empty():
    m = F5.zeros(0, 3)
    r, piv = F5.rref(m)
    assert r.shape == (0, 3)
    assert piv == ()


# -- kernel -----------------------------------------------------------------


def test_kernel_zero_map():
    k = F5.kernel_basis(F5.zeros(2, 3))
    assert k.shape == (3, 3)
    assert F5.rank(k) == 3


def test_kernel_identity():
    assert F7.kernel_basis(F7.eye(4)).shape == (0, 4)


def test_kernel_proportional_rows_matches_enumeration():
    m = F5.mat([[1, 2], [2, 4]])
    k = F5.kernel_basis(m)
    assert k.shape == (1, 2)
    # frozen from the GF(5)^2 enumeration oracle: kernel = span{(3, 1)}
    assert np.array_equal(k, F5.mat([[3, 1]]))
    hits = kernel_by_enumeration(F5, m)
    assert len(hits) == 5  # a line through the origin
    assert set(hits) == {tuple((c * k[0]) % 5) for c in range(5)}


# -- solve --------------------------------------------------------------------


def test_solve_identity():
    v = F7.mat([[2], [5], [0]])
    x = F7.solve(F7.eye(3), v)
    assert np.array_equal(x, v)
    assert F7.kernel_basis(F7.eye(3)).shape == (0, 3)


def test_solve_inconsistent():
    assert F7.solve(F7.zeros(2, 2), F7.mat([[1], [0]])) is None


def test_solve_underdetermined_matches_enumeration():
    m = F7.mat([[1, 1]])
    rhs = F7.mat([[3]])
    x = F7.solve(m, rhs)
    assert x is not None
    assert np.array_equal(F7.mul(m, x), rhs)
    k = F7.kernel_basis(m)
    assert k.shape == (1, 2)
    # frozen from the GF(7)^2 enumeration oracle: 7 solutions on a line
    hits = solutions_by_enumeration(F7, m, rhs)
    assert len(hits) == 7
    assert tuple(x[:, 0]) in hits
    assert set(hits) == {tuple((x[:, 0] + c * k[0]) % 7) for c in range(7)}


# -- rank ----------------------------------------------------------------------


def test_rank_cases():
    assert F5.rank(F5.eye(4)) == 4
    assert F5.rank(F5.zeros(3, 2)) == 0
    assert F5.rank(F5.mat([[1, 2], [2, 4]])) == 1


# -- properties -----------------------------------------------------------------


def random_matrix(draw, p, max_dim=5):
    rows = draw(st.integers(min_value=0, max_value=max_dim))
    cols = draw(st.integers(min_value=0, max_value=max_dim))
    entries = draw(
        st.lists(
            st.integers(min_value=0, max_value=p - 1),
            min_size=rows * cols,
            max_size=rows * cols,
        )
    )
    return np.array(entries, dtype=np.int64).reshape(rows, cols)


@st.composite
def matrices(draw, p=5):
    return random_matrix(draw, p)


@given(matrices())
@settings(max_examples=200)
def test_rank_transpose_and_nullity(m):
    assert F5.rank(m) == F5.rank(m.T)
    assert F5.rank(m) + F5.kernel_basis(m).shape[0] == m.shape[1]


@given(matrices())
@settings(max_examples=200)
def test_rref_idempotent(m):
    r, piv = F5.rref(m)
    r2, piv2 = F5.rref(r)
    assert np.array_equal(r, r2)
    assert piv == piv2


@given(matrices())
@settings(max_examples=200)
def test_kernel_annihilates(m):
    k = F5.kernel_basis(m)
    assert not np.any(F5.mul(m, k.T))


@given(matrices(), st.integers(min_value=0, max_value=4))
@settings(max_examples=200)
def test_solve_verified_by_multiplication(m, seed):
    rng = np.random.default_rng(seed)
    target = rng.integers(0, 5, size=(m.shape[1], 1))
    rhs = F5.mul(m, target)  # guaranteed consistent
    x = F5.solve(m, rhs)
    assert x is not None
    assert np.array_equal(F5.mul(m, x), rhs)


@given(matrices(p=101))
@settings(max_examples=100)
def test_quotient_projection_section(m):
    n = m.shape[1]
    q = F101.quotient_by_rowspace(m, n)
    assert q.dim == n - F101.rank(m)
    assert np.array_equal(F101.mul(q.section, q.proj), F101.eye(q.dim))
    # the row space maps to zero in the quotient
    assert not np.any(F101.mul(m, q.proj))


def test_row_space_basis_spans():
    m = F5.mat([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    b = F5.row_space_basis(m)
    assert b.shape[0] == F5.rank(m) == 2
    assert F5.coords_in_rowspace(b, m) is not None
