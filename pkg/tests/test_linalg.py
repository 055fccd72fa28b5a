from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arbcount import constructions as C
from arbcount import kernels
from arbcount.graphs import laplacian, skew_adjacency
from arbcount.linalg import (
    IntMatrix,
    IntPolynomial,
    all_ones,
    char_poly,
    det,
    eval_poly,
    frobenius_norm_sq,
    identity,
    is_perfect_square,
    minor_det,
    sum_principal_minors,
)


def leibniz_det(rows):
    """Permutation expansion; independent of elimination."""
    n = len(rows)
    total = 0
    for p in permutations(range(n)):
        inversions = sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
        term = (-1) ** inversions
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


def leibniz_char_poly(rows):
    """det(xI - M) expanded over permutations with polynomial entries."""
    n = len(rows)
    entry = [
        [IntPolynomial([-rows[i][j], 1]) if i == j else IntPolynomial([-rows[i][j]]) for j in range(n)]
        for i in range(n)
    ]
    total = IntPolynomial([])
    for p in permutations(range(n)):
        inversions = sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
        term = IntPolynomial([(-1) ** inversions])
        for i in range(n):
            term = term * entry[i][p[i]]
        total = total + term
    return total


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
)


def test_det_examples(backend):
    assert det(IntMatrix([[2, 1], [1, 2]])) == 3
    assert det(identity(5)) == 1


def test_det_of_4_vertex_tournament_skew_matrix():
    from arbcount.search import enumerate_tournaments

    assert {det(skew_adjacency(T)) for T in enumerate_tournaments(4)} == {1, 9}


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det(IntMatrix([[1, 2, 3], [4, 5, 6]]))


def test_det_needs_pivoting(backend):
    assert det(IntMatrix([[0, 1], [1, 0]])) == -1
    assert det(IntMatrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])) == -1
    assert det(IntMatrix([[0, 1], [0, 1]])) == 0


@settings(max_examples=200, deadline=None)
@given(square)
def test_det_matches_leibniz(rows):
    old = kernels.get_backend()
    try:
        for name in kernels.available_backends():
            kernels.set_backend(name)
            assert det(IntMatrix(rows)) == leibniz_det(rows)
    finally:
        kernels.set_backend(old)


def test_det_big_entries_fall_back_exactly(backend):
    big = 10**30
    M = IntMatrix([[big, 1, 0], [3, big, 7], [1, 2, big]])
    assert det(M) == leibniz_det(M.tolist())


@settings(max_examples=60, deadline=None)
@given(square, square)
def test_det_multiplicative(a, b):
    if len(a) != len(b):
        return
    A, B = IntMatrix(a), IntMatrix(b)
    assert det(A @ B) == det(A) * det(B)


def test_minor_det():
    M = IntMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert minor_det(M, 0, 0) == 5 * 10 - 6 * 8
    assert minor_det(M, 1, 2) == 1 * 8 - 2 * 7


def test_char_poly_examples():
    assert char_poly(identity(2)) == IntPolynomial([1, -2, 1])
    assert char_poly(laplacian(C.swirl(3))) == IntPolynomial([0, 3, -3, 1])


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
def test_char_poly_swirl_skew(n):
    x1 = IntPolynomial([1, 1]) ** n
    x2 = IntPolynomial([-1, 1]) ** n
    twice = x1 + x2
    assert all(c % 2 == 0 for c in twice.coeffs)
    assert char_poly(skew_adjacency(C.swirl(n))) == IntPolynomial(c // 2 for c in twice.coeffs)


@settings(max_examples=100, deadline=None)
@given(square)
def test_char_poly_matches_leibniz(rows):
    assert char_poly(IntMatrix(rows)) == leibniz_char_poly(rows)


@settings(max_examples=100, deadline=None)
@given(square)
def test_char_poly_coefficients_are_principal_minor_sums(rows):
    M = IntMatrix(rows)
    n = len(rows)
    p = char_poly(M)
    assert p.coeff(n) == 1
    assert p(0) == (-1) ** n * det(M)
    for k in range(n + 1):
        assert p.coeff(n - k) == (-1) ** k * sum_principal_minors(M, k)


@pytest.mark.parametrize("seed", range(10))
def test_skew_symmetric_facts(seed):
    T = C.random_tournament(4 + seed % 4, seed)
    M = skew_adjacency(T)
    n = T.n
    d = det(M)
    if n % 2:
        assert d == 0
    else:
        assert d >= 0 and is_perfect_square(d)[0]
    p = char_poly(M)
    assert all(p.coeff(n - k) == 0 for k in range(1, n + 1, 2))


def test_sum_principal_minors_edges():
    M = IntMatrix([[1, 2], [3, 4]])
    assert sum_principal_minors(M, 0) == 1
    assert sum_principal_minors(M, 2) == det(M)
    with pytest.raises(ValueError):
        sum_principal_minors(M, 3)
    T = C.random_tournament(6, 1)
    Ms = skew_adjacency(T)
    assert all(sum_principal_minors(Ms, k) == 0 for k in (1, 3, 5))


def test_is_perfect_square():
    assert is_perfect_square(9) == (True, 3)
    assert is_perfect_square(1) == (True, 1)
    assert is_perfect_square(8) == (False, None)
    assert is_perfect_square(-4) == (False, None)


def test_frobenius_norm_sq():
    assert frobenius_norm_sq(laplacian(C.swirl(3))) == 6
    assert frobenius_norm_sq(IntMatrix([[0, 0], [0, 0]])) == 0
    assert frobenius_norm_sq(laplacian(C.swirl(7))) == 7 * 9 + 21


def test_eval_poly():
    p = IntPolynomial([1, -2, 1])
    assert eval_poly(p, Fraction(1, 2)) == Fraction(1, 4)
    assert eval_poly(p, 3) == 4


def test_matrix_algebra():
    A = IntMatrix([[1, 2], [3, 4]])
    assert A + A == A.scale(2)
    assert A - A == IntMatrix([[0, 0], [0, 0]])
    assert A @ identity(2) == A
    assert A.T == IntMatrix([[1, 3], [2, 4]])
    assert all_ones(2) @ all_ones(2) == all_ones(2).scale(2)
    with pytest.raises(ValueError):
        A @ IntMatrix([[1, 2, 3]])


def test_polynomial_canonical_form():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0]).coeffs == ()
