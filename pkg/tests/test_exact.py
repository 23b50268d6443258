import random
from fractions import Fraction

import pytest

from l2lab.exact import (ModularInt, RationalMatrix, echelon_reduce, in_row_space,
                         kernel_basis, next_prime, rank, rref, solve)


def test_kernel_full_rank_1x1():
    m = RationalMatrix(1, 1, [1])
    assert kernel_basis(m) == []


def test_kernel_of_empty_matrix_is_standard_basis():
    m = RationalMatrix(0, 3, [])
    assert kernel_basis(m) == [
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
    ]


def test_kernel_1x2_symmetry():
    m = RationalMatrix(1, 2, [1, -1])
    assert kernel_basis(m) == [(Fraction(1), Fraction(1))]


def test_kernel_2x3_hand_elimination():
    # [[1,0,1],[0,1,1]] is already reduced; the free column gives (-1,-1,1).
    m = RationalMatrix(2, 3, [1, 0, 1, 0, 1, 1])
    assert kernel_basis(m) == [(Fraction(-1), Fraction(-1), Fraction(1))]


def test_echelon_identity():
    m = RationalMatrix(2, 2, [1, 0, 0, 1])
    assert echelon_reduce(m) == m


def test_echelon_scaling():
    m = RationalMatrix(1, 2, [2, 4])
    assert echelon_reduce(m) == RationalMatrix(1, 2, [1, 2])


def test_echelon_duplicate_row():
    m = RationalMatrix(2, 2, [1, 1, 1, 1])
    assert echelon_reduce(m) == RationalMatrix(2, 2, [1, 1, 0, 0])


@pytest.mark.parametrize("n,expected", [(1, 2), (7, 11), (100, 101), (0, 2), (2, 3)])
def test_next_prime(n, expected):
    assert next_prime(n) == expected


def test_next_prime_against_trial_division():
    def is_prime_naive(k):
        return k >= 2 and all(k % d for d in range(2, k))
    for n in range(0, 200):
        p = next_prime(n)
        assert is_prime_naive(p)
        assert all(not is_prime_naive(k) for k in range(n + 1, p))


def _random_matrix(rng, rows, cols):
    return RationalMatrix(rows, cols,
                          [Fraction(rng.randrange(-6, 7), rng.randrange(1, 4))
                           for _ in range(rows * cols)])


def test_kernel_exactness_and_rank_nullity():
    rng = random.Random(7)
    for _ in range(40):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 6)
        m = _random_matrix(rng, rows, cols)
        basis = kernel_basis(m)
        for v in basis:
            assert all(x == 0 for x in m.mul_vector(v))
        assert rank(m.rows()) + len(basis) == cols


def test_echelon_idempotent():
    rng = random.Random(13)
    for _ in range(25):
        m = _random_matrix(rng, rng.randrange(1, 5), rng.randrange(1, 5))
        e = echelon_reduce(m)
        assert echelon_reduce(e) == e


def test_solve_roundtrip():
    rng = random.Random(99)
    for _ in range(30):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        m = _random_matrix(rng, rows, cols)
        x = [Fraction(rng.randrange(-4, 5)) for _ in range(cols)]
        rhs = m.mul_vector(x)
        got = solve(m.rows(), rhs, Fraction(1))
        assert got is not None
        assert m.mul_vector(got) == rhs


def test_solve_inconsistent():
    assert solve([[Fraction(1)], [Fraction(1)]], [Fraction(1), Fraction(2)],
                 Fraction(1)) is None


def test_in_row_space():
    red, _ = rref([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]])
    assert in_row_space([Fraction(3), Fraction(4)], red)
    red2, _ = rref([[Fraction(1), Fraction(1)]])
    assert in_row_space([Fraction(2), Fraction(2)], red2)
    assert not in_row_space([Fraction(1), Fraction(0)], red2)


def test_modular_int_field_axioms():
    p = 7
    elems = [ModularInt(i, p) for i in range(p)]
    for a in elems:
        for b in elems:
            assert (a + b) - b == a
            assert a * b == b * a
            if b:
                assert (a / b) * b == a
    assert ModularInt(3, 7) ** 6 == 1


def test_modular_int_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        ModularInt(1, 5) + ModularInt(1, 7)


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        RationalMatrix(2, 2, [1, 2, 3])
