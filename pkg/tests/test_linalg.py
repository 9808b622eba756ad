"""Exact linear algebra: elimination, nullspaces, determinants, inverses."""

import random
from itertools import permutations

import pytest

from h4geproci import linalg
from h4geproci.field import FieldElement, ONE, ZERO


def _random_matrix(rng, rows, cols, lo=-9, hi=9):
    return [[FieldElement(rng.randint(lo, hi), rng.randint(lo, hi))
             for _ in range(cols)] for _ in range(rows)]


def _permutation_determinant(m):
    n = len(m)
    total = ZERO
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = ONE if sign > 0 else -ONE
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + term
    return total


def test_determinant_matches_permutation_expansion():
    rng = random.Random(3)
    for n in (2, 3, 4):
        for _ in range(30):
            m = _random_matrix(rng, n, n)
            assert linalg.determinant(m) == _permutation_determinant(m)


def test_bareiss_keeps_integer_entries_integral():
    rng = random.Random(5)
    for _ in range(20):
        m = _random_matrix(rng, 4, 6)
        echelon, _ = linalg.row_echelon(m)
        for row in echelon:
            for x in row:
                assert x.a.denominator == 1 and x.b.denominator == 1


def test_nullspace_vectors_annihilate_the_matrix():
    rng = random.Random(9)
    for _ in range(40):
        rows, cols = rng.randint(1, 5), rng.randint(1, 6)
        m = _random_matrix(rng, rows, cols, -4, 4)
        basis = linalg.nullspace(m)
        assert linalg.rank(m) + len(basis) == cols
        for v in basis:
            assert all(x.is_zero() for x in linalg.mat_vec(m, v))


def test_nullspace_of_rank_deficient_matrix():
    row = [FieldElement(1), FieldElement(2), FieldElement(3)]
    m = [row, [x * FieldElement(2) for x in row]]
    basis = linalg.nullspace(m)
    assert len(basis) == 2


def test_inverse_roundtrip_and_singular_detection():
    rng = random.Random(13)
    done = 0
    while done < 25:
        m = _random_matrix(rng, 4, 4)
        if linalg.determinant(m).is_zero():
            with pytest.raises(ZeroDivisionError):
                linalg.inverse(m)
            continue
        inv = linalg.inverse(m)
        prod = linalg.mat_mul(m, inv)
        for i in range(4):
            for j in range(4):
                assert prod[i][j] == (ONE if i == j else ZERO)
        done += 1


def test_mat_mul_transpose_compatibility():
    rng = random.Random(17)
    a = _random_matrix(rng, 3, 4)
    b = _random_matrix(rng, 4, 2)
    ab_t = linalg.transpose(linalg.mat_mul(a, b))
    bt_at = linalg.mat_mul(linalg.transpose(b), linalg.transpose(a))
    assert ab_t == bt_at


def test_determinant_alternating_in_rows():
    rng = random.Random(19)
    m = _random_matrix(rng, 3, 3)
    swapped = [m[1], m[0], m[2]]
    assert linalg.determinant(swapped) == -linalg.determinant(m)
    degenerate = [m[0], m[0], m[2]]
    assert linalg.determinant(degenerate).is_zero()
