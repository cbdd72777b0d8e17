import random
from math import gcd

import pytest

from mdeg import intlin
from mdeg.errors import NonPrimitiveVector, ZeroVector


def test_hnf_identity():
    eye = intlin.identity_matrix(3)
    h, u = intlin.hermite_normal_form(eye)
    assert h == eye
    assert u == eye


def test_hnf_diagonal_fixed():
    d = ((2, 0), (0, 2))
    h, u = intlin.hermite_normal_form(d)
    assert h == d
    assert u == intlin.identity_matrix(2)


def test_hnf_random_identities():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(1, 6)
        m = rng.randint(1, 6)
        mat = tuple(tuple(rng.randint(-20, 20) for _ in range(m)) for _ in range(n))
        h, u = intlin.hermite_normal_form(mat)
        assert intlin.det(u) in (1, -1)
        assert intlin.mat_mul(u, mat) == h


def test_hnf_lower_triangular_on_square_nonsingular():
    rng = random.Random(2)
    count = 0
    while count < 50:
        n = rng.randint(2, 5)
        mat = tuple(tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(n))
        if intlin.det(mat) == 0:
            continue
        count += 1
        h, u = intlin.hermite_normal_form(mat)
        for i in range(n):
            assert h[i][i] > 0
            for j in range(i + 1, n):
                assert h[i][j] == 0
            for i2 in range(i + 1, n):
                assert 0 <= h[i2][i] < h[i][i]


def test_is_primitive():
    assert intlin.is_primitive((1, 0, 0))
    assert not intlin.is_primitive((2, 4, 6))
    assert intlin.is_primitive((3, 5, 7))
    with pytest.raises(ZeroVector):
        intlin.is_primitive((0, 0, 0))


def test_is_primitive_matches_gcd_fold():
    rng = random.Random(3)
    for _ in range(300):
        v = tuple(rng.randint(-9, 9) for _ in range(rng.randint(1, 5)))
        g = 0
        for x in v:
            g = gcd(g, x)
        if g == 0:
            with pytest.raises(ZeroVector):
                intlin.is_primitive(v)
        else:
            assert intlin.is_primitive(v) == (g == 1)


def test_complete_to_basis_unit_vector():
    b = intlin.complete_to_basis((1, 0, 0))
    assert tuple(row[0] for row in b) == (1, 0, 0)
    assert intlin.det(b) in (1, -1)


def test_complete_to_basis_generic():
    b = intlin.complete_to_basis((1, 1, 1))
    assert tuple(row[0] for row in b) == (1, 1, 1)
    assert intlin.det(b) in (1, -1)


def test_complete_to_basis_rejects_imprimitive():
    with pytest.raises(NonPrimitiveVector):
        intlin.complete_to_basis((2, 2, 0))
    with pytest.raises(ZeroVector):
        intlin.complete_to_basis((0, 0, 0))


def test_complete_to_basis_random():
    rng = random.Random(4)
    done = 0
    while done < 200:
        v = tuple(rng.randint(-9, 9) for _ in range(rng.randint(2, 5)))
        if intlin.gcd_vector(v) != 1:
            continue
        done += 1
        b = intlin.complete_to_basis(v)
        assert tuple(row[0] for row in b) == v
        assert intlin.det(b) in (1, -1)


def test_basis_with_transform_inverse_pair():
    basis, u = intlin.basis_with_transform((2, 3, 5))
    assert intlin.mat_mul(u, basis) == intlin.identity_matrix(3)


def test_unimodular_inverse():
    rng = random.Random(5)
    m = ((1, 2, 0), (0, 1, 3), (0, 0, 1))
    inv = intlin.unimodular_inverse(m)
    assert intlin.mat_mul(m, inv) == intlin.identity_matrix(3)
    with pytest.raises(ValueError):
        intlin.unimodular_inverse(((2, 0), (0, 1)))


def test_solve_rational():
    x = intlin.solve_rational(((2, 1), (1, 1)), (3, 2))
    assert x == (1, 1)
    assert intlin.solve_rational(((1, 1), (2, 2)), (1, 3)) is None
