import json
import random

import pytest
from hypothesis import given, strategies as st

from a2reps.field import Cyclo, Ring, Singular
from a2reps.matrix import Matrix, block_diag, mat_solve, span_basis

R8 = Ring(8)


def rand_matrix(rng, r, c, ring=R8, lo=-3, hi=3):
    deg = len(Cyclo.one(ring.K).coeffs())
    return Matrix([[Cyclo(ring.K, [rng.randint(lo, hi) for _ in range(deg)], rng.randint(1, 2))
                    for _ in range(c)] for _ in range(r)], ring)


@st.composite
def matrices(draw, square=False):
    seed = draw(st.integers(0, 2 ** 32))
    r = draw(st.integers(1, 6))
    c = r if square else draw(st.integers(1, 6))
    return rand_matrix(random.Random(seed), r, c)


def test_inverse_200_seeded():
    rng = random.Random(0)
    done = 0
    while done < 200:
        n = rng.randint(1, 10)
        A = rand_matrix(rng, n, n, Ring(4))
        if not A.det():
            continue
        assert A @ A.inverse() == Matrix.identity(n, A.ring)
        done += 1


@given(matrices())
def test_rank_nullity(A):
    ker = A.kernel()
    assert A.rank() + len(ker) == A.ncols
    for v in ker:
        assert all(x == 0 for x in A.apply(v))


@given(matrices(square=True), matrices(square=True))
def test_det_multiplicative(A, B):
    if A.shape == B.shape:
        assert (A @ B).det() == A.det() * B.det()


@given(matrices(square=True))
def test_det_vs_rank(A):
    assert bool(A.det()) == (A.rank() == A.nrows)


def test_singular_det_is_zero_and_inverse_raises():
    A = Matrix([[1, 2], [2, 4]], R8)
    assert A.det() == 0
    with pytest.raises(Singular):
        A.inverse()


@given(matrices())
def test_solve_consistent(A):
    x = [Cyclo.from_rational(8, k) for k in range(A.ncols)]
    b = A.apply(x)
    y = A.solve(b)
    assert A.apply(y) == b


def test_solve_inconsistent():
    with pytest.raises(Singular):
        Matrix([[1, 0], [0, 0]], R8).solve([1, 1])


def test_rref_pivots():
    R, piv = Matrix([[0, 2, 4], [0, 1, 2], [1, 0, 1]], R8).rref()
    assert piv == [0, 1]
    assert R == Matrix([[1, 0, 1], [0, 1, 2], [0, 0, 0]], R8)


def test_kron_and_block_diag():
    A = Matrix([[1, 2], [3, 4]], R8)
    I = Matrix.identity(2, R8)
    K = A.kron(I)
    assert K.shape == (4, 4) and K[0, 2] == 2 and K[1, 3] == 2
    B = block_diag([A, I], R8)
    assert B.submatrix([0, 1], [0, 1]) == A and B.submatrix([2, 3], [2, 3]) == I
    assert B.submatrix([0, 1], [2, 3]).is_zero()


def test_span_basis_and_dispatch():
    vs = [[Cyclo.from_rational(8, a) for a in v] for v in ([1, 0, 1], [2, 0, 2], [0, 1, 0])]
    assert len(span_basis(vs, R8)) == 2
    A = Matrix([[1, 1], [0, 1]], R8)
    assert mat_solve("rank", A) == 2
    assert mat_solve("det", A) == 1
    with pytest.raises(ValueError):
        mat_solve("eigen", A)


@given(matrices())
def test_json_roundtrip(A):
    assert Matrix.from_json(json.loads(json.dumps(A.to_json())), A.ring) == A
