import json

import pytest
from hypothesis import given, strategies as st

from a2reps import analysis as an
from a2reps import catalog as cat
from a2reps.field import Cyclo
from a2reps.hopf import O1, O2H, O4, Params, classify_character, solve_d
from a2reps.acceptance import catalog_for
from a2reps.matrix import Matrix
from conftest import small_params


def test_simple_dims(p22):
    q = Params.make(2, 2, (1, 1, 1))
    assert cat.build_simple(p22, "L1", p22.chi(0, 0)).dim == 1
    chi = q.chi(1, 1)
    assert cat.build_simple(q, "L4", chi).dim == 4
    h = Params.make(2, 2, (1, 0, 0))
    assert cat.build_simple(h, "L2h", h.chi(1, 0)).dim == 2


def test_wrong_stratum_and_bad_d(p22):
    with pytest.raises(cat.WrongStratum):
        cat.build_simple(p22, "L2h", p22.chi(0, 0))
    q = Params.make(2, 2, (1, 1, 1))
    with pytest.raises(cat.BadD):
        cat.build_simple(q, "L4", q.chi(1, 1), Cyclo.from_rational(q.K, 7))


def test_catalog_dims(p22):
    chi = p22.chi(0, 0)
    assert [cat.build_indecomposable(p22, "M3", chi, i=i).dim for i in range(1, 5)] == [3] * 4
    assert [cat.build_indecomposable(p22, "M4", chi, i=i).dim for i in range(1, 9)] == [4] * 8
    assert cat.build_projective(p22, chi).dim == 8


@pytest.mark.parametrize("n", range(1, 17))
def test_q_dims(p22, n):
    R = cat.build_indecomposable(p22, "Q", p22.chi(1, 0), n=n)
    assert R.dim == n and cat.verify_rep(p22, R)


def test_qh_odd_rejected():
    p = Params.make(3, 2, (1, 0, 0))
    chi = next(c for c in p.characters() if classify_character(p, c) == O2H)
    assert cat.build_indecomposable(p, "Qh", chi, n=6).dim == 6
    with pytest.raises(cat.BadParam):
        cat.build_indecomposable(p, "Qh", chi, n=5)


def test_violation_is_reported(p22):
    R = cat.build_projective(p22, p22.chi(0, 0))
    bad = cat.Rep(Matrix.identity(8, R.ring), R.g2, R.a1, R.a2, R.ring, "broken")
    v = cat.verify_rep(p22, bad)
    assert not v and v.relation


@given(small_params, st.data())
def test_catalog_verifies(p, data):
    chi = data.draw(st.sampled_from(sorted(an.orbits(p))))
    for R in catalog_for(p, chi, q_n=data.draw(st.integers(2, 6)) * 2):
        assert cat.verify_rep(p, R), R.label


def _block_ok(p, R):
    """a1 maps the chi block into chi-bar, a2 into -chi, and orbit blocks are stable."""
    blocks = cat.isotypic_decompose(p, R)
    total = sum(len(v) for v in blocks.values())
    assert total == R.dim
    for chi, vecs in blocks.items():
        for v in vecs:
            for A, tgt in ((R.a1, chi.bar()), (R.a2, chi.neg())):
                w = A.apply(v)
                if any(w):
                    B = Matrix.from_columns(blocks[tgt], R.ring)
                    B.solve(w)


@given(small_params, st.data())
def test_squares_and_orbit_blocks(p, data):
    chi = data.draw(st.sampled_from(p.characters()))
    P = cat.build_projective(p, chi)
    _block_ok(p, P)
    T = cat.tensor(p, P, cat.build_projective(p, chi.bar()))
    _block_ok(p, T)


def test_tensor_and_dual_verify():
    for lam in ((0, 0, 0), (1, 1, 1), (1, 0, 1), (0, 1, 1)):
        p = Params.make(2, 3, lam)
        reps = [R for c in sorted(an.orbits(p))[:3] for R in catalog_for(p, c, q_n=2)[:4]]
        for R in reps:
            assert cat.verify_rep(p, cat.dual(p, R))
        for R in reps[:4]:
            for S in reps[:4]:
                if R.ring == S.ring:
                    assert cat.verify_rep(p, cat.tensor(p, R, S))


def test_tensor_basis_order(p22):
    R = cat.build_indecomposable(p22, "M3", p22.chi(0, 0), i=1)
    S = cat.build_indecomposable(p22, "M3", p22.chi(1, 1), i=2)
    T = cat.tensor(p22, R, S)
    assert T.g1 == R.g1.kron(S.g1)
    assert T.weights[1 * S.dim + 2] == R.weights[1] * S.weights[2]


def test_double_dual():
    p = Params.make(2, 2, (0, 0, 0))
    for chi in sorted(an.orbits(p)):
        for R in catalog_for(p, chi, q_n=4):
            if R.dim <= 8:
                assert an.is_isomorphic(p, cat.dual(p, cat.dual(p, R)), R)


def test_json_roundtrip():
    p = Params.make(2, 3, (1, 1, 1))
    chi = next(c for c in p.characters() if classify_character(p, c) == O4)
    for d, _ in solve_d(p, chi):
        L = cat.build_simple(p, "L4", chi, d)
        back = cat.Rep.from_json(json.loads(json.dumps(L.to_json())))
        assert back.mats() == L.mats() and back.ring == L.ring and back.label == L.label
        assert json.dumps(back.to_json(), sort_keys=True) == json.dumps(L.to_json(), sort_keys=True)


def test_direct_sum_and_restrict(p22):
    a = cat.build_simple(p22, "L1", p22.chi(0, 0))
    b = cat.build_indecomposable(p22, "M3", p22.chi(1, 0), i=3)
    S = cat.direct_sum(a, b)
    assert S.dim == 4 and cat.verify_rep(p22, S)
    one, zero = S.ring.one(), S.ring.zero()
    basis = [[zero] * 4 for _ in range(3)]
    for k in range(3):
        basis[k][k + 1] = one
    sub = S.restrict(basis, b.weights, "sub")
    assert sub.mats() == b.mats()
