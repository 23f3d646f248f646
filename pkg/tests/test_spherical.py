import json
import random

import pytest

from a2reps import analysis as an
from a2reps import catalog as cat
from a2reps import spherical as sph
from a2reps.acceptance import catalog_for
from a2reps.analysis import _combo
from a2reps.hopf import O1, Params, classify_character


def test_even_n_refused(p22):
    with pytest.raises(sph.NOdd):
        sph.qdim(p22, cat.build_projective(p22, p22.chi(0, 0)))
    with pytest.raises(sph.NOdd):
        sph.pivot_check(p22)


@pytest.mark.parametrize("lam", [(0, 0, 0), (1, 1, 1), (0, 1, 1)])
def test_pivot(lam):
    assert sph.pivot_check(Params.make(5, 2, lam))


def test_simple_qdims():
    for lam in ((0, 0, 0), (1, 0, 0), (0, 0, 1), (1, 1, 1)):
        p = Params.make(3, 3, lam)
        for L in an.simples(p):
            q = sph.qdim(p, L.build(p))
            assert q in (1, -1) if L.dim == 1 else q == 0


def test_q_qdims(p32):
    chi = p32.chi(1, 0)  # zeta^{3i} = -1
    for n in range(1, 13):
        q = sph.qdim(p32, cat.build_indecomposable(p32, "Q", chi, n=n))
        assert q == (-1 if n % 2 else 0)


def _catalog(p):
    return [R for r in an.orbits(p) for R in catalog_for(p, r, q_n=2)]


def test_qdim_additive_multiplicative(p32):
    reps = [R for R in _catalog(p32) if R.dim <= 8][::5]
    for R in reps:
        for S in reps:
            if R.dim * S.dim <= 64:
                assert sph.qdim(p32, cat.direct_sum(R, S)) == sph.qdim(p32, R) + sph.qdim(p32, S)
                assert sph.qdim(p32, cat.tensor(p32, R, S)) == sph.qdim(p32, R) * sph.qdim(p32, S)


def test_qdim_dual_invariant():
    for lam in ((0, 0, 0), (1, 0, 1)):
        p = Params.make(3, 2, lam)
        for R in _catalog(p):
            if R.dim <= 8:
                assert sph.qdim(p, cat.dual(p, R)) == sph.qdim(p, R)


def test_non_o1_indecomposables_have_zero_qdim():
    for lam in ((1, 0, 0), (0, 1, 0), (1, 1, 1), (1, 1, 0)):
        p = Params.make(3, 2, lam)
        for r in an.orbits(p):
            if classify_character(p, r) != O1:
                for R in catalog_for(p, r, q_n=4):
                    assert sph.qdim(p, R) == 0


def test_negligible_is_an_ideal(p32):
    rng = random.Random(0)
    by_orbit = [[R for R in catalog_for(p32, r, q_n=2) if R.dim <= 8] for r in an.orbits(p32)]
    hits = 0
    for _ in range(100):
        reps = rng.choice(by_orbit)
        X, R, S, T = (rng.choice(reps) for _ in range(4))
        H = an.hom_basis(p32, R, S).basis
        if not H:
            continue
        f = _combo(H, [rng.randint(-2, 2) for _ in H], R.ring)
        if not sph.qtr_negligible(p32, f, R, S).negligible:
            continue
        hits += 1
        for g in an.hom_basis(p32, S, T).basis:
            assert sph.qtr_negligible(p32, g @ f, R, T).negligible
        for k in an.hom_basis(p32, X, R).basis:
            assert sph.qtr_negligible(p32, f @ k, X, S).negligible
    assert hits > 10


def test_identity_negligibility():
    p = Params.make(3, 2, (1, 0, 0))
    L1 = next(L for L in an.simples(p) if L.dim == 1).build(p)
    L2 = next(L for L in an.simples(p) if L.dim == 2).build(p)
    assert not sph.qtr_negligible(p, L1.g1 ** 0, L1, L1).negligible
    rep = sph.qtr_negligible(p, L2.g1 ** 0, L2, L2)
    assert rep.negligible and rep.hom_dim == 1


def test_not_a_hom(p32):
    R = cat.build_projective(p32, p32.chi(0, 0))
    with pytest.raises(sph.NotAHom):
        sph.qtr_negligible(p32, R.a1, R, R)


def test_fusion_report(p32):
    chi, phi = p32.chi(1, 0), p32.chi(0, 1)
    rep = sph.fusion_decompose(p32, cat.build_indecomposable(p32, "M3", chi, i=1),
                               cat.build_indecomposable(p32, "M3", phi, i=4))
    obj = json.loads(json.dumps(rep.to_json()))
    labels = sorted((s["label"], s["survives"]) for s in obj["summands"])
    assert labels == [("L1:1,3", True), ("P:1,1", False)]
    assert [s.qdim for s in rep.surviving] == [-1]


def test_probe_small(p32):
    rep = sph.probe_question_zero(p32, 6)
    assert rep.table and not rep.nonzero
