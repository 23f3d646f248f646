import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from a2reps import analysis as an
from a2reps import catalog as cat
from a2reps.acceptance import catalog_for, d_zero_params, quiver_oracle
from a2reps.field import Cyclo
from a2reps.hopf import O1, O4, Params, alpha, classify_character, discriminant
from a2reps.matrix import Matrix, span_basis
from conftest import small_params


@given(small_params, st.data())
@settings(max_examples=25)
def test_hom_basis_intertwines(p, data):
    r = data.draw(st.sampled_from(sorted(an.orbits(p))))
    reps = catalog_for(p, r, q_n=4)
    R = data.draw(st.sampled_from(reps))
    S = data.draw(st.sampled_from(reps))
    if R.ring != S.ring:
        return
    H = an.hom_basis(p, R, S)
    for f in H.basis:
        assert an.is_hom(f, R, S)
    if H.basis:
        flat = [[x for row in f.rows for x in row] for f in H.basis]
        assert len(span_basis(flat, R.ring)) == len(H.basis)


def test_simples_have_scalar_endomorphisms():
    for lam in ((0, 0, 0), (1, 0, 0), (0, 1, 1), (1, 1, 1), (1, 1, 4)):
        p = Params.make(2, 3, lam)
        for L in an.simples(p):
            R = L.build(p)
            assert an.hom_basis(p, R, R).dim == 1, L.label


def test_theorem_case():
    assert an.theorem_case((0, 0, 0)) == (1, None)
    assert an.theorem_case((1, 0, 0))[0] == 2
    assert an.theorem_case((0, 1, 1))[0] == 5
    assert an.theorem_case((1, 1, 2)) == (8, "l3=2l1l2")
    assert an.theorem_case((1, 1, 3)) == (8, "l3!=2l1l2")


def test_classify_small_example():
    # case (7) at N = M = 2: 4 + 2(M-1) + 2M(N-1)
    out = an.classify(Params.make(2, 2, (1, 1, 0)))
    assert out["case"] == 7
    assert out["counts"] == {"dim1": 4, "dim2": 2, "dim4": 4}
    assert out["orbit_check_ok"]


def test_dimension_identity_d_zero():
    p, chi = d_zero_params()
    assert not discriminant(p, chi)
    assert an.classify(p)["orbit_check_ok"]


def test_iso_negative_reasons(p22):
    a = cat.build_simple(p22, "L1", p22.chi(0, 0))
    b = cat.build_simple(p22, "L1", p22.chi(1, 0))
    r = an.is_isomorphic(p22, a, b)
    assert not r and r.decisive and "fingerprint" in r.reason
    r = an.is_isomorphic(p22, a, cat.build_projective(p22, p22.chi(0, 0)))
    assert not r and "dim" in r.reason


def test_iso_witness_after_basis_change(p22):
    rng = random.Random(3)
    R = cat.build_indecomposable(p22, "M4", p22.chi(0, 1), i=5)
    while True:
        T = Matrix([[rng.randint(-2, 2) for _ in range(R.dim)] for _ in range(R.dim)], R.ring)
        if T.det():
            break
    S = R.change_basis(T, None)
    res = an.is_isomorphic(p22, R, S)
    assert res and an.is_hom(res.witness, R, S)


@pytest.mark.parametrize("lam", [(0, 0, 0), (1, 0, 0), (0, 1, 1), (1, 1, 0), (1, 1, 1)])
def test_decompose_roundtrip(lam):
    p = Params.make(2, 2, lam)
    for r in an.orbits(p):
        reps = catalog_for(p, r, q_n=4)
        R = cat.direct_sum_all(reps[:3])
        dec = an.decompose(p, R)
        S = cat.direct_sum_all([s.rep for s in dec]).over(dec.witness.ring)
        assert an.is_hom(dec.witness, S, R.over(dec.witness.ring))
        assert dec.witness.rank() == R.dim
        assert sum(s.rep.dim for s in dec) == R.dim


def test_projective_composition_factors(p22):
    chi = p22.chi(0, 1)
    cf = an.composition_factors(p22, cat.build_projective(p22, chi))
    assert cf == Counter({f"L1:{c}": 2 for c in chi.orbit()})


def _generated(R, vecs):
    """Submodule of a weight-basis rep generated by the weight components of vecs."""
    n, ring = R.dim, R.ring
    comps = []
    for v in vecs:
        for chi in set(R.weights):
            comps.append([v[k] if R.weights[k] == chi else ring.zero() for k in range(n)])
    basis = span_basis(comps, ring)
    while True:
        more = basis + [A.apply(b) for b in basis for A in (R.a1, R.a2)]
        nb = span_basis(more, ring)
        if len(nb) == len(basis):
            return an.subrep(R, basis)
        basis = nb


@pytest.mark.parametrize("seed", range(6))
def test_d_zero_block_completeness(seed):
    p, chi = d_zero_params()
    P = cat.build_projective(p, chi)
    L, = [c.build(p) for c in an.orbit_simples(p, chi) if c.chi == chi]
    rng = random.Random(seed)
    big = cat.direct_sum_all(rng.sample([P, P, L, L], 3))
    big, _ = cat.to_weight_basis(p, big)
    v = [Cyclo.from_rational(p.K, rng.randint(-2, 2)) for _ in range(big.dim)]
    sub, basis = _generated(big, [v])
    X = an.quotient(big, basis) if rng.random() < 0.5 else sub
    if not 4 <= X.dim <= 16:
        X = big
    assert cat.verify_rep(p, X)
    dec = an.decompose(p, X, seed)
    for s in dec:
        assert s.label.split(":")[0] in ("L4", "P"), s.label
        assert s.verdict == "indecomposable"


def test_ext_closed_vs_radical_samples():
    for lam in ((0, 0, 0), (1, 0, 0), (1, 1, 1)):
        p = Params.make(2, 3, lam)
        for r in an.orbits(p)[:3]:
            S = an.orbit_simples(p, r)
            for a in S:
                for b in S:
                    assert an.ext1_closed(p, a, b) == an.ext1_from_radical(p, a, b)


def test_quiver_o1_component(p22):
    q, sep, finite = an.gabriel_quiver(p22)
    assert len(q.vertices) == 16 and len(q.arrows) == 32 and not finite
    exp = Counter()
    for r in an.orbits(p22):
        exp.update(quiver_oracle(p22, r))
    assert Counter(q.arrows) == exp
    dot = an.quiver_dot(q)
    assert dot.startswith("digraph") and dot.count("->") == 32


def test_endo_certificates():
    p = Params.make(2, 2, (0, 0, 0))
    c = an.endo_certificate(p, cat.build_indecomposable(p, "Q", p.chi(0, 0), n=9))
    assert c.verdict == "indecomposable" and c.top_dim == 1
    D = cat.direct_sum(cat.build_simple(p, "L1", p.chi(0, 0)), cat.build_simple(p, "L1", p.chi(0, 0)))
    c = an.endo_certificate(p, D)
    assert c.verdict == "decomposable" and c.endo_dim == 4
