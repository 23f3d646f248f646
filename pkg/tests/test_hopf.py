import math
import random

import pytest
from hypothesis import given, strategies as st

from a2reps.field import Cyclo
from a2reps.hopf import (O1, O2H, O2V, O4, PBW_WORDS, AlgebraElem, NotInO4, ParamError, Params,
                         alpha, algebra_dim, antipode, canonical, classify_character, discriminant,
                         normal_form, quadratic_residual, s_set_member, solve_d)
from conftest import small_params


def test_params_validation():
    with pytest.raises(ParamError):
        Params.make(1, 2)
    p = Params.make(1, 2, (5, 1, 1), allow_small=True)
    assert p.lam[0] == 0 and p.lam[1] == 1
    assert Params.make(3, 2).K == 12
    assert Params.make(5, 2).K == 20
    assert Params.make(2, 2).K == 4


def test_characters_and_orbits(p22):
    chars = p22.characters()
    assert len(chars) == 16
    for chi in chars:
        assert chi.bar().bar() == chi
        assert chi.neg().neg() == chi
        assert len(set(chi.orbit())) == 4


@pytest.mark.parametrize("N,M", [(2, 2), (2, 3), (3, 4), (4, 6)])
def test_s_set_size(N, M):
    p = Params.make(N, M)
    assert sum(s_set_member(p, c) for c in p.characters()) == 4 * math.gcd(N, M)


def test_alpha_by_hand():
    # N = M = 2: zeta^2 = xi^2 = -1 at chi = (1, 1)
    p = Params.make(2, 2, (1, 1, 1))
    chi = p.chi(1, 1)
    assert alpha(p, chi) == (2, 2, 0)
    assert classify_character(p, chi) == O4
    assert discriminant(p, chi) == -64
    i = Cyclo.root(p.K, 1)
    assert {d for d, _ in solve_d(p, chi)} == {i / 2, -i / 2}


def test_alpha_trivial_character():
    p = Params.make(3, 2, (1, 2, 3))
    assert alpha(p, p.chi(0, 0)) == (0, 0, 0)
    assert classify_character(p, p.chi(0, 0)) == O1


def test_strata_single_parameter():
    p = Params.make(3, 2, (1, 0, 0))
    got = {classify_character(p, c) for c in p.characters()}
    assert got == {O1, O2H}
    p = Params.make(3, 2, (0, 1, 0))
    assert {classify_character(p, c) for c in p.characters()} == {O1, O2V}


def test_solve_d_rejects_non_o4(p22):
    with pytest.raises(NotInO4):
        solve_d(p22, p22.chi(0, 0))


def test_solve_d_degenerate_leading_term():
    p = Params.make(3, 3, (0, 1, 1))
    for chi in p.characters():
        if classify_character(p, chi) == O4:
            (d, c), = solve_d(p, chi)
            a1, a2, a3 = alpha(p, chi)
            assert d == a2 / a3


@given(small_params)
def test_partition_and_roots(p):
    for chi in p.characters():
        s = classify_character(p, chi)
        assert s in (O1, O2H, O2V, O4)
        if s == O4:
            a2 = alpha(p, chi).a2
            for d, c in solve_d(p, chi):
                assert quadratic_residual(p, chi, d) == 0
                if d:
                    assert c * d == a2


def test_canonical_reps(p22):
    chi = p22.chi(3, 1)
    assert canonical("L2h", chi) == p22.chi(1, 1)
    assert canonical("L2v", chi) == p22.chi(1, 3)
    assert canonical("L4", chi) == p22.chi(3, 1)
    assert canonical("orbit", chi) == p22.chi(1, 1)


def test_defining_relations():
    p = Params.make(3, 2, (Cyclo.from_rational(12, 2), 3, 5))
    l1, l2, l3 = p.lam
    one = AlgebraElem.one(p)
    g = lambda r, s: AlgebraElem.basis_elem(p, (), r, s)
    assert normal_form(p, ["a1", "a1"]) == (one - g(2, 0)).scale(l1)
    assert normal_form(p, ["a2", "a2"]) == (one - g(0, 2)).scale(l2)
    lhs = normal_form(p, ["a1", "a2", "a1", "a2"]) + normal_form(p, ["a2", "a1", "a2", "a1"])
    rhs = (one - g(2, 2)).scale(l3) - ((one + g(0, 2)) * (one - g(2, 0))).scale(2 * l1 * l2)
    assert lhs == rhs
    assert normal_form(p, ["g1", "a1"]) == normal_form(p, ["a1", "g1"]).scale(Cyclo.from_rational(p.K, -1))
    assert normal_form(p, ["g2", "a1"]) == normal_form(p, ["a1", "g2"])
    assert normal_form(p, ["g2", "a2"]) == normal_form(p, ["a2", "g2"]).scale(Cyclo.from_rational(p.K, -1))


def test_pbw_basis_irreducible(p32):
    for w in PBW_WORDS:
        x = normal_form(p32, ["a1" if k == 1 else "a2" for k in w])
        assert list(x.terms) == [(w, 0, 0)]
    assert algebra_dim(p32) == 8 * 24


def _word(rng, n):
    return [rng.choice(("a1", "a2", "g1", "g2", "g1^-1", "g2^-1")) for _ in range(n)]


@given(small_params, st.integers(0, 2 ** 32))
def test_associativity(p, seed):
    rng = random.Random(seed)
    u, v, w = (normal_form(p, _word(rng, rng.randint(0, 6))) for _ in range(3))
    assert (u * v) * w == u * (v * w)


@given(small_params, st.integers(0, 2 ** 32))
def test_antipode_antimultiplicative(p, seed):
    rng = random.Random(seed)
    u, v = (normal_form(p, _word(rng, rng.randint(0, 4))) for _ in range(2))
    assert antipode(u * v) == antipode(v) * antipode(u)
