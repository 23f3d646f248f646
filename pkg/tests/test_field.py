import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from a2reps.field import (Cyclo, Extension, Found, OrderNotDividing, Quad, Ring, RingMismatch,
                          cyclotomic_poly, embed_root, field_arith, scalar_from_json, sqrt_exact)
from conftest import cyclo_pairs, cyclos


def test_cyclotomic_polys():
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert len(cyclotomic_poly(24)) - 1 == 8


def test_root_relations():
    w = Cyclo.root(12, 1)
    assert w ** 12 == 1
    assert w ** 6 == -1
    assert w ** 3 * w ** 3 == -1
    assert Cyclo.root(12, 3) ** 2 == -1
    # 1 + w^4 + w^8 = 0 for a primitive cube root
    assert 1 + Cyclo.root(12, 4) + Cyclo.root(12, 8) == 0


@pytest.mark.parametrize("K", [4, 8, 12, 20, 24])
def test_embed_root_orders(K):
    for n in (d for d in range(1, K + 1) if K % d == 0):
        for e in range(n):
            assert embed_root(K, n, e) ** n == 1


def test_embed_root_rejects():
    with pytest.raises(OrderNotDividing):
        embed_root(12, 5, 1)


def test_normalized_denominators():
    x = Cyclo(8, [2, 4, 0, 6], 4)
    assert x.den == 2 and x.num == (1, 2, 0, 3)
    y = Cyclo(8, [1, 0, 0, 0], -3)
    assert y.den == 3 and y.num[0] == -1
    assert Cyclo(8, [0, 0], 7).den == 1


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        Cyclo.one(8) + Cyclo.one(12)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Cyclo.one(8) / Cyclo.zero(8)


def test_sqrt_exact():
    assert sqrt_exact(Cyclo.from_rational(8, Fraction(9, 4))) == Found(Cyclo.from_rational(8, Fraction(3, 2)))
    r = sqrt_exact(Cyclo.from_rational(8, -4))
    assert isinstance(r, Found) and r.value ** 2 == -4
    e = sqrt_exact(Cyclo.from_rational(8, 2))
    assert isinstance(e, Extension) and e.value * e.value == 2


@given(cyclo_pairs(3))
def test_field_laws(xyz):
    x, y, z = xyz
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x:
        assert x * x.inv() == 1
        assert (y / x) * x == y


@given(cyclo_pairs(3))
def test_quad_norm(abd):
    a, b, D = abd
    q = Quad(a, b, D)
    assert q * q.conjugate() == Quad.lift(a * a - b * b * D, D)
    if q.norm():
        assert q * q.inv() == 1


@given(cyclos())
def test_json_roundtrip(x):
    back = scalar_from_json(json.loads(json.dumps(x.to_json())))
    assert back == x and back.den == x.den and back.num == x.num


@given(cyclo_pairs(3))
def test_quad_json_roundtrip(abd):
    q = Quad(*abd)
    assert scalar_from_json(json.loads(json.dumps(q.to_json()))) == q


def test_json_uses_strings():
    big = Cyclo.from_rational(4, 10 ** 40 + 1)
    obj = big.to_json()
    assert obj["K"] == 4
    assert all(isinstance(v, str) for pair in obj["c"] for v in pair)
    assert scalar_from_json(obj) == big


@given(cyclos(), st.integers(0, 6))
def test_arith_dispatch(x, e):
    assert field_arith("pow", x, e) == x ** e
    assert field_arith("eq", field_arith("add", x, x), 2 * x)
    with pytest.raises(ValueError):
        field_arith("frobnicate", x, x)


def test_ring_lift_and_join():
    D = Cyclo.from_rational(8, 2)
    R, Rq = Ring(8), Ring(8, D)
    assert R.join(Rq) == Rq
    assert Rq(3) == Quad.lift(Cyclo.from_rational(8, 3), D)
    with pytest.raises(RingMismatch):
        Ring(8, D).join(Ring(8, Cyclo.from_rational(8, 3)))
    with pytest.raises(RingMismatch):
        R(Quad(Cyclo.zero(8), Cyclo.one(8), D))
