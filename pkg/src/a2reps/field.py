"""Exact arithmetic in cyclotomic fields Q(w_K) and quadratic extensions of them.

Elements of Q(w_K) are stored as an integer numerator vector in the power
basis 1, w, ..., w^(phi(K)-1) together with a positive common denominator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union


class FieldError(Exception):
    pass


class RingMismatch(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class ZeroDivisor(FieldError, ZeroDivisionError):
    """Raised when inverting a nonzero quadratic element of norm zero."""


class OrderNotDividing(FieldError):
    pass


class Singular(FieldError):
    pass


# -- cyclotomic polynomials -------------------------------------------------

def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_exact_div(p, q):
    # q is monic with integer coefficients
    p = list(p)
    dq = len(q) - 1
    quot = [0] * (len(p) - dq)
    for k in range(len(p) - 1, dq - 1, -1):
        c = p[k]
        if c:
            quot[k - dq] = c
            for j in range(dq + 1):
                p[k - dq + j] -= c * q[j]
    if any(p[:dq]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, cyclotomic_poly(d))
    return tuple(_poly_exact_div(num, den))


class _Tables:
    """Reduction data for one K, built once."""

    def __init__(self, K: int):
        self.K = K
        self.phi_poly = cyclotomic_poly(K)
        self.deg = len(self.phi_poly) - 1
        n = self.deg
        # powers[e] = w^e in the power basis for 0 <= e < max(K, 2n - 1)
        top = max(K, 2 * n - 1)
        powers = []
        cur = [1] + [0] * (n - 1)
        for _ in range(top):
            powers.append(tuple(cur))
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for j in range(n):
                    cur[j] -= lead * self.phi_poly[j]
        self.powers = powers
        self.units = [k for k in range(2, K) if math.gcd(k, K) == 1]


@lru_cache(maxsize=None)
def _tables(K: int) -> _Tables:
    return _Tables(K)


def _normalize(num, den):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                break
    if not any(num):
        return tuple(0 for _ in num), 1
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


Number = Union[int, Fraction]


class Cyclo:
    """Element of the cyclotomic field Q(w_K), with w a primitive K-th root of 1."""

    __slots__ = ("K", "num", "den", "_hash")

    def __init__(self, K: int, num, den: int = 1, _raw: bool = False):
        self.K = K
        if _raw:
            self.num, self.den = num, den
        else:
            n = _tables(K).deg
            num = list(num)
            if len(num) > n:
                num = _reduce(K, num)
            elif len(num) < n:
                num = num + [0] * (n - len(num))
            self.num, self.den = _normalize(num, den)
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, K: int) -> "Cyclo":
        return cls(K, [0], 1)

    @classmethod
    def one(cls, K: int) -> "Cyclo":
        return cls(K, [1], 1)

    @classmethod
    def from_rational(cls, K: int, q) -> "Cyclo":
        q = Fraction(q)
        return cls(K, [q.numerator], q.denominator)

    @classmethod
    def root(cls, K: int, e: int) -> "Cyclo":
        """w^e."""
        t = _tables(K)
        return cls(K, t.powers[e % K], 1, _raw=True)

    # predicates
    def __bool__(self):
        return self.den != 1 or any(self.num)

    def is_zero(self) -> bool:
        return not self.__bool__()

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return Fraction(self.num[0], self.den)

    @property
    def ring(self):
        return (self.K, None)

    # coercion
    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.K != self.K:
                raise RingMismatch(f"K={self.K} vs K={other.K}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_rational(self.K, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        if self.den == o.den:
            return Cyclo(self.K, [a + b for a, b in zip(self.num, o.num)], self.den)
        return Cyclo(self.K, [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
                     self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.K, tuple(-a for a in self.num), self.den, _raw=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self or not o:
            return Cyclo.zero(self.K)
        if o.is_rational():
            c = o.num[0]
            return Cyclo(self.K, [a * c for a in self.num], self.den * o.den)
        if self.is_rational():
            c = self.num[0]
            return Cyclo(self.K, [a * c for a in o.num], self.den * o.den)
        prod = [0] * (2 * len(self.num) - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(o.num):
                    if b:
                        prod[i + j] += a * b
        return Cyclo(self.K, _reduce(self.K, prod), self.den * o.den)

    __rmul__ = __mul__

    def conj(self, k: int) -> "Cyclo":
        """Galois image under w -> w^k."""
        t = _tables(self.K)
        out = [0] * t.deg
        for e, a in enumerate(self.num):
            if a:
                for j, b in enumerate(t.powers[(e * k) % self.K]):
                    if b:
                        out[j] += a * b
        return Cyclo(self.K, out, self.den)

    def inv(self) -> "Cyclo":
        if not self:
            raise DivisionByZero("inverse of zero")
        return _cyclo_inv(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = Cyclo.one(self.K)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.K == other.K and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        if isinstance(other, Quad):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.K, self.num, self.den))
        return self._hash

    def coeffs(self) -> list:
        return [Fraction(a, self.den) for a in self.num]

    def __repr__(self):
        return f"Cyclo({self.K}, {self})"

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs()):
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mono = "w" if e == 1 else f"w^{e}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"K": self.K, "c": [[str(c.numerator), str(c.denominator)] for c in self.coeffs()]}

    @classmethod
    def from_json(cls, obj) -> "Cyclo":
        K = int(obj["K"])
        cs = [Fraction(int(n), int(d)) for n, d in obj["c"]]
        den = 1
        for c in cs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return cls(K, [int(c * den) for c in cs], den)


def _reduce(K, coeffs):
    t = _tables(K)
    n = t.deg
    out = list(coeffs[:n]) + [0] * max(0, n - len(coeffs))
    for e in range(n, len(coeffs)):
        a = coeffs[e]
        if a:
            for j, b in enumerate(t.powers[e]):
                if b:
                    out[j] += a * b
    return out


@lru_cache(maxsize=4096)
def _cyclo_inv(x: Cyclo) -> Cyclo:
    if x.is_rational():
        q = Fraction(x.den, x.num[0])
        return Cyclo.from_rational(x.K, q)
    # x * prod of the other conjugates is the (rational) norm
    t = _tables(x.K)
    other = Cyclo.one(x.K)
    for k in t.units:
        other = other * x.conj(k)
    norm = x * other
    assert norm.is_rational()
    return other * Fraction(norm.den, norm.num[0])


class Quad:
    """a + b*t with t^2 = D, all of a, b, D in one cyclotomic field."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a: Cyclo, b: Cyclo, D: Cyclo):
        if not (a.K == b.K == D.K):
            raise RingMismatch("quadratic components must share K")
        self.a, self.b, self.D = a, b, D

    @property
    def K(self):
        return self.a.K

    @property
    def ring(self):
        return (self.a.K, self.D)

    @classmethod
    def lift(cls, x, D: Cyclo) -> "Quad":
        if isinstance(x, Quad):
            if x.D != D:
                raise RingMismatch("different discriminants")
            return x
        if isinstance(x, Cyclo):
            return cls(x, Cyclo.zero(x.K), D)
        return cls(Cyclo.from_rational(D.K, x), Cyclo.zero(D.K), D)

    def _coerce(self, other):
        if isinstance(other, Quad):
            if other.D != self.D:
                raise RingMismatch("different discriminants")
            return other
        if isinstance(other, (Cyclo, int, Fraction)):
            if isinstance(other, Cyclo) and other.K != self.K:
                raise RingMismatch(f"K={self.K} vs K={other.K}")
            return Quad.lift(other, self.D)
        return NotImplemented

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_zero(self):
        return not self.__bool__()

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Quad(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Quad(self.a - o.a, self.b - o.b, self.D)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a = self.a * o.a
        if self.b and o.b:
            a = a + self.b * o.b * self.D
        b = self.a * o.b + self.b * o.a
        return Quad(a, b, self.D)

    __rmul__ = __mul__

    def norm(self) -> Cyclo:
        return self.a * self.a - self.b * self.b * self.D

    def conjugate(self) -> "Quad":
        return Quad(self.a, -self.b, self.D)

    def inv(self) -> "Quad":
        if not self:
            raise DivisionByZero("inverse of zero")
        n = self.norm()
        if not n:
            raise ZeroDivisor("norm vanishes; the discriminant is a square")
        ni = n.inv()
        return Quad(self.a * ni, -self.b * ni, self.D)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = Quad.lift(1, self.D)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Quad):
            return self.D == other.D and self.a == other.a and self.b == other.b
        if isinstance(other, (Cyclo, int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __repr__(self):
        return f"Quad({self.a}, {self.b}, D={self.D})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        return f"({self.a}) + ({self.b})*sqrt({self.D})"

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json(), "D": self.D.to_json()}

    @classmethod
    def from_json(cls, obj) -> "Quad":
        return cls(Cyclo.from_json(obj["a"]), Cyclo.from_json(obj["b"]), Cyclo.from_json(obj["D"]))


Scalar = Union[Cyclo, Quad]


@dataclass(frozen=True)
class Ring:
    """Scalar ring tag: Q(w_K), or Q(w_K)[t]/(t^2 - D) when D is set."""

    K: int
    D: Cyclo | None = None

    def __call__(self, x) -> Scalar:
        if self.D is None:
            if isinstance(x, Cyclo):
                if x.K != self.K:
                    raise RingMismatch(f"K={x.K} in ring K={self.K}")
                return x
            if isinstance(x, Quad):
                if x.b:
                    raise RingMismatch("quadratic element in base ring")
                return self(x.a)
            return Cyclo.from_rational(self.K, x)
        return Quad.lift(x, self.D)

    def zero(self) -> Scalar:
        return self(0)

    def one(self) -> Scalar:
        return self(1)

    def root(self, e: int) -> Scalar:
        return self(Cyclo.root(self.K, e))

    def to_json(self) -> dict:
        return {"K": self.K, "D": None if self.D is None else self.D.to_json()}

    @classmethod
    def from_json(cls, obj) -> "Ring":
        D = obj.get("D")
        return cls(int(obj["K"]), None if D is None else Cyclo.from_json(D))

    def join(self, other: "Ring") -> "Ring":
        if self.K != other.K:
            raise RingMismatch(f"K={self.K} vs K={other.K}")
        if self.D is None:
            return other
        if other.D is None or other.D == self.D:
            return self
        raise RingMismatch("different discriminants")


def ring_of(x) -> Ring:
    if isinstance(x, Quad):
        return Ring(x.K, x.D)
    return Ring(x.K)


def scalar_to_json(x):
    return x.to_json()


def scalar_from_json(obj):
    if "D" in obj and "a" in obj:
        return Quad.from_json(obj)
    return Cyclo.from_json(obj)


def field_arith(op: str, x, y=None):
    """Dispatcher over add|sub|mul|inv|pow|eq."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inv()
    if op == "pow":
        return x ** int(y)
    if op == "eq":
        return x == y
    raise ValueError(f"unknown op {op!r}")


def embed_root(K: int, n: int, e: int) -> Cyclo:
    """The n-th root of unity w^(K/n) raised to e, inside Q(w_K)."""
    if K % n:
        raise OrderNotDividing(f"{n} does not divide {K}")
    return Cyclo.root(K, (K // n) * e)


@dataclass(frozen=True)
class Found:
    value: Scalar


@dataclass(frozen=True)
class Extension:
    value: Quad


def _isqrt_exact(n: int):
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_exact(x: Cyclo):
    """Square root of x when it is visibly in Q(w_K), else t with t^2 = x."""
    K = x.K
    if not x:
        return Found(Cyclo.zero(K))
    if x.is_rational():
        q = x.to_rational()
        sign = 1 if q > 0 else -1
        p, r = _isqrt_exact(sign * q.numerator), _isqrt_exact(q.denominator)
        if p is not None and r is not None:
            root = Cyclo.from_rational(K, Fraction(p, r))
            if sign < 0:
                root = root * Cyclo.root(K, K // 4)
            return Found(root)
    return Extension(Quad(Cyclo.zero(K), Cyclo.one(K), x))
