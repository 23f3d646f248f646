"""Parameters, characters, the alpha scalars and a PBW normal form for H_lambda.

Relations (group elements g1, g2 of orders 2N, 2M):
    g1 a1 = -a1 g1,  g1 a2 = -a2 g1,  g2 a1 = a1 g2,  g2 a2 = -a2 g2,
    a1^2 = l1 (1 - g1^2),  a2^2 = l2 (1 - g2^2),
    a1a2a1a2 + a2a1a2a1 = l3 (1 - g1^2 g2^2) - 2 l1 l2 (1 + g2^2)(1 - g1^2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from .field import Cyclo, Extension, Found, Quad, Ring, embed_root, sqrt_exact


class ParamError(ValueError):
    pass


class NotInO4(ValueError):
    pass


def _lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


@dataclass(frozen=True)
class Params:
    N: int
    M: int
    lam: tuple  # three Cyclo
    K: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "K", _lcm(2 * self.N, 2 * self.M, 4))

    @classmethod
    def make(cls, N: int, M: int, lam=(0, 0, 0), allow_small: bool = False) -> "Params":
        if N < 1 or M < 1:
            raise ParamError("N and M must be positive")
        if (N < 2 or M < 2) and not allow_small:
            raise ParamError("N, M >= 2 required (pass allow_small to override)")
        K = _lcm(2 * N, 2 * M, 4)
        ls = []
        for x in lam:
            if isinstance(x, Cyclo):
                if x.K != K:
                    if x.is_rational():
                        x = Cyclo.from_rational(K, x.to_rational())
                    else:
                        raise ParamError(f"lambda lives in K={x.K}, expected K={K}")
                ls.append(x)
            else:
                ls.append(Cyclo.from_rational(K, x))
        if len(ls) != 3:
            raise ParamError("lambda needs three entries")
        # a generator of order 2 has a1^2 = 0 forced
        if N == 1:
            ls[0] = Cyclo.zero(K)
        if M == 1:
            ls[1] = Cyclo.zero(K)
        return cls(N, M, tuple(ls))

    @property
    def ring(self) -> Ring:
        return Ring(self.K)

    @property
    def zeta(self) -> Cyclo:
        return embed_root(self.K, 2 * self.N, 1)

    @property
    def xi(self) -> Cyclo:
        return embed_root(self.K, 2 * self.M, 1)

    def zeta_pow(self, e: int) -> Cyclo:
        return embed_root(self.K, 2 * self.N, e % (2 * self.N))

    def xi_pow(self, e: int) -> Cyclo:
        return embed_root(self.K, 2 * self.M, e % (2 * self.M))

    def characters(self) -> list:
        return [Character(i, j, self.N, self.M) for i in range(2 * self.N) for j in range(2 * self.M)]

    def chi(self, i: int, j: int) -> "Character":
        return Character(i, j, self.N, self.M)

    def to_json(self) -> dict:
        return {"N": self.N, "M": self.M, "lambda": [x.to_json() for x in self.lam]}

    @classmethod
    def from_json(cls, obj, allow_small: bool = False) -> "Params":
        return cls.make(int(obj["N"]), int(obj["M"]), [Cyclo.from_json(x) for x in obj["lambda"]],
                        allow_small=allow_small)


@dataclass(frozen=True, order=True)
class Character:
    """chi = (zeta^i, xi^j), stored by exponents."""

    i: int
    j: int
    N: int = field(compare=True, repr=False)
    M: int = field(compare=True, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "i", self.i % (2 * self.N))
        object.__setattr__(self, "j", self.j % (2 * self.M))

    def bar(self) -> "Character":
        return Character(self.i + self.N, self.j, self.N, self.M)

    def neg(self) -> "Character":
        return Character(self.i + self.N, self.j + self.M, self.N, self.M)

    def negbar(self) -> "Character":
        return Character(self.i, self.j + self.M, self.N, self.M)

    def __neg__(self):
        return self.neg()

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.i + other.i, self.j + other.j, self.N, self.M)

    def inverse(self) -> "Character":
        return Character(-self.i, -self.j, self.N, self.M)

    def orbit(self) -> tuple:
        return (self, self.bar(), self.negbar(), self.neg())

    def key(self) -> tuple:
        return (self.i, self.j)

    def __str__(self):
        return f"{self.i},{self.j}"

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j}


class AlphaTriple(NamedTuple):
    a1: Cyclo
    a2: Cyclo
    a3: Cyclo


def alpha(p: Params, chi: Character) -> AlphaTriple:
    l1, l2, l3 = p.lam
    z2 = p.zeta_pow(2 * chi.i)
    x2 = p.xi_pow(2 * chi.j)
    a1 = l1 * (1 - z2)
    a2 = l2 * (1 - x2)
    a3 = l3 * (1 - z2 * x2) - 2 * l1 * l2 * (1 + x2) * (1 - z2)
    return AlphaTriple(a1, a2, a3)


O1, O2H, O2V, O4 = "O1", "O2h", "O2v", "O4"


def classify_character(p: Params, chi: Character) -> str:
    a1, a2, a3 = alpha(p, chi)
    if not a1 and not a2 and not a3:
        return O1
    if not a3 and a1 and not a2:
        return O2H
    if not a3 and a2 and not a1:
        return O2V
    return O4


def s_set_member(p: Params, chi: Character) -> bool:
    return p.zeta_pow(2 * chi.i) * p.xi_pow(2 * chi.j) == 1


def orbit_rep(chi: Character) -> Character:
    return min(chi.orbit())


def canonical(kind: str, chi: Character) -> Character:
    """Smallest (i, j) among the characters giving an isomorphic simple of this kind."""
    if kind == "L1":
        return chi
    if kind == "L2h":
        return min(chi, chi.bar())
    if kind == "L2v":
        return min(chi, chi.neg())
    if kind == "L4":
        return min(chi, chi.negbar())
    if kind == "orbit":
        return orbit_rep(chi)
    raise ValueError(kind)


def discriminant(p: Params, chi: Character) -> Cyclo:
    a1, a2, a3 = alpha(p, chi)
    return a3 * a3 - 4 * a1 * a1 * a2 * a2


def sqrt_disc(p: Params, chi: Character):
    """sqrt(D) as a Cyclo when recognized, otherwise as the generator of Q(w_K)[sqrt D]."""
    r = sqrt_exact(discriminant(p, chi))
    return r.value


def ring_for(p: Params, chi: Character) -> Ring:
    """The scalar ring in which the roots of the quadratic for chi live."""
    if classify_character(p, chi) != O4:
        return p.ring
    a1, a2, a3 = alpha(p, chi)
    if not (a1 * a1 * a2) or not a3:
        return p.ring
    r = sqrt_exact(discriminant(p, chi))
    if isinstance(r, Extension):
        return Ring(p.K, r.value.D)
    return p.ring


def theta_pm(p: Params, chi: Character):
    a3 = alpha(p, chi).a3
    s = sqrt_disc(p, chi)
    return ((-a3 + s) * _half(p), (-a3 - s) * _half(p))


def _half(p):
    return Cyclo.from_rational(p.K, 1) / 2


def solve_d(p: Params, chi: Character) -> list:
    """All (d, c) with a1^2 a2 d^2 - a3 d + a2 = 0 and c = a3 - a1^2 a2 d."""
    if classify_character(p, chi) != O4:
        raise NotInO4(f"character {chi} is not in O4")
    a1, a2, a3 = alpha(p, chi)
    lead = a1 * a1 * a2
    if not lead:
        d = a2 / a3
        return [(d, a3 - lead * d)]
    if not a3:
        i = Cyclo.root(p.K, p.K // 4)
        ds = [i / a1, -i / a1]
    else:
        D = a3 * a3 - 4 * lead * a2
        if not D:
            ds = [a3 / (2 * lead)]
        else:
            s = sqrt_exact(D).value
            ds = [(a3 + s) / (2 * lead), (a3 - s) / (2 * lead)]
    return [(d, a3 - lead * d) for d in ds]


def quadratic_residual(p: Params, chi: Character, d):
    a1, a2, a3 = alpha(p, chi)
    return a1 * a1 * a2 * d * d - a3 * d + a2


# -- PBW normal form ---------------------------------------------------------

PBW_WORDS = ((), (1,), (2,), (1, 2), (2, 1), (1, 2, 1), (2, 1, 2), (2, 1, 2, 1))


@lru_cache(maxsize=None)
def _reduce_word(p: Params, word: tuple) -> tuple:
    """Normal form of an a-word as ((pbw_word, r, s, coeff), ...).

    Only even group powers appear, and those commute with a1, a2.
    """
    if word in PBW_WORDS:
        return ((word, 0, 0, Cyclo.one(p.K)),)
    l1, l2, l3 = p.lam
    n = len(word)
    repl = None
    for k in range(n - 1):
        if word[k] == word[k + 1]:
            lk = l1 if word[k] == 1 else l2
            g = (2, 0) if word[k] == 1 else (0, 2)
            repl = (k, 2, [((), 0, 0, lk), ((), g[0], g[1], -lk)])
            break
    if repl is None:
        for k in range(n - 3):
            if word[k:k + 4] == (1, 2, 1, 2):
                c = 2 * l1 * l2
                repl = (k, 4, [((2, 1, 2, 1), 0, 0, Cyclo.from_rational(p.K, -1)),
                               ((), 0, 0, l3 - c), ((), 2, 2, c - l3),
                               ((), 2, 0, c), ((), 0, 2, -c)])
                break
    if repl is None:
        raise AssertionError(f"irreducible word outside PBW basis: {word}")
    k, length, terms = repl
    pre, post = word[:k], word[k + length:]
    acc = {}
    for mid, r, s, c in terms:
        if not c:
            continue
        for w, r2, s2, c2 in _reduce_word(p, pre + mid + post):
            key = (w, (r + r2) % (2 * p.N), (s + s2) % (2 * p.M))
            acc[key] = acc.get(key, 0) + c * c2
    return tuple((w, r, s, c) for (w, r, s), c in sorted(acc.items()) if c)


def _sign_past(word, r, s):
    """Sign from moving g1^r g2^s from the left of `word` to its right."""
    e = 0
    for k in word:
        e += r if k == 1 else r + s
    return -1 if e % 2 else 1


class AlgebraElem:
    """Finite combination of basis elements b * g1^r g2^s, b a PBW word."""

    __slots__ = ("p", "terms")

    def __init__(self, p: Params, terms=None):
        self.p = p
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def one(cls, p: Params) -> "AlgebraElem":
        return cls(p, {((), 0, 0): Cyclo.one(p.K)})

    @classmethod
    def basis_elem(cls, p: Params, word: tuple, r: int = 0, s: int = 0) -> "AlgebraElem":
        return cls(p, {(tuple(word), r % (2 * p.N), s % (2 * p.M)): Cyclo.one(p.K)})

    def __add__(self, other: "AlgebraElem") -> "AlgebraElem":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElem(self.p, out)

    def __neg__(self):
        return AlgebraElem(self.p, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AlgebraElem":
        return AlgebraElem(self.p, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElem):
            return self.scale(other)
        p = self.p
        out = {}
        for (w1, r1, s1), c1 in self.terms.items():
            for (w2, r2, s2), c2 in other.terms.items():
                sign = _sign_past(w2, r1, s1)
                for w, r, s, c in _reduce_word(p, w1 + w2):
                    key = (w, (r + r1 + r2) % (2 * p.N), (s + s1 + s2) % (2 * p.M))
                    out[key] = out.get(key, 0) + c1 * c2 * c * sign
        return AlgebraElem(p, out)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (w, r, s), c in sorted(self.terms.items()):
            word = "".join(f"x{k}" for k in w) or "1"
            parts.append(f"({c})*{word}*g1^{r}*g2^{s}")
        return " + ".join(parts)


_LETTERS = {"a1", "a2", "g1", "g2", "g1^-1", "g2^-1"}


def letter(p: Params, name: str) -> AlgebraElem:
    if name == "a1":
        return AlgebraElem.basis_elem(p, (1,))
    if name == "a2":
        return AlgebraElem.basis_elem(p, (2,))
    if name == "g1":
        return AlgebraElem.basis_elem(p, (), 1, 0)
    if name == "g2":
        return AlgebraElem.basis_elem(p, (), 0, 1)
    if name == "g1^-1":
        return AlgebraElem.basis_elem(p, (), -1, 0)
    if name == "g2^-1":
        return AlgebraElem.basis_elem(p, (), 0, -1)
    raise ValueError(f"unknown letter {name!r}")


def normal_form(p: Params, word, scalar=1) -> AlgebraElem:
    """Expand a product of generators in the PBW basis times group elements."""
    out = AlgebraElem.one(p).scale(Cyclo.from_rational(p.K, 1) * scalar
                                   if not isinstance(scalar, Cyclo) else scalar)
    for name in word:
        out = out * letter(p, name)
    return out


def antipode(x: AlgebraElem) -> AlgebraElem:
    """S(g) = g^-1, S(a_k) = -g_k^-1 a_k, extended as an anti-homomorphism."""
    p = x.p
    out = AlgebraElem(p)
    for (w, r, s), c in x.terms.items():
        term = AlgebraElem.basis_elem(p, (), -r, -s)
        for k in reversed(w):
            g = (-1, 0) if k == 1 else (0, -1)
            term = term * AlgebraElem.basis_elem(p, (), *g) * AlgebraElem.basis_elem(p, (k,)).scale(
                Cyclo.from_rational(p.K, -1))
        out = out + term.scale(c)
    return out


def algebra_dim(p: Params) -> int:
    return len(PBW_WORDS) * 4 * p.N * p.M
