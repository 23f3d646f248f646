"""Modules over H_lambda as explicit generator matrices, and the module catalog."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .field import Cyclo, Quad, Ring, RingMismatch, ring_of
from .hopf import (O1, O2H, O2V, O4, Character, Params, alpha, classify_character,
                   quadratic_residual, solve_d)
from .matrix import Matrix, block_diag


class WrongStratum(ValueError):
    pass


class BadD(ValueError):
    pass


class BadParam(ValueError):
    pass


class NotDiagonalizable(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Rep:
    g1: Matrix
    g2: Matrix
    a1: Matrix
    a2: Matrix
    ring: Ring
    label: str = ""
    weights: tuple | None = None  # one Character per basis vector when g1, g2 are diagonal

    @property
    def dim(self) -> int:
        return self.g1.nrows

    def mats(self):
        return (self.g1, self.g2, self.a1, self.a2)

    def relabel(self, label: str) -> "Rep":
        return Rep(self.g1, self.g2, self.a1, self.a2, self.ring, label, self.weights)

    def over(self, ring: Ring) -> "Rep":
        if ring == self.ring:
            return self
        return Rep(*(m.over(ring) for m in self.mats()), ring, self.label, self.weights)

    def change_basis(self, T: Matrix, weights=None) -> "Rep":
        """Matrices in the basis given by the columns of T."""
        Ti = T.inverse()
        return Rep(*(Ti @ m @ T for m in self.mats()), self.ring, self.label, weights)

    def restrict(self, basis: list, weights=None, label: str = "") -> "Rep":
        """Action on an invariant subspace spanned by the given column vectors."""
        B = Matrix.from_columns(basis, self.ring)
        mats = []
        for m in self.mats():
            mats.append(B.solve(m @ B))
        return Rep(*mats, self.ring, label or self.label, weights)

    def to_json(self) -> dict:
        return {"dim": self.dim, "label": self.label, "ring": self.ring.to_json(),
                "g1": self.g1.to_json(), "g2": self.g2.to_json(),
                "a1": self.a1.to_json(), "a2": self.a2.to_json()}

    @classmethod
    def from_json(cls, obj) -> "Rep":
        ring = Ring.from_json(obj["ring"])
        mats = [Matrix.from_json(obj[k], ring) for k in ("g1", "g2", "a1", "a2")]
        if any(m.shape != (obj["dim"], obj["dim"]) for m in mats):
            raise ValueError("matrix shape does not match dim")
        return cls(*mats, ring, obj.get("label", ""))


# -- verification ------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    relation: str
    residual: Matrix

    def __bool__(self):
        return False

    def __str__(self):
        return f"violated: {self.relation}"


class Ok:
    def __bool__(self):
        return True

    def __str__(self):
        return "ok"

    def __repr__(self):
        return "Ok()"


OK = Ok()


def relation_residuals(p: Params, R: Rep):
    """Yield (name, residual) for every defining relation, in a fixed order."""
    ring = R.ring
    n = R.dim
    I = Matrix.identity(n, ring)
    g1, g2, a1, a2 = R.mats()
    l1, l2, l3 = (ring(x) for x in p.lam)
    yield "g1 g2 = g2 g1", g1 @ g2 - g2 @ g1
    yield "g1^(2N) = 1", g1 ** (2 * p.N) - I
    yield "g2^(2M) = 1", g2 ** (2 * p.M) - I
    yield "g1 a1 = -a1 g1", g1 @ a1 + a1 @ g1
    yield "g1 a2 = -a2 g1", g1 @ a2 + a2 @ g1
    yield "g2 a1 = a1 g2", g2 @ a1 - a1 @ g2
    yield "g2 a2 = -a2 g2", g2 @ a2 + a2 @ g2
    G1, G2 = g1 @ g1, g2 @ g2
    yield "a1^2 = l1 (1 - g1^2)", a1 @ a1 - (I - G1).scale(l1)
    yield "a2^2 = l2 (1 - g2^2)", a2 @ a2 - (I - G2).scale(l2)
    a12, a21 = a1 @ a2, a2 @ a1
    lhs = a12 @ a12 + a21 @ a21
    rhs = (I - G1 @ G2).scale(l3) - ((I + G2) @ (I - G1)).scale(2 * l1 * l2)
    yield "a1a2a1a2 + a2a1a2a1 = l3 (1 - g1^2 g2^2) - 2 l1 l2 (1 + g2^2)(1 - g1^2)", lhs - rhs


def verify_rep(p: Params, R: Rep):
    """Ok() when every relation holds exactly, else the first Violation."""
    if p.K != R.ring.K:
        raise RingMismatch("representation and parameters use different K")
    for name, res in relation_residuals(p, R):
        if not res.is_zero():
            return Violation(name, res)
    return OK


# -- construction helpers ----------------------------------------------------

def _weights_mats(p: Params, weights, ring: Ring):
    g1 = Matrix.diag([p.zeta_pow(w.i) for w in weights], ring)
    g2 = Matrix.diag([p.xi_pow(w.j) for w in weights], ring)
    return g1, g2


def from_arrows(p: Params, weights, arrows1, arrows2, label: str, ring: Ring | None = None) -> Rep:
    """Rep on a weight basis; arrows are (src, dst, coeff) meaning a.e_src = coeff e_dst."""
    ring = ring or p.ring
    n = len(weights)
    g1, g2 = _weights_mats(p, weights, ring)
    a = []
    for arrows in (arrows1, arrows2):
        m = Matrix.zeros(n, n, ring)
        for src, dst, c in arrows:
            m.rows[dst][src] = m.rows[dst][src] + ring(c)
        a.append(m)
    return Rep(g1, g2, a[0], a[1], ring, label, tuple(weights))


def _pos(chi: Character, name: str) -> Character:
    return {"X": chi, "Xb": chi.bar(), "nX": chi.neg(), "nXb": chi.negbar()}[name]


def _diagram(p: Params, chi: Character, verts, h, v, label: str) -> Rep:
    idx = {name: k for k, name in enumerate(verts)}
    weights = [_pos(chi, name) for name in verts]
    a1 = [(idx[s], idx[t], c) for s, t, c in h]
    a2 = [(idx[s], idx[t], c) for s, t, c in v]
    return from_arrows(p, weights, a1, a2, label)


def _fmt(x) -> str:
    s = str(x)
    return s.replace(" ", "")


def spec_label(kind: str, chi: Character, extra: str = "") -> str:
    return f"{kind}:{chi}" + (f":{extra}" if extra else "")


def _require(p: Params, chi: Character, allowed, what: str):
    s = classify_character(p, chi)
    if s not in allowed:
        raise WrongStratum(f"{what} needs {'/'.join(allowed)}, character {chi} is {s}")
    return s


# -- simple modules -----------------------------------------------------------

def build_simple(p: Params, kind: str, chi: Character, d=None) -> Rep:
    a1, a2, a3 = alpha(p, chi)
    if kind == "L1":
        _require(p, chi, (O1,), "L1")
        return from_arrows(p, [chi], [], [], spec_label("L1", chi))
    if kind == "L2h":
        _require(p, chi, (O2H,), "L2h")
        return from_arrows(p, [chi, chi.bar()], [(0, 1, 1), (1, 0, a1)], [], spec_label("L2h", chi))
    if kind == "L2v":
        _require(p, chi, (O2V,), "L2v")
        return from_arrows(p, [chi, chi.neg()], [], [(0, 1, 1), (1, 0, a2)], spec_label("L2v", chi))
    if kind == "L4":
        _require(p, chi, (O4,), "L4")
        if d is None:
            d = solve_d(p, chi)[0][0]
        if quadratic_residual(p, chi, d):
            raise BadD(f"d = {d} is not a root of the quadratic at {chi}")
        return build_l4_unchecked(p, chi, d)
    raise ValueError(f"unknown simple kind {kind!r}")


def build_l4_unchecked(p: Params, chi: Character, d) -> Rep:
    """The L4 matrices for any d (the module relations only hold at roots)."""
    a1, a2, a3 = alpha(p, chi)
    ring = ring_of(d) if isinstance(d, Quad) else p.ring
    d = ring(d)
    c = ring(a3) - ring(a1 * a1 * a2) * d
    weights = [chi, chi.bar(), chi.negbar(), chi.neg()]
    h = [(0, 1, 1), (1, 0, a1), (2, 3, 1), (3, 2, a1)]
    v = [(1, 2, 1), (2, 1, a2), (0, 3, d), (3, 0, c)]
    return from_arrows(p, weights, h, v, spec_label("L4", chi, "d=" + _fmt(d)), ring)


def build_projective(p: Params, chi: Character, ring: Ring | None = None) -> Rep:
    a1, a2, a3 = alpha(p, chi)
    weights = [chi, chi.bar(), chi.neg(), chi.negbar(), chi.negbar(), chi.neg(), chi.bar(), chi]
    # (row, col) entries of [a1], [a2] with 0-based indices
    A1 = {(0, 1): a1, (1, 0): 1, (2, 3): a1, (3, 2): 1, (4, 5): a1, (5, 4): 1, (6, 7): a1, (7, 6): 1}
    A2 = {(0, 2): a2, (0, 5): a3, (1, 4): a2, (2, 0): 1, (2, 7): a3, (3, 6): a2, (4, 1): 1,
          (5, 7): -a2, (6, 3): 1, (7, 5): -1}
    h = [(c, r, x) for (r, c), x in A1.items() if x]
    v = [(c, r, x) for (r, c), x in A2.items() if x]
    return from_arrows(p, weights, h, v, spec_label("P", chi), ring)


# -- indecomposable families ------------------------------------------------

M3_ARROWS = {
    1: (["X", "Xb", "nXb"], [("Xb", "X", 1)], [("nXb", "Xb", 1)]),
    2: (["X", "Xb", "nXb"], [("Xb", "X", 1)], [("Xb", "nXb", 1)]),
    3: (["X", "Xb", "nX"], [("Xb", "X", 1)], [("nX", "X", 1)]),
    4: (["X", "nX", "nXb"], [("nXb", "nX", 1)], [("nX", "X", 1)]),
}

GRID = ["X", "Xb", "nX", "nXb"]

M4_ARROWS = {
    1: ([("Xb", "X", 1), ("nX", "nXb", 1)], [("nXb", "Xb", 1)]),
    2: ([("nXb", "nX", 1)], [("Xb", "nXb", 1), ("nX", "X", 1)]),
    3: ([("Xb", "X", 1), ("nXb", "nX", 1)], [("Xb", "nXb", 1)]),
    4: ([("Xb", "X", 1)], [("nX", "X", 1), ("nXb", "Xb", 1)]),
    5: ([("nXb", "nX", 1)], [("nX", "X", 1), ("nXb", "Xb", 1)]),
    6: ([("Xb", "X", 1), ("nXb", "nX", 1)], [("nX", "X", 1)]),
    7: ([("Xb", "X", 1)], [("Xb", "nXb", 1), ("nX", "X", 1)]),
    8: ([("Xb", "X", 1), ("nX", "nXb", 1)], [("nX", "X", 1)]),
}

C_KINDS = ("3u", "2", "3b", "1")


def _c_arrows(kind: str, mu):
    if kind == "3u":
        return [("Xb", "X", 1), ("nX", "nXb", 1)], [("nX", "X", mu), ("nXb", "Xb", 1)]
    if kind == "2":
        return [("Xb", "X", 1), ("nXb", "nX", 1)], [("nX", "X", mu), ("nXb", "Xb", 1)]
    if kind == "3b":
        return [("Xb", "X", mu), ("nXb", "nX", 1)], [("Xb", "nXb", 1), ("nX", "X", 1)]
    if kind == "1":
        return [("Xb", "X", 1), ("nX", "nXb", 1)], [("Xb", "nXb", 1), ("nX", "X", mu)]
    raise BadParam(f"unknown C kind {kind!r}; expected one of {C_KINDS}")


def build_indecomposable(p: Params, family: str, chi: Character, **params) -> Rep:
    a1, a2, _ = alpha(p, chi)
    if family in ("M1h", "M1v"):
        _require(p, chi, (O1,), family)
        if family == "M1h":
            return _diagram(p, chi, ["X", "Xb"], [("Xb", "X", 1)], [], spec_label("M1h", chi))
        return _diagram(p, chi, ["X", "nX"], [], [("nX", "X", 1)], spec_label("M1v", chi))
    if family in ("M2h", "M2v"):
        a = p.ring(params.get("a", 1))
        b = p.ring(params.get("b", 0))
        if not a and not b:
            raise BadParam("(a, b) must not both vanish")
        extra = f"a={_fmt(a)},b={_fmt(b)}"
        if family == "M2h":
            _require(p, chi, (O2H,), family)
            h = [("X", "Xb", 1), ("Xb", "X", a1), ("nX", "nXb", 1), ("nXb", "nX", a1)]
            v = [("nX", "X", a), ("nXb", "Xb", b)]
        else:
            _require(p, chi, (O2V,), family)
            h = [("Xb", "X", a), ("nXb", "nX", b)]
            v = [("X", "nX", 1), ("nX", "X", a2), ("Xb", "nXb", 1), ("nXb", "Xb", a2)]
        h = [t for t in h if t[2]]
        v = [t for t in v if t[2]]
        return _diagram(p, chi, GRID, h, v, spec_label(family, chi, extra))
    if family == "M3":
        _require(p, chi, (O1,), "M3")
        i = int(params.get("i", 1))
        if i not in M3_ARROWS:
            raise BadParam("M3 index must be 1..4")
        verts, h, v = M3_ARROWS[i]
        return _diagram(p, chi, verts, h, v, spec_label("M3", chi, f"i={i}"))
    if family == "M4":
        _require(p, chi, (O1,), "M4")
        i = int(params.get("i", 1))
        if i not in M4_ARROWS:
            raise BadParam("M4 index must be 1..8")
        h, v = M4_ARROWS[i]
        return _diagram(p, chi, GRID, h, v, spec_label("M4", chi, f"i={i}"))
    if family == "C":
        _require(p, chi, (O1,), "C")
        kind = str(params.get("kind", "2"))
        mu = p.ring(params.get("mu", 1))
        if not mu:
            raise BadParam("mu must be nonzero")
        h, v = _c_arrows(kind, mu)
        return _diagram(p, chi, GRID, h, v, spec_label("C", chi, f"kind={kind},mu={_fmt(mu)}"))
    if family == "Q":
        _require(p, chi, (O1,), "Q")
        return _build_q(p, chi, int(params.get("n", 1)))
    if family in ("Qh", "Qv"):
        _require(p, chi, (O2H,) if family == "Qh" else (O2V,), family)
        n = int(params.get("n", 2))
        if n < 2 or n % 2:
            raise BadParam(f"{family} is built for even n >= 2 only")
        return _build_qhv(p, chi, n, family)
    raise BadParam(f"unknown family {family!r}")


def _build_q(p: Params, chi: Character, n: int) -> Rep:
    if n < 1:
        raise BadParam("n must be positive")
    k = -(-n // 4)
    weights = []
    a1, a2 = [], []
    for j in range(k):
        b = 4 * j
        weights += [chi, chi.bar(), chi.negbar(), chi.neg()]
        a1 += [(b + 1, b, 1), (b + 3, b + 2, 1)]
        a2 += [(b + 2, b + 1, 1), (b + 3, b + 4, 1)]
    a1 = [t for t in a1 if t[0] < n and t[1] < n]
    a2 = [t for t in a2 if t[0] < n and t[1] < n]
    return from_arrows(p, weights[:n], a1, a2, spec_label("Q", chi, f"n={n}"))


def _build_qhv(p: Params, chi: Character, n: int, family: str) -> Rep:
    al1, al2, _ = alpha(p, chi)
    k = -(-n // 4)
    weights, a1, a2 = [], [], []
    for j in range(k):
        x1, y1, x2, y2 = 4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3
        nxt = 4 * j + 5  # y_{1,j+1}
        if family == "Qh":
            weights += [chi, chi.bar(), chi.neg(), chi.negbar()]
            a1 += [(x1, y1, 1), (y1, x1, al1), (x2, y2, 1), (y2, x2, al1)]
            a2 += [(x2, x1, 1), (y2, nxt, 1)]
        else:
            weights += [chi, chi.neg(), chi.bar(), chi.negbar()]
            a2 += [(x1, y1, 1), (y1, x1, al2), (x2, y2, 1), (y2, x2, al2)]
            a1 += [(x2, x1, 1), (y2, nxt, 1)]
    a1 = [t for t in a1 if t[0] < n and t[1] < n]
    a2 = [t for t in a2 if t[0] < n and t[1] < n]
    return from_arrows(p, weights[:n], a1, a2, spec_label(family, chi, f"n={n}"))


# -- structure ----------------------------------------------------------------

def weights_of(p: Params, R: Rep):
    """Characters of the basis vectors when g1, g2 are diagonal, else None."""
    if R.weights is not None:
        return R.weights
    if not (R.g1.is_diagonal() and R.g2.is_diagonal()):
        return None
    zi = {p.zeta_pow(i): i for i in range(2 * p.N)}
    xj = {p.xi_pow(j): j for j in range(2 * p.M)}
    out = []
    for x, y in zip(R.g1.diagonal(), R.g2.diagonal()):
        x = _base(x)
        y = _base(y)
        if x not in zi or y not in xj:
            return None
        out.append(p.chi(zi[x], xj[y]))
    return tuple(out)


def _base(x):
    if isinstance(x, Quad):
        return x.a if not x.b else x
    return x


def isotypic_decompose(p: Params, R: Rep) -> dict:
    """Character -> basis (column vectors) of the simultaneous eigenspace."""
    w = weights_of(p, R)
    ring = R.ring
    n = R.dim
    out = {}
    if w is not None:
        for k, chi in enumerate(w):
            e = [ring.zero()] * n
            e[k] = ring.one()
            out.setdefault(chi, []).append(e)
        return dict(sorted(out.items()))
    I = Matrix.identity(n, ring)
    total = 0
    for chi in p.characters():
        A = R.g1 - I.scale(p.zeta_pow(chi.i))
        B = R.g2 - I.scale(p.xi_pow(chi.j))
        ker = Matrix(A.rows + B.rows, ring, _raw=True).kernel()
        if ker:
            out[chi] = ker
            total += len(ker)
    if total != n:
        raise NotDiagonalizable("group action is not diagonalizable over the roots of unity")
    return out


def to_weight_basis(p: Params, R: Rep):
    """(R', T) with R' = T^-1 R T on a basis of weight vectors."""
    w = weights_of(p, R)
    if w is not None:
        return (R if R.weights is not None else Rep(*R.mats(), R.ring, R.label, w)), \
            Matrix.identity(R.dim, R.ring)
    iso = isotypic_decompose(p, R)
    cols, weights = [], []
    for chi, vecs in iso.items():
        cols += vecs
        weights += [chi] * len(vecs)
    T = Matrix.from_columns(cols, R.ring)
    return R.change_basis(T, tuple(weights)), T


def direct_sum(R: Rep, S: Rep, label: str | None = None) -> Rep:
    ring = R.ring.join(S.ring)
    R, S = R.over(ring), S.over(ring)
    mats = [block_diag([x, y], ring) for x, y in zip(R.mats(), S.mats())]
    w = R.weights + S.weights if R.weights is not None and S.weights is not None else None
    return Rep(*mats, ring, label if label is not None else f"({R.label}) + ({S.label})", w)


def direct_sum_all(reps, label: str = "") -> Rep:
    out = reps[0]
    for r in reps[1:]:
        out = direct_sum(out, r)
    return out.relabel(label) if label else out


def tensor(p: Params, R: Rep, S: Rep) -> Rep:
    """Delta(g) = g (x) g, Delta(a_k) = a_k (x) 1 + g_k (x) a_k; Kronecker basis order."""
    ring = R.ring.join(S.ring)
    R, S = R.over(ring), S.over(ring)
    IS = Matrix.identity(S.dim, ring)
    g1 = R.g1.kron(S.g1)
    g2 = R.g2.kron(S.g2)
    a1 = R.a1.kron(IS) + R.g1.kron(S.a1)
    a2 = R.a2.kron(IS) + R.g2.kron(S.a2)
    w = None
    if R.weights is not None and S.weights is not None:
        w = tuple(x * y for x in R.weights for y in S.weights)
    return Rep(g1, g2, a1, a2, ring, f"({R.label}) x ({S.label})", w)


def dual(p: Params, R: Rep) -> Rep:
    """S(g) = g^-1, S(a_k) = -g_k^-1 a_k acting on the dual basis."""
    g1i, g2i = R.g1.inverse(), R.g2.inverse()
    a1 = -(g1i @ R.a1).T
    a2 = -(g2i @ R.a2).T
    w = tuple(x.inverse() for x in R.weights) if R.weights is not None else None
    return Rep(g1i.T, g2i.T, a1, a2, R.ring, f"({R.label})*", w)


def zero_rep(ring: Ring) -> Rep:
    z = Matrix.zeros(0, 0, ring)
    return Rep(z, z, z, z, ring, "0", ())
