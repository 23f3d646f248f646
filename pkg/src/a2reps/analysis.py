"""Hom spaces, isomorphism tests, endomorphism certificates and decompositions."""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .catalog import (C_KINDS, Rep, build_indecomposable, build_projective, build_simple,
                      direct_sum_all, to_weight_basis, weights_of, zero_rep)
from .field import Found, Quad, Ring, RingMismatch, sqrt_exact
from .hopf import (O1, O2H, O2V, O4, Character, Params, alpha, canonical, classify_character,
                   discriminant, orbit_rep, ring_for, solve_d)
from .matrix import Matrix, Singular, block_diag, span_basis


class SplitFailed(RuntimeError):
    pass


# -- sparse linear algebra ---------------------------------------------------

def sparse_kernel(rows, nvars: int, ring: Ring) -> list:
    """Kernel of a system given as dicts {var: coeff}; returns dense vectors."""
    piv: dict = {}
    for row in rows:
        r = {v: c for v, c in row.items() if c}
        for v in [v for v in r if v in piv]:
            c = r.get(v)
            if not c:
                continue
            for w, x in piv[v].items():
                y = r.get(w, 0) - c * x
                if y:
                    r[w] = y
                else:
                    r.pop(w, None)
        if not r:
            continue
        v0 = min(r)
        inv = r[v0].inv()
        r = {w: x * inv for w, x in r.items()}
        for u, prow in piv.items():
            c = prow.get(v0)
            if c:
                for w, x in r.items():
                    y = prow.get(w, 0) - c * x
                    if y:
                        prow[w] = y
                    else:
                        prow.pop(w, None)
        piv[v0] = r
    out = []
    zero = ring.zero()
    for f in range(nvars):
        if f in piv:
            continue
        vec = [zero] * nvars
        vec[f] = ring.one()
        for u, prow in piv.items():
            c = prow.get(f)
            if c:
                vec[u] = -c
        out.append(vec)
    return out


def _nz(m: Matrix):
    return [[(j, x) for j, x in enumerate(row) if x] for row in m.rows]


# -- homs ----------------------------------------------------------------------

@dataclass
class HomBasis:
    source: Rep
    target: Rep
    basis: list

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)


def _weighted(p: Params, R: Rep):
    if R.weights is not None:
        return R, None
    Rw, T = to_weight_basis(p, R)
    return Rw, T


def hom_basis(p: Params, R: Rep, S: Rep) -> HomBasis:
    """Basis of the intertwiners R -> S (as dim S x dim R matrices)."""
    ring = R.ring.join(S.ring)
    Rw, TR = _weighted(p, R.over(ring))
    Sw, TS = _weighted(p, S.over(ring))
    wr, ws = Rw.weights, Sw.weights
    var = {}
    for s, x in enumerate(ws):
        for r, y in enumerate(wr):
            if x == y:
                var[(s, r)] = len(var)
    rows = []
    for k in (2, 3):
        Sa = _nz(Sw.mats()[k])
        Ra_cols = [[] for _ in range(Rw.dim)]
        for t, row in enumerate(Rw.mats()[k].rows):
            for r, x in enumerate(row):
                if x:
                    Ra_cols[r].append((t, x))
        for s in range(Sw.dim):
            for r in range(Rw.dim):
                eq = {}
                for t, x in Sa[s]:
                    v = var.get((t, r))
                    if v is not None:
                        eq[v] = eq.get(v, 0) + x
                for t, x in Ra_cols[r]:
                    v = var.get((s, t))
                    if v is not None:
                        eq[v] = eq.get(v, 0) - x
                if eq:
                    rows.append(eq)
    basis = []
    for vec in sparse_kernel(rows, len(var), ring):
        F = Matrix.zeros(Sw.dim, Rw.dim, ring)
        for (s, r), v in var.items():
            F.rows[s][r] = vec[v]
        if TS is not None:
            F = TS @ F
        if TR is not None:
            F = F @ TR.inverse()
        basis.append(F)
    return HomBasis(R, S, basis)


def is_hom(f: Matrix, R: Rep, S: Rep) -> bool:
    return all((f @ x - y @ f).is_zero() for x, y in zip(R.mats(), S.mats()))


def _combo(mats, coeffs, ring: Ring) -> Matrix:
    out = None
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        t = m.scale(ring(c))
        out = t if out is None else out + t
    if out is None:
        return Matrix.zeros(mats[0].nrows, mats[0].ncols, ring)
    return out


# -- isomorphism ---------------------------------------------------------------

@dataclass
class IsoResult:
    iso: bool
    witness: Matrix | None = None
    reason: str = ""
    decisive: bool = True

    def __bool__(self):
        return self.iso

    def to_json(self):
        out = {"iso": self.iso, "reason": self.reason, "decisive": self.decisive}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def weight_fingerprint(p: Params, R: Rep) -> Counter:
    Rw, _ = _weighted(p, R)
    return Counter(Rw.weights)


def is_isomorphic(p: Params, R: Rep, S: Rep, seed: int = 0, probes=(), tries: int = 64) -> IsoResult:
    ring = R.ring.join(S.ring)
    if R.dim != S.dim:
        return IsoResult(False, reason=f"dim mismatch {R.dim} vs {S.dim}")
    if weight_fingerprint(p, R) != weight_fingerprint(p, S):
        return IsoResult(False, reason="isotypic fingerprint mismatch")
    H = hom_basis(p, R, S).basis
    if not H:
        return IsoResult(False, reason="dim Hom(R, S) = 0")
    e_r = hom_basis(p, R, R).dim
    if len(H) != e_r:
        return IsoResult(False, reason=f"dim Hom(R, S) = {len(H)} but dim End(R) = {e_r}")
    for X in probes:
        a, b = hom_basis(p, X, R).dim, hom_basis(p, X, S).dim
        if a != b:
            return IsoResult(False, reason=f"probe {X.label}: hom dims {a} vs {b}")
    rng = random.Random(seed)
    candidates = [[1 if k == i else 0 for k in range(len(H))] for i in range(len(H))]
    for _ in range(tries):
        candidates.append([rng.randint(-4, 4) for _ in H])
    for coeffs in candidates:
        if not any(coeffs):
            continue
        f = _combo(H, coeffs, ring)
        if f.rank() == R.dim:
            return IsoResult(True, witness=f, reason="invertible intertwiner")
    if len(H) == 1:
        return IsoResult(False, reason="the only intertwiner up to scalar is singular")
    return IsoResult(False, reason="no invertible hom found (probabilistic)", decisive=False)


# -- endomorphisms -------------------------------------------------------------

def _coords(basis, ring: Ring):
    """A function returning coordinates of a matrix in the span of basis."""
    if not basis:
        return lambda m: []
    flat = [[x for row in b.rows for x in row] for b in basis]
    A = Matrix.from_columns(flat, ring)
    R, piv = A.rref()
    # solve on the pivot rows of the original matrix
    Rt, rowpiv = A.T.rref()
    sub = A.submatrix(rowpiv, list(range(len(basis))))
    inv = sub.inverse()

    def coords(m: Matrix):
        v = [x for row in m.rows for x in row]
        return inv.apply([v[i] for i in rowpiv])
    return coords


@dataclass
class EndoCertificate:
    endo_dim: int
    rad_dim: int
    top_dim: int
    verdict: str
    basis: list = field(default_factory=list, repr=False)
    split: Matrix | None = field(default=None, repr=False)

    def to_json(self):
        return {"endo_dim": self.endo_dim, "rad_dim": self.rad_dim, "top_dim": self.top_dim,
                "verdict": self.verdict}


def _fitting(theta: Matrix):
    """(kernel basis, image basis) of theta^n when theta is neither nilpotent nor invertible."""
    n = theta.nrows
    t = theta ** n
    r = t.rank()
    if r in (0, n):
        return None
    return t.kernel(), span_basis(t.T.rows, t.ring)


def endo_certificate(p: Params, R: Rep, seed: int = 0, tries: int = 64) -> EndoCertificate:
    ring = R.ring
    for r in {orbit_rep(c) for c in (weights_of(p, R) or ())}:
        try:
            ring = ring.join(ring_for(p, r))
        except RingMismatch:
            pass
    R = R.over(ring)
    B = hom_basis(p, R, R).basis
    m = len(B)
    if m == 0:
        return EndoCertificate(0, 0, 0, "decomposable")
    coords = _coords(B, ring)
    # left multiplication matrices of the regular representation
    L = []
    for i in range(m):
        cols = [coords(B[i] @ B[j]) for j in range(m)]
        L.append(Matrix.from_columns(cols, ring))
    T = Matrix([[(L[i] @ L[j]).trace() for j in range(m)] for i in range(m)], ring)
    rad = m - T.rank()
    top = m - rad
    if top == 1:
        return EndoCertificate(m, rad, top, "indecomposable", B)
    for theta in fitting_candidates(B, ring, seed, tries):
        if _fitting(theta) is not None:
            return EndoCertificate(m, rad, top, "decomposable", B, theta)
    return EndoCertificate(m, rad, top, "inconclusive", B)


def _ring_sqrt(x, ring: Ring):
    r = sqrt_exact(x)
    if isinstance(r, Found):
        return ring(r.value)
    if ring.D is not None:
        r = sqrt_exact(x / ring.D)
        if isinstance(r, Found):
            return ring(r.value) * Quad(ring.zero().a, ring.one().a, ring.D)
    return None


def _quadratic_eigs(b: Matrix, I: Matrix, ring: Ring) -> list:
    """Roots of x^2 - s x - t when b^2 = s b + t and the roots lie in the ring."""
    b2 = b @ b
    n = b.nrows
    # find s, t from two generic entries
    try:
        A = Matrix.from_columns([[x for row in b.rows for x in row],
                                 [x for row in I.rows for x in row]], ring)
        s_, t_ = A.solve([x for row in b2.rows for x in row])
    except Singular:
        return []
    disc = s_ * s_ + 4 * t_
    if isinstance(disc, Quad):
        if disc.b:
            return []
        disc = disc.a
    root = _ring_sqrt(disc, ring)
    if root is None:
        return []
    return [(s_ + root) / 2, (s_ - root) / 2]


def fitting_candidates(B, ring: Ring, seed: int, tries: int = 64):
    """Basis elements, then seeded small integer combinations; each also shifted by its diagonal."""
    rng = random.Random(seed)
    n = B[0].nrows
    I = Matrix.identity(n, ring)

    def with_shifts(theta):
        yield theta
        for lam in sorted(set(theta.diagonal()), key=str):
            if lam:
                yield theta - I.scale(lam)
    for b in B:
        yield from with_shifts(b)
        for lam in _quadratic_eigs(b, I, ring):
            yield b - I.scale(lam)
    for _ in range(tries):
        yield from with_shifts(_combo(B, [rng.randint(-3, 3) for _ in B], ring))


# -- weight-homogeneous subspaces ----------------------------------------------

def weight_span(vectors, weights, ring: Ring):
    """Weight-vector basis of a g-stable span (vectors in a weight basis)."""
    out, ws = [], []
    n = len(weights)
    for chi in sorted(set(weights)):
        idx = [k for k in range(n) if weights[k] == chi]
        part = [[v[k] for k in idx] for v in vectors]
        for b in span_basis(part, ring):
            vec = [ring.zero()] * n
            for k, x in zip(idx, b):
                vec[k] = x
            out.append(vec)
            ws.append(chi)
    return out, tuple(ws)


def _weight_of(v, weights):
    return next(weights[k] for k, x in enumerate(v) if x)


def subrep(R: Rep, vectors, label: str = "") -> tuple:
    """(restricted rep, basis) for the submodule spanned by vectors; R in a weight basis."""
    basis, ws = weight_span(vectors, R.weights, R.ring)
    if not basis:
        return zero_rep(R.ring), []
    return R.restrict(basis, ws, label), basis


def quotient(R: Rep, sub_vectors) -> Rep:
    """R / span(sub_vectors) for a submodule given by weight vectors of a weight-basis rep."""
    ring = R.ring
    n = R.dim
    k = len(sub_vectors)
    if k == 0:
        return R
    _, piv = Matrix(list(sub_vectors), ring, _raw=True).rref()
    comp = [j for j in range(n) if j not in piv]
    cols = list(sub_vectors)
    for j in comp:
        e = [ring.zero()] * n
        e[j] = ring.one()
        cols.append(e)
    T = Matrix.from_columns(cols, ring)
    Rb = R.change_basis(T)
    idx = list(range(k, n))
    mats = [m.submatrix(idx, idx) for m in Rb.mats()]
    return Rep(*mats, ring, f"{R.label}/sub", tuple(R.weights[j] for j in comp))


# -- simples -------------------------------------------------------------------

class SimpleClass(NamedTuple):
    kind: str
    chi: Character
    d: object = None

    @property
    def dim(self) -> int:
        return {"L1": 1, "L2h": 2, "L2v": 2, "L4": 4}[self.kind]

    @property
    def label(self) -> str:
        s = f"{self.kind}:{self.chi}"
        return s + (f":{str(self.d).replace(' ', '')}" if self.kind == "L4" else "")

    def build(self, p: Params) -> Rep:
        return build_simple(p, self.kind, self.chi, self.d)


def l4_iso_rule(p: Params, chi: Character, d, phi: Character, e) -> bool:
    """Closed-form iso rule for the four-dimensional simples."""
    if phi == chi or phi == chi.negbar():
        return d == e
    if phi == chi.neg() or phi == chi.bar():
        a1, a2, _ = alpha(p, chi)
        return bool(a1 * a2) and bool(d) and e == 1 / (a1 * a1 * d)
    return False


def l2_iso_rule(kind: str, chi: Character, phi: Character) -> bool:
    if kind == "L2h":
        return phi in (chi, chi.bar())
    return phi in (chi, chi.neg())


def orbit_simples(p: Params, chi: Character) -> list:
    r = orbit_rep(chi)
    s = classify_character(p, r)
    if s == O1:
        return [SimpleClass("L1", x) for x in sorted(r.orbit())]
    if s in (O2H, O2V):
        kind = "L2h" if s == O2H else "L2v"
        return [SimpleClass(kind, x) for x in sorted({canonical(kind, y) for y in r.orbit()})]
    out = []
    for psi in (r, canonical("L4", r.bar())):
        for d, _ in solve_d(p, psi):
            if not any(l4_iso_rule(p, q.chi, q.d, psi, d) for q in out):
                out.append(SimpleClass("L4", psi, d))
    return out


def orbits(p: Params) -> list:
    return sorted({orbit_rep(c) for c in p.characters()})


def simples(p: Params) -> list:
    return [s for r in orbits(p) for s in orbit_simples(p, r)]


def projective_cover(p: Params, L: SimpleClass) -> Rep:
    if L.kind == "L4" and discriminant(p, L.chi):
        return L.build(p)
    return build_projective(p, L.chi)


def theorem_case(lam) -> tuple:
    """(case number 1..8, subcase flag) from which lambda_i vanish."""
    l1, l2, l3 = (bool(x) for x in lam)
    table = {(False, False, False): 1, (True, False, False): 2, (False, True, False): 3,
             (False, False, True): 4, (False, True, True): 5, (True, False, True): 6,
             (True, True, False): 7, (True, True, True): 8}
    case = table[(l1, l2, l3)]
    sub = None
    if case == 8:
        sub = "l3=2l1l2" if lam[2] == 2 * lam[0] * lam[1] else "l3!=2l1l2"
    return case, sub


def classify(p: Params) -> dict:
    S = simples(p)
    counts = Counter(s.dim for s in S)
    per_orbit = []
    for r in orbits(p):
        total = sum(projective_cover(p, L).dim * L.dim for L in orbit_simples(p, r))
        per_orbit.append({"orbit": str(r), "stratum": classify_character(p, r), "sum": total})
    case, sub = theorem_case(p.lam)
    return {
        "case": case,
        "subcase": sub,
        "counts": {f"dim{d}": counts[d] for d in sorted(counts)},
        "simples": [s.label for s in S],
        "orbit_check": per_orbit,
        "orbit_check_ok": all(o["sum"] == 32 for o in per_orbit),
    }


def composition_factors(p: Params, R: Rep) -> Counter:
    Rw, _ = _weighted(p, R)
    out = Counter()
    for r in sorted({orbit_rep(c) for c in Rw.weights}):
        for L in orbit_simples(p, r):
            m = hom_basis(p, projective_cover(p, L), Rw).dim
            if m:
                out[L.label] += m
    return out


# -- radical layers and Ext -----------------------------------------------------

def radical(p: Params, R: Rep) -> list:
    """Weight basis of rad R: common kernel of all maps to simples."""
    Rw, _ = _weighted(p, R)
    rows = []
    for r in sorted({orbit_rep(c) for c in Rw.weights}):
        for L in orbit_simples(p, r):
            for f in hom_basis(p, Rw, L.build(p)).basis:
                rows += f.rows
    ring = Rw.ring
    for row in rows:
        for x in row:
            ring = ring.join(Ring(x.K, getattr(x, "D", None)))
    if not rows:
        return [[ring.zero() if i != j else ring.one() for i in range(Rw.dim)] for j in range(Rw.dim)]
    ker = Matrix([[ring(x) for x in row] for row in rows], ring, _raw=True).kernel()
    basis, _ = weight_span(ker, Rw.weights, ring)
    return basis


def ext1_closed(p: Params, Lp: SimpleClass, L: SimpleClass) -> int:
    if orbit_rep(Lp.chi) != orbit_rep(L.chi):
        return 0
    s = classify_character(p, L.chi)
    if s == O1:
        return 1 if Lp.chi in (L.chi.bar(), L.chi.neg()) else 0
    if s == O2H:
        return 0 if l2_iso_rule("L2h", L.chi, Lp.chi) else 2
    if s == O2V:
        return 0 if l2_iso_rule("L2v", L.chi, Lp.chi) else 2
    if discriminant(p, L.chi):
        return 0
    return 1


def ext1_from_radical(p: Params, Lp: SimpleClass, L: SimpleClass) -> int:
    """Multiplicity of L in rad P(Lp) / rad^2 P(Lp)."""
    P = projective_cover(p, Lp)
    Pw, _ = _weighted(p, P)
    rad = radical(p, Pw)
    if not rad:
        return 0
    ring = Pw.ring.join(Ring(rad[0][0].K, getattr(rad[0][0], "D", None))) if rad else Pw.ring
    Pw = Pw.over(ring)
    radrep, _ = subrep(Pw, rad)
    rad2 = radical(p, radrep)
    layer = quotient(radrep, rad2)
    if layer.dim == 0:
        return 0
    return hom_basis(p, layer, L.build(p)).dim


# -- Gabriel quiver --------------------------------------------------------------

@dataclass
class Quiver:
    vertices: list
    arrows: dict

    def to_json(self):
        return {"vertices": self.vertices,
                "arrows": [{"from": a, "to": b, "mult": m} for (a, b), m in sorted(self.arrows.items())]}

    def components(self) -> list:
        adj = {v: set() for v in self.vertices}
        for (a, b), m in self.arrows.items():
            if m:
                adj[a].add(b)
                adj[b].add(a)
        seen, out = set(), []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in sorted(adj[x]):
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out


def is_dynkin(q: Quiver, comp) -> bool:
    """Underlying graph of the component is a simply-laced Dynkin diagram."""
    edges = {k: m for k, m in q.arrows.items() if m and k[0] in comp}
    if any(m > 1 or a == b for (a, b), m in edges.items()):
        return False
    und = Counter(frozenset(k) for k in edges)
    if any(c > 1 for c in und.values()):
        return False
    if len(und) != len(comp) - 1:
        return False  # not a tree (connected by construction)
    deg = Counter()
    for e in und:
        for v in e:
            deg[v] += 1
    branch = [v for v in comp if deg[v] >= 3]
    if any(deg[v] > 3 for v in comp) or len(branch) > 1:
        return False
    if not branch:
        return True
    # arm lengths from the branch point
    nb = {v: set() for v in comp}
    for e in und:
        a, b = tuple(e)
        nb[a].add(b)
        nb[b].add(a)
    c = branch[0]
    arms = []
    for start in nb[c]:
        length, prev, cur = 1, c, start
        while True:
            nxt = [y for y in nb[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length + 1)
    a, b, cc = sorted(arms)
    return 1 / a + 1 / b + 1 / cc > 1


def gabriel_quiver(p: Params):
    S = sorted(simples(p), key=lambda s: (s.chi.i, s.chi.j, s.kind, s.label))
    labels = [s.label for s in S]
    arrows = {}
    for Lp in S:
        for L in S:
            m = ext1_closed(p, Lp, L)
            if m:
                arrows[(Lp.label, L.label)] = m
    q = Quiver(labels, arrows)
    sep_v = [v + "+" for v in labels] + [v + "-" for v in labels]
    sep = Quiver(sep_v, {(a + "+", b + "-"): m for (a, b), m in arrows.items()})
    finite = all(is_dynkin(sep, c) for c in sep.components())
    return q, sep, finite


def quiver_dot(q: Quiver) -> str:
    lines = ["digraph gabriel {"]
    ids = {v: f"v{k}" for k, v in enumerate(q.vertices)}
    for v in q.vertices:
        lines.append(f'  {ids[v]} [label="{v}"];')
    for (a, b), m in sorted(q.arrows.items()):
        for _ in range(m):
            lines.append(f"  {ids[a]} -> {ids[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- projective peeling ----------------------------------------------------------

def _word4(R: Rep) -> Matrix:
    a12 = R.a1 @ R.a2
    return a12 @ a12


def peel_projective(p: Params, R: Rep, seed: int = 0):
    """Split off copies of P^chi while some weight vector has a1a2a1a2.x != 0."""
    Rw, T = _weighted(p, R)
    cur = Rw
    basis = [[Rw.ring.one() if i == j else Rw.ring.zero() for i in range(Rw.dim)] for j in range(Rw.dim)]
    peeled = []
    while cur.dim:
        W = _word4(cur)
        k = next((j for j in range(cur.dim) if classify_character(p, cur.weights[j]) != O4
                  and any(W.rows[i][j] for i in range(cur.dim))), None)
        if k is None:
            break  # O4 orbits are left to decompose
        chi = cur.weights[k]
        ring = cur.ring
        x = [ring.one() if i == k else ring.zero() for i in range(cur.dim)]
        A1, A2 = cur.a1, cur.a2
        vecs = [x]
        for word in ((1,), (2,), (2, 1), (1, 2), (1, 2, 1), (2, 1, 2), (2, 1, 2, 1)):
            v = x
            for letter in word:
                v = (A1 if letter == 1 else A2).apply(v)
            vecs.append(v)
        if Matrix.from_columns(vecs, ring).rank() != 8:
            raise SplitFailed("generated submodule is not 8-dimensional")
        sub, sbasis = subrep(cur, vecs)
        P = build_projective(p, chi, ring)
        iso = is_isomorphic(p, P, sub, seed)
        if not iso:
            raise SplitFailed("generated submodule is not isomorphic to P^chi")
        # retraction r: cur -> sub with r o incl = id
        H = hom_basis(p, cur, sub).basis
        incl = Matrix.from_columns(sbasis, ring)
        target = [x for row in Matrix.identity(8, ring).rows for x in row]
        cols = [[x for row in (h @ incl).rows for x in row] for h in H]
        try:
            c = Matrix.from_columns(cols, ring).solve(target)
        except Singular:
            raise SplitFailed("no retraction onto the projective submodule") from None
        r = _combo(H, c, ring)
        comp, _ = subrep(cur, r.kernel())
        kbasis = weight_span(r.kernel(), cur.weights, ring)[0]
        Bm = Matrix.from_columns(basis, ring, Rw.dim)
        peeled.append((P, sub, [Bm.apply(v) for v in sbasis], iso.witness))
        basis = [Bm.apply(v) for v in kbasis]
        cur = comp
    rem_basis = basis
    if T is not None:
        peeled = [(P, S, [T.apply(v) for v in vs], w) for P, S, vs, w in peeled]
        rem_basis = [T.apply(v) for v in rem_basis]
    return PeelResult([x[0] for x in peeled], cur, [x[2] for x in peeled], rem_basis,
                      [x[1] for x in peeled], [x[3] for x in peeled])


@dataclass
class PeelResult:
    projectives: list
    remainder: Rep
    bases: list
    remainder_basis: list
    subs: list = field(default_factory=list)       # the peeled submodules in their own bases
    witnesses: list = field(default_factory=list)  # P^chi -> submodule

    def __iter__(self):
        return iter((self.projectives, self.remainder))


def split_by_hom(p: Params, R: Rep, C: Rep, seed: int = 0, tries: int = 8):
    """Find f: C -> R injective with a retraction; returns (image basis, complement basis)."""
    H = hom_basis(p, C, R).basis
    if not H:
        return None
    G = hom_basis(p, R, C).basis
    if not G:
        return None
    ring = R.ring.join(C.ring)
    rng = random.Random(seed)
    cands = list(H) + [_combo(H, [rng.randint(-3, 3) for _ in H], ring) for _ in range(tries)]
    target = [x for row in Matrix.identity(C.dim, ring).rows for x in row]
    for f in cands:
        if f.rank() != C.dim:
            continue
        cols = [[x for row in (g @ f).rows for x in row] for g in G]
        try:
            c = Matrix.from_columns(cols, ring).solve(target)
        except Singular:
            continue
        r = _combo(G, c, ring)
        comp, _ = weight_span(r.kernel(), R.weights, ring)
        return f.columns(), comp
    return None


def _o4_blocks(p: Params, r: Character) -> list:
    """Projective then simple catalog modules to try when splitting an O4 orbit."""
    S = orbit_simples(p, r)
    if discriminant(p, r):
        return [L.build(p) for L in S]
    return [projective_cover(p, L) for L in S] + [L.build(p) for L in S]


# -- catalog matching --------------------------------------------------------------

MU_CANDIDATES = (1, -1, 2, -2)
AB_CANDIDATES = ((1, 0), (0, 1), (1, 1), (1, -1))


def catalog_candidates(p: Params, chi: Character, dim: int):
    """Catalog modules of the given dimension supported on the orbit of chi."""
    r = orbit_rep(chi)
    orbit = sorted(r.orbit())
    s = classify_character(p, r)
    for L in orbit_simples(p, r):
        if L.dim == dim:
            yield L.build(p)
    if s == O1:
        for psi in orbit:
            if dim == 2:
                yield build_indecomposable(p, "M1h", psi)
                yield build_indecomposable(p, "M1v", psi)
            if dim == 3:
                for i in range(1, 5):
                    yield build_indecomposable(p, "M3", psi, i=i)
            if dim == 4:
                for i in range(1, 9):
                    yield build_indecomposable(p, "M4", psi, i=i)
                for kind in C_KINDS:
                    for mu in MU_CANDIDATES:
                        yield build_indecomposable(p, "C", psi, kind=kind, mu=mu)
        if dim >= 5:
            for psi in orbit:
                yield build_indecomposable(p, "Q", psi, n=dim)
    if s in (O2H, O2V):
        fam = "h" if s == O2H else "v"
        for psi in orbit:
            if dim == 4:
                for a, b in AB_CANDIDATES:
                    yield build_indecomposable(p, "M2" + fam, psi, a=a, b=b)
            if dim >= 6 and dim % 2 == 0:
                yield build_indecomposable(p, "Q" + fam, psi, n=dim)
    if dim == 8:
        for psi in orbit:
            yield build_projective(p, psi)


def match_catalog(p: Params, R: Rep, seed: int = 0):
    """(catalog rep, witness catalog -> R) for the first isomorphic catalog module, else None."""
    Rw, _ = _weighted(p, R)
    fp = Counter(Rw.weights)
    for C in catalog_candidates(p, Rw.weights[0], Rw.dim):
        if Counter(C.weights) != fp:
            continue
        res = is_isomorphic(p, C, R, seed)
        if res:
            return C, res.witness
    return None


# -- decomposition ---------------------------------------------------------------

@dataclass
class Summand:
    rep: Rep
    label: str
    basis: list                # columns in the input's coordinates
    catalog: Rep | None = None
    witness: Matrix | None = None  # catalog -> rep
    verdict: str = "indecomposable"

    def __iter__(self):
        return iter((self.rep, self.label))


@dataclass
class Decomposition:
    summands: list
    witness: Matrix  # direct sum of summands -> input

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def labels(self) -> list:
        return [s.label for s in self.summands]

    def to_json(self):
        return {"summands": [{"label": s.label, "dim": s.rep.dim, "verdict": s.verdict}
                             for s in self.summands]}


def decompose(p: Params, R: Rep, seed: int = 0, match: bool = True) -> Decomposition:
    Rw, T = _weighted(p, R)
    ring = Rw.ring
    n = Rw.dim
    rng = random.Random(seed)

    def unit(j):
        return [ring.one() if i == j else ring.zero() for i in range(n)]

    # (1) orbits
    pieces = []
    for r in sorted({orbit_rep(c) for c in Rw.weights}):
        idx = [j for j in range(n) if orbit_rep(Rw.weights[j]) == r]
        vecs = [unit(j) for j in idx]
        sub = Rw.restrict(vecs, tuple(Rw.weights[j] for j in idx))
        # the O4 simples may need sqrt(D)
        ext = ring.join(ring_for(p, r))
        if ext != ring:
            sub = sub.over(ext)
            vecs = [[ext(x) for x in v] for v in vecs]
        pieces.append((sub, vecs))
    done = []
    peeled = []
    # (2) projectives on O1 / O2 orbits
    work = []
    for sub, vecs in pieces:
        if classify_character(p, sub.weights[0]) != O4:
            res = peel_projective(p, sub, seed)
            B = Matrix.from_columns(vecs, sub.ring, n)
            for P, S, pb, w in zip(res.projectives, res.subs, res.bases, res.witnesses):
                peeled.append(Summand(S, P.label, [B.apply(v) for v in pb], P, w))
            if res.remainder.dim:
                work.append((res.remainder, [B.apply(v) for v in res.remainder_basis]))
        else:
            blocks = _o4_blocks(p, orbit_rep(sub.weights[0]))
            cur, cvecs = sub, vecs
            while cur.dim:
                B = Matrix.from_columns(cvecs, cur.ring, n)
                for C in blocks:
                    if C.dim > cur.dim:
                        continue
                    got = split_by_hom(p, cur, C.over(cur.ring), seed)
                    if got:
                        img, comp = got
                        S = cur.restrict(img, C.weights)
                        peeled.append(Summand(S, C.label, [B.apply(v) for v in img], C,
                                              Matrix.identity(C.dim, cur.ring)))
                        if comp:
                            nxt = cur.restrict(comp, tuple(_weight_of(v, cur.weights) for v in comp))
                            cvecs = [B.apply(v) for v in comp]
                            cur = nxt
                        else:
                            cur = zero_rep(cur.ring)
                        break
                else:
                    work.append((cur, cvecs))
                    break
    # (3) Fitting splits
    while work:
        sub, vecs = work.pop(0)
        cert = endo_certificate(p, sub, rng.randrange(2 ** 32))
        if cert.verdict != "decomposable":
            done.append((sub, vecs, cert.verdict))
            continue
        ker, im = _fitting(cert.split)
        B = Matrix.from_columns(vecs, sub.ring, n)
        for part in (ker, im):
            s2, b2 = subrep(sub, part)
            work.append((s2, [B.apply(v) for v in b2]))
    # (4) catalog
    summands = peeled
    for sub, vecs, verdict in done:
        label, cat, wit = f"X:{orbit_rep(sub.weights[0])}:dim={sub.dim}", None, None
        if match:
            found = match_catalog(p, sub, seed)
            if found:
                cat, wit = found
                label = cat.label
        summands.append(Summand(sub, label, vecs, cat, wit, verdict))
    summands.sort(key=lambda s: (orbit_rep(s.rep.weights[0]), s.label))
    full = ring
    for s in summands:
        full = full.join(s.rep.ring)
    cols = [[full(x) for x in v] for s in summands for v in s.basis]
    W = Matrix.from_columns(cols, full, n)
    if summands:
        big = direct_sum_all([s.rep.over(full) for s in summands])
        if not is_hom(W, big, Rw.over(full)) or W.rank() != n:
            raise SplitFailed("internal: decomposition witness does not intertwine")
    if T is not None:
        T = T.over(full)
        W = T @ W
        for s in summands:
            s.basis = [T.apply([full(x) for x in v]) for v in s.basis]
    return Decomposition(summands, W)
