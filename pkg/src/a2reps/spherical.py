"""Pivotal structure for odd N: quantum traces, negligible morphisms and fusion."""
from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import decompose, hom_basis, is_hom, orbit_simples
from .catalog import C_KINDS, Rep, build_indecomposable, build_projective, tensor
from .field import scalar_to_json
from .hopf import O1, O2H, O2V, Params, classify_character, normal_form, antipode, letter
from .matrix import Matrix


class NOdd(ValueError):
    """Raised when an operation needs N odd."""


class NotAHom(ValueError):
    pass


def _need_odd(p: Params):
    if p.N % 2 == 0:
        raise NOdd(f"the pivot g1^N needs N odd, got N={p.N}")


@dataclass
class PivotReport:
    ok: bool
    checks: dict

    def __bool__(self):
        return self.ok


def pivot_check(p: Params) -> PivotReport:
    """S^2(x) = w x w^-1 for x in {a1, a2, g1, g2} with w = g1^N, and w^2 = 1."""
    _need_odd(p)
    w = normal_form(p, ["g1"] * p.N)
    winv = normal_form(p, ["g1^-1"] * p.N)
    checks = {}
    for name in ("a1", "a2", "g1", "g2"):
        x = letter(p, name)
        checks[f"S^2({name})"] = antipode(antipode(x)) == w * x * winv
    checks["w^2 = 1"] = w * w == normal_form(p, [])
    return PivotReport(all(checks.values()), checks)


def pivot(p: Params, R: Rep) -> Matrix:
    _need_odd(p)
    return R.g1 ** p.N


def qdim(p: Params, R: Rep):
    return pivot(p, R).trace()


def qtr(p: Params, f: Matrix, R: Rep):
    """Quantum trace of an endomorphism f of R."""
    return (f @ pivot(p, R)).trace()


@dataclass
class NegligibleReport:
    qtr_values: list
    negligible: bool
    hom_dim: int
    quotient_dim: int


def qtr_negligible(p: Params, f: Matrix, R: Rep, S: Rep) -> NegligibleReport:
    """Is f: R -> S negligible, i.e. qtr(g f) = 0 for every g: S -> R?"""
    _need_odd(p)
    if f.shape != (S.dim, R.dim) or not is_hom(f, R, S):
        raise NotAHom("f does not intertwine the two actions")
    back = hom_basis(p, S, R).basis
    w = pivot(p, R)
    vals = [(g @ f @ w).trace() for g in back]
    fwd = hom_basis(p, R, S).basis
    if fwd and back:
        pairing = Matrix([[(g @ h @ w).trace() for g in back] for h in fwd], R.ring.join(S.ring))
        rank = pairing.rank()
    else:
        rank = 0
    return NegligibleReport(vals, not any(vals), len(fwd), rank)


@dataclass
class FusionEntry:
    label: str
    qdim: object
    survives: bool
    dim: int = 0


@dataclass
class FusionReport:
    summands: list = field(default_factory=list)

    @property
    def surviving(self) -> list:
        return [s for s in self.summands if s.survives]

    @property
    def dropped(self) -> list:
        return [s for s in self.summands if not s.survives]

    def to_json(self):
        return {"summands": [{"label": s.label, "qdim": scalar_to_json(s.qdim), "survives": s.survives}
                             for s in self.summands]}


def fusion_decompose(p: Params, R: Rep, S: Rep, seed: int = 0) -> FusionReport:
    """Tensor, decompose, and keep the summands of nonzero quantum dimension."""
    _need_odd(p)
    dec = decompose(p, tensor(p, R, S), seed)
    out = FusionReport()
    for s in dec.summands:
        q = qdim(p, s.rep)
        out.summands.append(FusionEntry(s.label, q, bool(q), s.rep.dim))
    return out


def even_catalog(p: Params, chi, dim_bound: int):
    """Catalog indecomposables of even dimension <= dim_bound supported at chi."""
    s = classify_character(p, chi)
    out = []
    if s == O1:
        if dim_bound >= 2:
            out += [build_indecomposable(p, "M1h", chi), build_indecomposable(p, "M1v", chi)]
        if dim_bound >= 4:
            out += [build_indecomposable(p, "M4", chi, i=i) for i in range(1, 9)]
            out += [build_indecomposable(p, "C", chi, kind=k, mu=mu)
                    for k in C_KINDS for mu in (1, -1, 2)]
        out += [build_indecomposable(p, "Q", chi, n=n) for n in range(2, dim_bound + 1, 2)]
    elif s in (O2H, O2V):
        fam = "h" if s == O2H else "v"
        out += [L.build(p) for L in orbit_simples(p, chi) if L.chi == chi and dim_bound >= 2]
        if dim_bound >= 4:
            out += [build_indecomposable(p, "M2" + fam, chi, a=a, b=b) for a, b in ((1, 0), (0, 1), (1, 1))]
        out += [build_indecomposable(p, "Q" + fam, chi, n=n) for n in range(6, dim_bound + 1, 2)]
    else:
        if dim_bound >= 4:
            out += [L.build(p) for L in orbit_simples(p, chi) if L.chi == chi]
    if dim_bound >= 8:
        out.append(build_projective(p, chi))
    return out


@dataclass
class ProbeReport:
    table: list
    nonzero: list

    def to_json(self):
        return {"table": [{"label": l, "dim": d, "qdim": scalar_to_json(q)} for l, d, q in self.table],
                "nonzero": [{"label": l, "dim": d, "qdim": scalar_to_json(q)} for l, d, q in self.nonzero]}


def probe_question_zero(p: Params, dim_bound: int) -> ProbeReport:
    """Quantum dimensions of every even-dimensional catalog indecomposable up to dim_bound."""
    _need_odd(p)
    table = []
    for chi in p.characters():
        for R in even_catalog(p, chi, dim_bound):
            table.append((R.label, R.dim, qdim(p, R)))
    return ProbeReport(table, [t for t in table if t[2]])
