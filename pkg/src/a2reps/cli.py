"""Command line front end."""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import analysis, catalog, spherical
from .field import Cyclo, RingMismatch, scalar_to_json
from .hopf import (Character, ParamError, Params, canonical, classify_character, solve_d)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- parsing ---------------------------------------------------------------

_W = re.compile(r"^([+-]?)(?:(\d+(?:/\d+)?)\*)?w(?:\^(-?\d+))?$")


def parse_scalar(text: str, K: int) -> Cyclo:
    """Rationals "p/q" or cyclotomic literals "w^k" (optionally "c*w^k", sums with +)."""
    text = text.strip().replace(" ", "")
    if not text:
        raise UsageError("empty scalar")
    terms = re.findall(r"[+-]?[^+-]+", text)
    out = Cyclo.zero(K)
    for t in terms:
        m = _W.match(t)
        if m:
            sign, coef, k = m.groups()
            c = Fraction(coef) if coef else Fraction(1)
            if sign == "-":
                c = -c
            out = out + Cyclo.root(K, int(k) if k is not None else 1) * c
            continue
        try:
            out = out + Fraction(t)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse scalar {t!r}; use p/q or w^k") from None
    return out


def _lcm_k(N: int, M: int) -> int:
    from math import lcm
    return lcm(2 * N, 2 * M, 4)


def make_params(args) -> Params:
    if args.N is None or args.M is None:
        raise UsageError("--N and --M are required")
    K = _lcm_k(args.N, args.M)
    parts = (args.lam or "0,0,0").split(",")
    if len(parts) != 3:
        raise UsageError("--lambda needs three comma-separated entries")
    lam = [parse_scalar(x, K) for x in parts]
    try:
        return Params.make(args.N, args.M, lam, allow_small=args.allow_small)
    except ParamError as e:
        raise UsageError(str(e)) from None


SPEC = re.compile(r"^(\w+):(-?\d+),(-?\d+)(?::(.*))?$")


def parse_spec(p: Params, text: str) -> catalog.Rep:
    """KIND:i,j[:extra] or a path to a Rep JSON file."""
    if text.endswith(".json") and os.path.exists(text):
        with open(text) as fh:
            return catalog.Rep.from_json(json.load(fh))
    m = SPEC.match(text)
    if not m:
        raise UsageError(f"bad module specifier {text!r}; expected KIND:i,j[:extra]")
    kind, i, j, extra = m.groups()
    chi = p.chi(int(i), int(j))
    kw = {}
    if extra:
        for item in extra.split(","):
            if "=" not in item:
                raise UsageError(f"bad parameter {item!r} in {text!r}")
            k, v = item.split("=", 1)
            kw[k.strip()] = v.strip()
    try:
        if kind in ("L1", "L2h", "L2v"):
            return catalog.build_simple(p, kind, chi)
        if kind == "L4":
            d = kw.get("d", "auto")
            if d in ("auto", "0th", "root0"):
                d = None
            elif d == "root1":
                roots = solve_d(p, chi)
                d = roots[-1][0]
            else:
                d = parse_scalar(d, p.K)
            return catalog.build_simple(p, "L4", chi, d)
        if kind == "P":
            return catalog.build_projective(p, chi)
        if kind in ("M1h", "M1v"):
            return catalog.build_indecomposable(p, kind, chi)
        if kind in ("M2h", "M2v"):
            return catalog.build_indecomposable(p, kind, chi, a=parse_scalar(kw.get("a", "1"), p.K),
                                                b=parse_scalar(kw.get("b", "0"), p.K))
        if kind in ("M3", "M4"):
            return catalog.build_indecomposable(p, kind, chi, i=int(kw.get("i", 1)))
        if kind == "C":
            return catalog.build_indecomposable(p, "C", chi, kind=kw.get("kind", "2"),
                                                mu=parse_scalar(kw.get("mu", "1"), p.K))
        if kind in ("Q", "Qh", "Qv"):
            return catalog.build_indecomposable(p, kind, chi, n=int(kw.get("n", 4 if kind == "Q" else 2)))
    except (catalog.WrongStratum, catalog.BadParam, catalog.BadD) as e:
        raise UsageError(f"{type(e).__name__}: {e}") from None
    raise UsageError(f"unknown module kind {kind!r}")


# -- commands -----------------------------------------------------------------

def _rep_out(R: catalog.Rep) -> dict:
    return R.to_json()


def cmd_classify(p, args):
    return analysis.classify(p), EXIT_OK


def cmd_build(p, args):
    R = parse_spec(p, args.spec[0])
    return _rep_out(R), EXIT_OK


def cmd_verify(p, args):
    R = parse_spec(p, args.spec[0])
    try:
        v = catalog.verify_rep(p, R)
    except RingMismatch as e:
        raise UsageError(str(e)) from None
    if v:
        return {"label": R.label, "ok": True}, EXIT_OK
    return {"label": R.label, "ok": False, "relation": v.relation,
            "residual": v.residual.to_json()}, EXIT_VIOLATION


def cmd_tensor(p, args):
    R, S = (parse_spec(p, s) for s in _two(args))
    return _rep_out(catalog.tensor(p, R, S)), EXIT_OK


def cmd_decompose(p, args):
    R = parse_spec(p, args.spec[0])
    d = analysis.decompose(p, R, args.seed)
    out = d.to_json()
    out["input"] = R.label
    return out, EXIT_OK


def cmd_homs(p, args):
    R, S = (parse_spec(p, s) for s in _two(args))
    H = analysis.hom_basis(p, R, S)
    return {"source": R.label, "target": S.label, "dim": H.dim,
            "basis": [f.to_json() for f in H.basis]}, EXIT_OK


def cmd_qdim(p, args):
    R = parse_spec(p, args.spec[0])
    return {"label": R.label, "qdim": scalar_to_json(spherical.qdim(p, R)),
            "text": str(spherical.qdim(p, R))}, EXIT_OK


def cmd_fusion(p, args):
    R, S = (parse_spec(p, s) for s in _two(args))
    return spherical.fusion_decompose(p, R, S, args.seed).to_json(), EXIT_OK


def cmd_quiver(p, args):
    q, sep, finite = analysis.gabriel_quiver(p)
    if args.format == "dot":
        return analysis.quiver_dot(q), EXIT_OK
    return {"quiver": q.to_json(), "separated": sep.to_json(), "finite_type": finite}, EXIT_OK


def cmd_probe(p, args):
    r = spherical.probe_question_zero(p, args.bound)
    return r.to_json(), (EXIT_VIOLATION if r.nonzero else EXIT_OK)


def cmd_selftest(p, args):
    from .acceptance import run_all
    results = run_all(jobs=args.jobs, seed=args.seed, echo=lambda line: print(line, file=sys.stderr))
    out = {"criteria": [r.to_json() for r in results]}
    return out, (EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION)


def _two(args):
    if len(args.spec) != 2:
        raise UsageError(f"{args.command} needs two module specifiers")
    return args.spec


COMMANDS = {
    "classify": (cmd_classify, 0),
    "build": (cmd_build, 1),
    "verify": (cmd_verify, 1),
    "tensor": (cmd_tensor, 2),
    "decompose": (cmd_decompose, 1),
    "homs": (cmd_homs, 2),
    "qdim": (cmd_qdim, 1),
    "fusion": (cmd_fusion, 2),
    "quiver": (cmd_quiver, 0),
    "probe-q0": (cmd_probe, 0),
    "selftest": (cmd_selftest, 0),
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="a2reps", description="Exact representation computations for H_lambda.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("spec", nargs="*", help="module specifiers KIND:i,j[:extra] or Rep JSON files")
    ap.add_argument("--N", type=int)
    ap.add_argument("--M", type=int)
    ap.add_argument("--lambda", dest="lam", default="0,0,0", help="a,b,c with entries p/q or w^k")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out")
    ap.add_argument("--format", choices=("json", "text", "dot"), default="json")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--allow-small", action="store_true")
    ap.add_argument("--bound", type=int, default=12, help="dimension bound for probe-q0")
    return ap


def _text(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        items = []
        for x in obj:
            if isinstance(x, (dict, list)):
                body = _text(x, indent + 1)
                items.append(f"{pad}- " + body.lstrip())
            else:
                items.append(f"{pad}- {x}")
        return "\n".join(items)
    return f"{pad}{obj}"


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    fn, nspec = COMMANDS[args.command]
    try:
        if args.command == "selftest":
            p = None
        else:
            p = make_params(args)
        if nspec and len(args.spec) != nspec:
            raise UsageError(f"{args.command} takes {nspec} module specifier(s)")
        if args.command in ("qdim", "fusion", "probe-q0") and p.N % 2 == 0:
            raise UsageError("this command needs N odd")
        result, code = fn(p, args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(result, str):
        text = result
    elif args.format == "text":
        text = _text(result) + "\n"
    else:
        text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
