"""Command-line front end: ``heunreduce <command> [params] [options]``.

Parameters are a JSON object given inline, as a file path, or ``-`` for
standard input.  Output is JSON unless ``--output text``.

Exit status: 0 success, 2 not reducible (``classify`` only), 1 error or a
failed verification.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from typing import Any, List, Optional

from .classifier import (
    NotReducible,
    SubcaseId,
    classify,
    culmination_table,
    enumerate_all_reductions,
    gauss_parameters,
    link_partners,
)
from .crossratio import nearest_orbit
from .equations import GaussEquation, HeunEquation
from .general import GeneralHeun, LameAlgebraic, NaturalGeneralHeun, classify_general, lame_reduce
from .poly import ExactPolynomial, RationalMap
from .series import DEFAULT_ORDER, DEFAULT_TOL, random_rational, verify_reduction_series
from .surd import SurdNumber, format_surd, parse_surd, surd
from .trivial import enumerate_trivial, raw_trivial, trivial_counts
from .verifier import induced_gauss, verify_pullback

COMMANDS = ("classify", "reduce", "verify", "table", "enumerate", "trivial", "lame", "general")
SNAP_TOL = 1e-9


class InputError(ValueError):
    pass


# -- input ----------------------------------------------------------------------


def load_params(text: Optional[str]) -> dict:
    if text is None:
        return {}
    if text == "-":
        text = sys.stdin.read()
    elif not text.lstrip().startswith("{") and os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"parameters are not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("parameters must be a JSON object")
    return data


def exact_value(x, name: str) -> SurdNumber:
    """Exact parameter value; decimals become the rational they spell."""
    if isinstance(x, bool):
        raise InputError(f"{name}: booleans are not numbers")
    if isinstance(x, int):
        return surd(x)
    if isinstance(x, float):
        return surd(Fraction(repr(x)))
    if isinstance(x, str):
        try:
            return parse_surd(x)
        except ValueError:
            raise InputError(f"{name}: cannot parse {x!r}") from None
    raise InputError(f"{name}: unsupported value {x!r}")


def _is_decimal(x) -> bool:
    if isinstance(x, float):
        return True
    return isinstance(x, str) and ("." in x or "j" in x or "e" in x.lower().replace("sqrt", ""))


def singular_point(x, tol: float):
    """(exact d, snap record or None).  Decimal input is snapped onto a
    canonical orbit value when one lies within ``tol``."""
    if not _is_decimal(x):
        return exact_value(x, "d"), None
    try:
        z = complex(x.replace(" ", "") if isinstance(x, str) else x)
    except ValueError:
        raise InputError(f"d: cannot parse {x!r}") from None
    snap = nearest_orbit(z, tol)
    if snap is not None:
        return snap.value, {"input": str(x), "value": format_surd(snap.value),
                            "distance": snap.distance}
    if z.imag != 0:
        raise InputError(f"d = {x} is within {tol} of no canonical orbit value and is not real")
    value = exact_value(x, "d") if isinstance(x, str) else surd(Fraction(repr(x)))
    return value, {"input": str(x), "value": format_surd(value), "distance": None}


def heun_from(data: dict, tol: float):
    try:
        d, snap = singular_point(data["d"], tol)
        vals = {k: exact_value(data[k], k) for k in ("q", "alpha", "beta", "gamma", "delta")}
    except KeyError as exc:
        raise InputError(f"missing parameter {exc.args[0]!r}") from None
    eq = HeunEquation(d, **vals)
    if "epsilon" in data and exact_value(data["epsilon"], "epsilon") != eq.epsilon:
        raise InputError("epsilon disagrees with alpha+beta-gamma-delta+1")
    return eq, snap


def gauss_from(data: dict) -> GaussEquation:
    return GaussEquation(*(exact_value(data[k], k) for k in ("a", "b", "c")))


def map_from(data) -> RationalMap:
    """A map given as ascending coefficients, or {"num": [...], "den": [...]}."""
    if isinstance(data, list):
        return RationalMap(ExactPolynomial([exact_value(c, "R") for c in data]))
    if isinstance(data, dict):
        num = ExactPolynomial([exact_value(c, "R.num") for c in data["num"]])
        den = ExactPolynomial([exact_value(c, "R.den") for c in data.get("den", ["1"])])
        return RationalMap(num, den)
    raise InputError("R must be a coefficient list or {num, den}")


# -- formatting -----------------------------------------------------------------


def formula(eq: HeunEquation, gauss: GaussEquation, R) -> str:
    f = format_surd
    return (f"Hl({f(eq.d)}, {f(eq.q)}; {f(eq.alpha)}, {f(eq.beta)}, {f(eq.gamma)}, "
            f"{f(eq.delta)}; t) = 2F1({f(gauss.a)}, {f(gauss.b)}; {f(gauss.c)}; {R})")


def _text(obj: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return lines
    if isinstance(obj, list):
        lines = []
        for i, v in enumerate(obj):
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}- [{i}]")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
        return lines
    return [f"{pad}{obj}"]


def render(obj: Any, mode: str) -> str:
    if mode == "text":
        return "\n".join(_text(obj))
    return json.dumps(obj, indent=2)


# -- commands -------------------------------------------------------------------


def _reduction_entry(red, eq=None) -> dict:
    out = red.as_dict()
    if eq is not None:
        out["formula"] = formula(eq, gauss_parameters(red, eq), red.R)
    return out


def cmd_classify(args, data):
    eq, snap = heun_from(data, args.tolerance)
    res = classify(eq, both_orientations=args.both_orientations)
    out = {"equation": eq.as_dict()}
    if snap is not None:
        out["snap"] = snap
    if isinstance(res, NotReducible):
        out.update(res.as_dict())
        return out, 2
    out["reducible"] = True
    out["reductions"] = [_reduction_entry(r, eq) for r in res]
    return out, 0


def _catalogue_instance(data):
    reds = enumerate_all_reductions()
    i = int(data["index"])
    if not 0 <= i < len(reds):
        raise InputError(f"index must lie in 0..{len(reds) - 1}")
    red = reds[i]
    vals = {k: exact_value(data[k], k) for k in red.free_parameters if k in data}
    eq, gauss = red.instantiate(**vals)
    return red, eq, gauss


def cmd_reduce(args, data):
    if "index" in data:
        red, eq, gauss = _catalogue_instance(data)
        return {"equation": eq.as_dict(), "reductions": [_reduction_entry(red, eq)]}, 0
    eq, snap = heun_from(data, args.tolerance)
    res = classify(eq, both_orientations=args.both_orientations)
    if isinstance(res, NotReducible):
        return {"error": "NotReducible", **res.as_dict()}, 1
    out = {"equation": eq.as_dict(), "reductions": [_reduction_entry(r, eq) for r in res]}
    if snap is not None:
        out["snap"] = snap
    return out, 0


def _verify_one(eq, R, gauss, args) -> dict:
    rep = verify_pullback(R, eq, gauss)
    out = {"equation": eq.as_dict(), "map": str(R), "gauss": gauss.as_dict(),
           "pullback": rep.as_dict()}
    ok = rep.ok
    poly = R if isinstance(R, ExactPolynomial) else (R.num if R.is_polynomial() else None)
    if poly is not None and not poly.coeff(0):
        mode = "exact" if args.exact else "mp"
        s = verify_reduction_series(eq, poly, args.order, args.tolerance_series, gauss, mode=mode)
        out["series"] = s.as_dict()
        ok = ok and s.ok
    out["ok"] = ok
    return out


def cmd_verify(args, data):
    if args.all:
        rng = random.Random(args.seed)
        rows = []
        for i, red in enumerate(enumerate_all_reductions()):
            while True:
                vals = {k: random_rational(rng, -2, 2) for k in red.free_parameters}
                eq, gauss = red.instantiate(**vals)
                if eq.alpha * eq.beta and not gauss.c.is_nonpositive_integer() \
                        and not eq.gamma.is_nonpositive_integer():
                    break
            row = _verify_one(eq, red.R, gauss, args)
            row["index"] = i
            rows.append(row)
        ok = all(r["ok"] for r in rows)
        return {"ok": ok, "count": len(rows), "results": rows}, 0 if ok else 1
    if "index" in data:
        red, eq, gauss = _catalogue_instance(data)
        R = red.R
    else:
        eq, _ = heun_from(data["heun"] if "heun" in data else data, args.tolerance)
        if "R" not in data:
            raise InputError("verify needs 'R' (or 'index')")
        R = map_from(data["R"])
        if R.is_polynomial():
            R = R.num
        gauss = gauss_from(data["gauss"]) if "gauss" in data else induced_gauss(R, eq)
        if gauss is None:
            raise InputError("R induces no consistent Gauss equation; supply 'gauss'")
    out = _verify_one(eq, R, gauss, args)
    return out, 0 if out["ok"] else 1


def cmd_table(args, data):
    rows = culmination_table()
    return {"count": len(rows), "rows": [r.as_dict() for r in rows]}, 0


def cmd_enumerate(args, data):
    reds = enumerate_all_reductions(both_orientations=args.both_orientations)
    out = {"count": len(reds), "reductions": []}
    links = link_partners(reds)
    for i, (r, j) in enumerate(zip(reds, links)):
        entry = r.as_dict()
        entry["index"] = i
        entry["partner"] = j
        out["reductions"].append(entry)
    return out, 0


def cmd_trivial(args, data):
    subcases = [SubcaseId(args.subcase)] if args.subcase else list(SubcaseId)
    if args.d is not None:
        if len(subcases) != 1:
            raise InputError("--d needs --subcase")
        d = exact_value(args.d, "d")
        subs = enumerate_trivial(subcases[0], d)
        out = {"subcase": subcases[0].value, "d": format_surd(d),
               "raw": len(raw_trivial(subcases[0], d)), "distinct": len(subs),
               "origin_to_zero": sum(s.maps_origin_to_zero for s in subs)}
        if not args.count_only:
            out["substitutions"] = [s.as_dict() for s in subs]
        return out, 0
    out = []
    for sid in subcases:
        counts = trivial_counts(sid).as_dict()
        if not args.count_only:
            counts["substitutions"] = [s.as_dict() for d, _, _ in trivial_counts(sid).per_d
                                       for s in enumerate_trivial(sid, d)]
        out.append(counts)
    return out, 0


def _general_entries(res) -> list:
    return [r.as_dict() for r in res]


def cmd_lame(args, data):
    lame = LameAlgebraic(exact_value(args.g2, "g2"), exact_value(args.g3, "g3"),
                         exact_value(args.ell, "ell"), exact_value(args.B, "B"))
    res = lame_reduce(lame)
    out = {"lame": lame.as_dict(), "roots": [format_surd(e) for e in lame.roots]}
    if isinstance(res, NotReducible):
        out.update(res.as_dict())
        return out, 0
    out["reducible"] = True
    out["reductions"] = _general_entries(res)
    return out, 0


def cmd_general(args, data):
    gh = GeneralHeun.from_dict(data) if "d4" in data else NaturalGeneralHeun.from_dict(data)
    res = classify_general(gh, both_orientations=args.both_orientations)
    out = {"equation": gh.as_dict()}
    if isinstance(res, NotReducible):
        out.update(res.as_dict())
        return out, 0
    out["reducible"] = True
    out["reductions"] = _general_entries(res)
    return out, 0


HANDLERS = {
    "classify": cmd_classify, "reduce": cmd_reduce, "verify": cmd_verify, "table": cmd_table,
    "enumerate": cmd_enumerate, "trivial": cmd_trivial, "lame": cmd_lame, "general": cmd_general,
}


# -- argument parsing -------------------------------------------------------------


def _positive(x: str) -> float:
    v = float(x)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _order(x: str) -> int:
    v = int(x)
    if v < 4:
        raise argparse.ArgumentTypeError("series order must be at least 4")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--tolerance", type=_positive, default=SNAP_TOL,
                        help="snapping distance for decimal d (default %(default)s)")
    common.add_argument("--series-tolerance", dest="tolerance_series", type=_positive,
                        default=DEFAULT_TOL)
    common.add_argument("--order", type=_order, default=DEFAULT_ORDER, help="series order N")
    common.add_argument("--exact", action="store_true", help="exact series arithmetic")
    common.add_argument("-o", "--out", help="write the result to this file")

    parser = argparse.ArgumentParser(prog="heunreduce",
                                     description="Polynomial reductions of Heun to Gauss equations")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("classify", "reduce", "verify", "general"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("params", nargs="?", help="JSON object, file path, or - for stdin")
        if name != "verify":
            p.add_argument("--both-orientations", action="store_true",
                           help="also return maps with R(0) != 0")
    verify = sub.choices["verify"]
    verify.add_argument("--all", action="store_true",
                        help="verify every catalogue entry at random parameters")
    verify.add_argument("--seed", type=int, default=0)
    sub.add_parser("table", parents=[common])
    p = sub.add_parser("enumerate", parents=[common])
    p.add_argument("--both-orientations", action="store_true")
    p = sub.add_parser("trivial", parents=[common])
    p.add_argument("--subcase", choices=[s.value for s in SubcaseId])
    p.add_argument("--d")
    p.add_argument("--count-only", action="store_true")
    p = sub.add_parser("lame", parents=[common])
    p.add_argument("--g2", default="0")
    p.add_argument("--g3", required=True)
    p.add_argument("--ell", required=True)
    p.add_argument("--B", default="0")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    mode = args.output
    try:
        data = load_params(getattr(args, "params", None))
        result, status = HANDLERS[args.command](args, data)
    except Exception as exc:  # every failure becomes a diagnostic document
        result = {"error": type(exc).__name__, "message": str(exc), "command": args.command}
        status = 1
    text = render(result, mode)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
