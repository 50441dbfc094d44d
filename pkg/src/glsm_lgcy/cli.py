"""Command-line front end.

    glsm chambers [--detail SPEC]
    glsm statespace SPEC
    glsm degrees SPEC --cutoff R
    glsm ifunction SPEC --cutoff R --hbar H [--givental] [--eval qx,qy,qz,qa]
    glsm wallcross FROM TO --cutoff R --hbar H
    glsm verify [--all] [--seed N]

Bad arguments exit with status 2, a failed verification with 1.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .acceptance import DEFAULT_SEED, run_all
from .degree_lattice import beta_theta, enumerate_ifunction_degrees
from .errors import GlsmError
from .i_series import build_givental, build_i_series, evaluate
from .model_chambers import (
    COORD_NAMES,
    THETA,
    ChamberChar,
    all_sign_patterns,
    parse_chamber,
    toric_divisor,
    unstable_components,
)
from .serialize import dumps, encode_scalar, encode_series
from .state_space import degree_histogram, enumerate_sectors, state_basis
from .wall_crossing import lgcy_matrix, term_match


@dataclass(frozen=True)
class RunConfig:
    chambers: tuple[ChamberChar, ...] = ()
    cutoff: Fraction = Fraction(2)
    hbar: Fraction | complex = Fraction(1)
    fmt: str = "text"
    eval_point: tuple[complex, ...] | None = None
    seed: int = DEFAULT_SEED


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


_COMPLEX = re.compile(r"^\s*([+-]?[\d./]+)?\s*(?:([+-])\s*([\d./]*)\s*[ij])?\s*$")


def parse_complex(text: str):
    """"2+i", "1/2", "-3i", "0.5-2i".  Rational input stays a Fraction."""
    s = text.strip().replace(" ", "")
    if re.fullmatch(r"[+-]?[\d./]*[ij]", s):
        s = "0" + (s if s[0] in "+-" else "+" + s)
    m = _COMPLEX.match(s)
    if not m or (m.group(1) is None and m.group(2) is None):
        raise UsageError(f"not a complex number: {text!r}")
    re_part = parse_rational(m.group(1)) if m.group(1) else Fraction(0)
    if m.group(2) is None:
        return re_part
    im = parse_rational(m.group(3)) if m.group(3) else Fraction(1)
    if m.group(2) == "-":
        im = -im
    return complex(float(re_part), float(im)) if im else re_part


def _chamber(text: str) -> ChamberChar:
    return parse_chamber(text)


def cmd_chambers(args, cfg: RunConfig) -> dict:
    if args.detail:
        theta = _chamber(args.detail)
        data = {
            "chamber": theta.to_json(),
            "name": theta.name,
            "unstable": [str(c) for c in unstable_components(theta)],
            "divisors": {r: str(toric_divisor(r, theta)) for r in COORD_NAMES},
        }
        text = [f"{theta.name}  exponents {list(theta.exponents)}", "unstable locus:"]
        text += [f"  {u}" for u in data["unstable"]]
        text += ["toric divisors:"] + [f"  D_{r} = {d}" for r, d in data["divisors"].items()]
        return {"json": data, "text": text}
    reps = set(THETA.values())
    rows = []
    for pattern in all_sign_patterns():
        try:
            theta = parse_chamber(pattern)
        except GlsmError:
            # a-exponent negative: outside the chambers treated here
            rows.append({"signs": pattern, "supported": False, "name": None, "unstable": None})
            continue
        rows.append({"signs": pattern, "supported": theta in reps, "name": theta.name,
                     "unstable": [str(c) for c in unstable_components(theta)]})
    text = [
        f"{r['signs']}  {'*' if r['supported'] else ' '}  {r['name'] or '-':<14} "
        + (" u ".join(r["unstable"]) if r["unstable"] else "")
        for r in rows
    ]
    text.append(
        f"{sum(r['supported'] for r in rows)} supported representatives (*) of {len(rows)}; "
        "unmarked named rows are their images under permuting x, y, z"
    )
    return {"json": rows, "text": text}


def cmd_statespace(args, cfg: RunConfig) -> dict:
    theta = cfg.chambers[0]
    sectors = [
        {
            "element": r.element_str(),
            "sector": r.sector.to_json(),
            "age": str(r.age),
            "narrow": r.narrow,
            "dim": r.locus_dim,
            "points": r.n_points,
        }
        for r in enumerate_sectors(theta)
    ]
    basis = [{"label": b.label, "degree": b.degree} for b in state_basis(theta)]
    hist = degree_histogram(theta)
    text = [f"{'element':<18} {'age':>4} {'narrow':>7} {'dim':>4}"]
    text += [f"{s['element']:<18} {s['age']:>4} {str(s['narrow']):>7} {s['dim']:>4}" for s in sectors]
    text += ["", "basis:"] + [f"  {b['degree']}  {b['label']}" for b in basis]
    text.append(f"degree histogram (0,2,4,6): {hist}")
    return {"json": {"chamber": theta.to_json(), "sectors": sectors, "basis": basis,
                     "histogram": list(hist)}, "text": text}


def cmd_degrees(args, cfg: RunConfig) -> dict:
    theta = cfg.chambers[0]
    degs = enumerate_ifunction_degrees(theta, cfg.cutoff)
    text = [f"{beta_theta(b, 1, theta)}  {b.to_json()}" for b in degs]
    return {"json": [b.to_json() for b in degs], "text": text}


def cmd_ifunction(args, cfg: RunConfig) -> dict:
    theta = cfg.chambers[0]
    build = build_givental if args.givental else build_i_series
    series = build(theta, cfg.hbar, cfg.cutoff)
    data = encode_series(series)
    if cfg.eval_point is not None:
        data["value"] = [encode_scalar(c) for c in evaluate(series, cfg.eval_point)]
    return {"json": data, "text": [dumps(data)]}


def cmd_wallcross(args, cfg: RunConfig) -> dict:
    a, b = cfg.chambers
    matrix = lgcy_matrix(a, b, cfg.hbar)  # NotAdjacent unless one superscript variable moves
    moved = [v for v in "xyz" if a.is_subscript(v) != b.is_subscript(v)]
    rows = term_match(a, moved[0], cfg.hbar, cfg.cutoff) if moved else []
    worst = max((t.rel_error for t in rows), default=0.0)
    mat_json = [[encode_scalar(c) for c in row] for row in matrix]
    data = {
        "from": a.to_json(),
        "to": b.to_json(),
        "cutoff": str(cfg.cutoff),
        "hbar": encode_scalar(cfg.hbar),
        "terms": [{"degree": t.degree.to_json(), "Lpowers": list(t.lpowers), "rel_error": t.rel_error}
                  for t in rows],
        "matrix": mat_json,
        "max_rel_error": worst,
    }
    text = [f"{'degree':<28} {'L':<9} rel. error"]
    text += [f"{str(t.degree.to_json()):<28} {str(t.lpowers):<9} {t.rel_error:.2e}" for t in rows]
    text += ["", "matrix (row-major, [re, im]):", json.dumps(mat_json), f"max relative error {worst:.3e}"]
    return {"json": data, "text": text}


def cmd_verify(args, cfg: RunConfig) -> dict:
    results = run_all(cfg.seed)
    text = []
    for r in results:
        text.append(r.summary())
        if args.all or not r.passed:
            text += [f"      {line}" for line in r.lines]
    ok = all(r.passed for r in results)
    text.append(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    data = [{"number": r.number, "title": r.title, "passed": r.passed, "lines": r.lines} for r in results]
    return {"json": data, "text": text, "status": 0 if ok else 1}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p = argparse.ArgumentParser(prog="glsm", description="I-functions and wall crossing for the cubic-fibration GLSM")
    sub = p.add_subparsers(dest="command", required=True)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    c = sub.add_parser("chambers", help="list the 16 sign patterns")
    c.add_argument("--detail", metavar="SPEC")
    c.set_defaults(func=cmd_chambers)

    s = sub.add_parser("statespace", help="sectors and basis of the state space")
    s.add_argument("chamber")
    s.set_defaults(func=cmd_statespace)

    d = sub.add_parser("degrees", help="summation lattice up to a cutoff")
    d.add_argument("chamber")
    d.add_argument("--cutoff", default="2")
    d.set_defaults(func=cmd_degrees)

    i = sub.add_parser("ifunction", help="truncated I-function")
    i.add_argument("chamber")
    i.add_argument("--cutoff", default="2")
    i.add_argument("--hbar", default="1")
    i.add_argument("--givental", action="store_true")
    i.add_argument("--eval", metavar="qx,qy,qz,qa")
    i.set_defaults(func=cmd_ifunction)

    w = sub.add_parser("wallcross", help="continue across one wall and compare")
    w.add_argument("source")
    w.add_argument("target")
    w.add_argument("--cutoff", default="2")
    w.add_argument("--hbar", default="1")
    w.set_defaults(func=cmd_wallcross)

    v = sub.add_parser("verify", help="run the acceptance suite")
    v.add_argument("--all", action="store_true", help="print every measurement")
    v.set_defaults(func=cmd_verify)
    return p


def make_config(args) -> RunConfig:
    chambers = []
    for name in ("chamber", "source", "target"):
        if getattr(args, name, None) is not None:
            chambers.append(_chamber(getattr(args, name)))
    cutoff = parse_rational(getattr(args, "cutoff", "2"))
    if cutoff < 0:
        raise UsageError("cutoff must be nonnegative")
    hbar = parse_complex(getattr(args, "hbar", "1"))
    if hbar == 0:
        raise UsageError("hbar must be nonzero")
    point = None
    if getattr(args, "eval", None):
        point = tuple(complex(parse_complex(t)) for t in args.eval.split(","))
        if len(point) != 4:
            raise UsageError("--eval needs four values")
    return RunConfig(tuple(chambers), cutoff, hbar, args.format, point, args.seed)


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # "-+-+" or "-3,3,3,3" would be read as an option; a leading space keeps it positional
    argv = [" " + a if re.fullmatch(r"[+-]{4}|-\d+(,\s*-?\d+){3}", a) else a for a in argv]
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        out = args.func(args, cfg)
    except (UsageError, GlsmError, ValueError) as exc:
        print(f"glsm: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if cfg.fmt == "json":
        print(dumps(out["json"]))
    else:
        print("\n".join(out["text"]))
    return out.get("status", 0)


if __name__ == "__main__":
    sys.exit(main())
