"""JSON encoding of chambers, classes and series.

Rationals are strings ("-1/3") or {"num", "den"} pairs, complex numbers
[re, im] with 17 significant digits, so a dump re-parses to an equal value.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .coh_ring import AmbientClass, NilPoly, SectorLabel, monomial_mask, monomial_vars
from .degree_lattice import Degree
from .model_chambers import ChamberChar
from .i_series import ISeries


def _float(x: float) -> str | float:
    return float(f"{x:.17g}")


def encode_scalar(c):
    if isinstance(c, (int, Fraction)):
        c = Fraction(c)
        return {"num": str(c.numerator), "den": str(c.denominator)}
    c = complex(c)
    return [_float(c.real), _float(c.imag)]


def decode_scalar(obj):
    if isinstance(obj, dict):
        return Fraction(int(obj["num"]), int(obj["den"]))
    return complex(obj[0], obj[1])


def encode_class(cls: AmbientClass) -> list[dict]:
    out = []
    for sector, poly in cls.items():
        for mask, c in poly.terms():
            out.append(
                {
                    "sector": sector.to_json(),
                    "monomial": [f"H{v}" for v in monomial_vars(mask)],
                    "coeff": encode_scalar(c),
                }
            )
    return out


def decode_class(items: list[dict]) -> AmbientClass:
    parts: dict[SectorLabel, NilPoly] = {}
    for it in items:
        sector = SectorLabel(tuple(Fraction(s) for s in it["sector"]))
        mask = monomial_mask(m[1:] for m in it["monomial"])
        coeffs = [0] * 8
        coeffs[mask] = decode_scalar(it["coeff"])
        p = NilPoly(tuple(coeffs))
        parts[sector] = parts[sector] + p if sector in parts else p
    return AmbientClass(parts)


def encode_series(s: ISeries) -> dict:
    return {
        "chamber": s.chamber.to_json(),
        "hbar": encode_scalar(s.hbar),
        "cutoff": str(s.cutoff),
        "givental": s.givental,
        "shift": Degree(s.shift).to_json(),
        "terms": [
            {
                "exponent": [str(e) for e in exponent],
                "logpoly": [
                    {"Lpowers": list(pw), "class": encode_class(cls)} for pw, cls in logpoly.items()
                ],
            }
            for exponent, logpoly in s.terms.items()
        ],
    }


def decode_series(obj: dict) -> ISeries:
    s = ISeries(
        ChamberChar(tuple(obj["chamber"]["exponents"])),
        decode_scalar(obj["hbar"]),
        Fraction(obj["cutoff"]),
        bool(obj["givental"]),
        Degree(obj["shift"]),
    )
    for t in obj["terms"]:
        s.terms[tuple(Fraction(e) for e in t["exponent"])] = {
            tuple(lp["Lpowers"]): decode_class(lp["class"]) for lp in t["logpoly"]
        }
    return s


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=1)
