"""The fixed model: 13 coordinates, their weights, and chamber combinatorics."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import UnsupportedChamber, WallCharacter

VARIABLES = ("x", "y", "z")
ALL_VARIABLES = ("x", "y", "z", "a")

COORD_NAMES = (
    "x0", "x1", "x2", "y0", "y1", "y2", "z0", "z1", "z2", "a", "px", "py", "pz",
)

# Weights under (t_x, t_y, t_z, t_a, t_R).
WEIGHTS = (
    (1, 0, 0, -1, 0),
    (1, 0, 0, 0, 0),
    (1, 0, 0, 0, 0),
    (0, 1, 0, -1, 0),
    (0, 1, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 0, 1, -1, 0),
    (0, 0, 1, 0, 0),
    (0, 0, 1, 0, 0),
    (0, 0, 0, 3, 0),
    (-3, 0, 0, 0, 1),
    (0, -3, 0, 0, 1),
    (0, 0, -3, 0, 1),
)

SUPERPOTENTIAL = (
    "px*(a*x0^3 + x1^3 + x2^3) + py*(a*y0^3 + y1^3 + y2^3)"
    " + pz*(a*z0^3 + z1^3 + z2^3)"
)


@dataclass(frozen=True)
class GlsmModel:
    coord_names: tuple[str, ...] = COORD_NAMES
    weights: tuple[tuple[int, ...], ...] = WEIGHTS

    def weight(self, rho: int | str) -> tuple[int, ...]:
        return self.weights[character_index(rho)]


MODEL = GlsmModel()


def character_index(rho: int | str) -> int:
    if isinstance(rho, str):
        name = rho[4:] if rho.startswith("rho_") else rho
        name = name.replace("_", "")
        try:
            return COORD_NAMES.index(name)
        except ValueError:
            raise KeyError(f"unknown character {rho!r}") from None
    if not 0 <= rho < len(COORD_NAMES):
        raise KeyError(f"character index {rho} out of range")
    return rho


@dataclass(frozen=True)
class ChamberChar:
    """A character (e_x, e_y, e_z, e_a) of G lying in the interior of a chamber."""

    exponents: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if len(self.exponents) != 4:
            raise ValueError("a chamber character has 4 entries")
        if any(e == 0 for e in self.exponents):
            raise WallCharacter(f"{self.exponents} has a zero exponent")
        if self.exponents[3] < 0:
            raise UnsupportedChamber("chambers with a in the subscript are not supported")

    @property
    def signs(self) -> str:
        return "".join("+" if e > 0 else "-" for e in self.exponents)

    @property
    def superscript_vars(self) -> tuple[str, ...]:
        return tuple(v for v, e in zip(VARIABLES, self.exponents) if e > 0)

    @property
    def subscript_vars(self) -> tuple[str, ...]:
        return tuple(v for v, e in zip(VARIABLES, self.exponents) if e < 0)

    def is_subscript(self, v: str) -> bool:
        return v in self.subscript_vars

    @property
    def name(self) -> str:
        sup = "".join(self.superscript_vars) + "a"
        sub = "".join(self.subscript_vars)
        return f"theta^{sup}_{sub}" if sub else f"theta^{sup}"

    @property
    def lift(self) -> tuple[Fraction, ...]:
        """The character of G x C*_R lifting this one (t_R exponent last)."""
        r = sum(Fraction(-e, 3) for e in self.exponents[:3] if e < 0)
        return tuple(Fraction(e) for e in self.exponents) + (r,)

    def canonical(self) -> "ChamberChar":
        return ChamberChar(tuple(3 if e > 0 else -3 for e in self.exponents))

    def moved(self, v: str) -> "ChamberChar":
        """The chamber with variable v flipped between superscript and subscript."""
        i = VARIABLES.index(v)
        e = list(self.exponents)
        e[i] = -e[i]
        return ChamberChar(tuple(e))

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents), "subscript": list(self.subscript_vars)}

    def __str__(self) -> str:
        return self.signs


THETA = {
    "xyza": ChamberChar((3, 3, 3, 3)),
    "xya_z": ChamberChar((3, 3, -3, 3)),
    "xa_yz": ChamberChar((3, -3, -3, 3)),
    "a_xyz": ChamberChar((-3, -3, -3, 3)),
}
THETA_CHAIN = (THETA["xyza"], THETA["xya_z"], THETA["xa_yz"], THETA["a_xyz"])


def parse_chamber(spec: str | Sequence) -> ChamberChar:
    """Parse "++-+", "3,3,-3,3", a name such as "xya_z" or "theta^xya_z",
    or a 4-sequence of signs or integers."""
    if isinstance(spec, ChamberChar):
        return spec
    if isinstance(spec, str):
        s = spec.strip()
        name = re.fullmatch(r"(?:theta\^)?([xyza]*)(?:_([xyza]*))?", s)
        if name and s and set(s) - set("+-0"):
            sup, sub = name.group(1), name.group(2) or ""
            if sorted(sup + sub) != list("axyz"):
                raise ValueError(f"chamber name {spec!r} must use each of x, y, z, a once")
            return ChamberChar(tuple(3 if c in sup else -3 for c in "xyza"))
        if "," in s:
            entries: list = [t.strip() for t in s.split(",")]
        else:
            entries = list(s)
    else:
        entries = list(spec)
    if len(entries) != 4:
        raise ValueError(f"chamber spec {spec!r} must have 4 entries")
    exps = []
    for t in entries:
        if t in ("+", "-", "0"):
            exps.append({"+": 3, "-": -3, "0": 0}[t])
        else:
            try:
                exps.append(int(t))
            except (TypeError, ValueError):
                raise ValueError(f"bad chamber entry {t!r}") from None
    return ChamberChar(tuple(exps))


def all_sign_patterns() -> list[str]:
    return ["".join(p) for p in itertools.product("+-", repeat=4)]


@dataclass(frozen=True)
class CoordinateSubspace:
    coords: tuple[str, ...]

    def contains(self, point: Sequence[complex]) -> bool:
        return all(point[COORD_NAMES.index(c)] == 0 for c in self.coords)

    def __str__(self) -> str:
        return "{" + "=".join(self.coords) + "=0}"


def unstable_components(theta: ChamberChar) -> list[CoordinateSubspace]:
    comps = []
    for v in VARIABLES:
        if theta.is_subscript(v):
            comps.append(CoordinateSubspace((f"p{v}",)))
        else:
            comps.append(CoordinateSubspace((f"{v}0", f"{v}1", f"{v}2")))
    comps.append(CoordinateSubspace(("a",)))
    return comps


def is_semistable(point: Sequence[complex], theta: ChamberChar) -> bool:
    if len(point) != 13:
        raise ValueError("a point of V has 13 coordinates")
    return not any(c.contains(point) for c in unstable_components(theta))


@dataclass(frozen=True)
class DivisorForm:
    """Integer combination c_x H_x + c_y H_y + c_z H_z."""

    coeffs: tuple[int, int, int] = (0, 0, 0)

    def __getitem__(self, v: str) -> int:
        return self.coeffs[VARIABLES.index(v)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        parts = []
        for v, c in zip(VARIABLES, self.coeffs):
            if c == 0:
                continue
            h = f"H{v}"
            parts.append(h if c == 1 else f"-{h}" if c == -1 else f"{c}{h}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def toric_divisor(rho: int | str, theta: ChamberChar) -> DivisorForm:
    w = MODEL.weight(rho)
    return DivisorForm(
        tuple(0 if theta.is_subscript(v) else w[i] for i, v in enumerate(VARIABLES))
    )


def permute_chamber(theta: ChamberChar, perm: Iterable[str]) -> ChamberChar:
    """Relabel variables: perm[i] is the new name of VARIABLES[i]."""
    perm = tuple(perm)
    e = [0, 0, 0]
    for i, v in enumerate(perm):
        e[VARIABLES.index(v)] = theta.exponents[i]
    return ChamberChar((e[0], e[1], e[2], theta.exponents[3]))


def permute_coord(name: str, perm: Sequence[str]) -> str:
    for i, v in enumerate(VARIABLES):
        if name.startswith(v) or name == f"p{v}":
            return name.replace(v, perm[i], 1)
    return name
