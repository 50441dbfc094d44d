"""Coefficient rings: the square-zero ring in H_x, H_y, H_z, sector-labeled
classes, and first-order dual numbers.

Monomials are encoded as bit masks (x = 1, y = 2, z = 4).  Coefficients are
``Fraction`` when every input is rational and ``complex`` otherwise; Python's
numeric tower handles the mixing.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ZeroScalarPart

VAR_BIT = {"x": 1, "y": 2, "z": 4}
# Display order: 1, Hx, Hy, Hz, HxHy, HxHz, HyHz, HxHyHz.
MONOMIAL_ORDER = (0, 1, 2, 4, 3, 5, 6, 7)


def monomial_vars(mask: int) -> tuple[str, ...]:
    return tuple(v for v, bit in VAR_BIT.items() if mask & bit)


def monomial_mask(names: Iterable[str]) -> int:
    mask = 0
    for n in names:
        v = n[1:] if n.startswith("H") else n
        bit = VAR_BIT[v]
        if mask & bit:
            raise ValueError(f"repeated generator in {list(names)}")
        mask |= bit
    return mask


def monomial_name(mask: int) -> str:
    vs = monomial_vars(mask)
    return "*".join(f"H{v}" for v in vs) if vs else "1"


def _is_zero(c) -> bool:
    return c == 0


@dataclass(frozen=True)
class NilPoly:
    """Element of Q[H_x,H_y,H_z]/(H_x^2,H_y^2,H_z^2) (or its complexification)."""

    coeffs: tuple = (0,) * 8

    def __post_init__(self) -> None:
        if len(self.coeffs) != 8:
            raise ValueError("NilPoly needs 8 coefficients")

    @classmethod
    def scalar(cls, c) -> "NilPoly":
        return cls((c,) + (0,) * 7)

    @classmethod
    def gen(cls, v: str, c=1) -> "NilPoly":
        out = [0] * 8
        out[VAR_BIT[v]] = c
        return cls(tuple(out))

    @classmethod
    def from_dict(cls, d: Mapping[int, object]) -> "NilPoly":
        out = [0] * 8
        for m, c in d.items():
            out[m] += c
        return cls(tuple(out))

    def __getitem__(self, mask: int):
        return self.coeffs[mask]

    @property
    def scalar_part(self):
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def terms(self) -> Iterator[tuple[int, object]]:
        for m in MONOMIAL_ORDER:
            if not _is_zero(self.coeffs[m]):
                yield m, self.coeffs[m]

    def __add__(self, other) -> "NilPoly":
        other = _as_nil(other)
        return NilPoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "NilPoly":
        return NilPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "NilPoly":
        return self + (-_as_nil(other))

    def __rsub__(self, other) -> "NilPoly":
        return _as_nil(other) - self

    def __mul__(self, other) -> "NilPoly":
        if isinstance(other, Number):
            return NilPoly(tuple(a * other for a in self.coeffs))
        return nil_mul(self, other)

    def __rmul__(self, other) -> "NilPoly":
        return self * other

    def __truediv__(self, other) -> "NilPoly":
        if isinstance(other, Number):
            if other == 0:
                raise ZeroDivisionError("NilPoly division by zero")
            if isinstance(other, int):
                other = Fraction(other)
            return NilPoly(tuple(a / other for a in self.coeffs))
        return nil_mul(self, nil_inv(other))

    def kill(self, mask: int) -> "NilPoly":
        """Set to zero every monomial that involves a generator in ``mask``."""
        return NilPoly(tuple(0 if m & mask else c for m, c in enumerate(self.coeffs)))

    def scale_generators(self, factor) -> "NilPoly":
        """Substitute H_v -> factor * H_v for all v."""
        return NilPoly(
            tuple(c * factor ** bin(m).count("1") for m, c in enumerate(self.coeffs))
        )

    def to_complex(self) -> "NilPoly":
        return NilPoly(tuple(complex(c) for c in self.coeffs))

    def __str__(self) -> str:
        parts = [
            f"{c}" if m == 0 else f"({c})*{monomial_name(m)}" for m, c in self.terms()
        ]
        return " + ".join(parts) if parts else "0"


def _as_nil(u) -> NilPoly:
    return u if isinstance(u, NilPoly) else NilPoly.scalar(u)


ONE = NilPoly.scalar(1)
ZERO = NilPoly()


def nil_mul(u: NilPoly, v: NilPoly) -> NilPoly:
    u, v = _as_nil(u), _as_nil(v)
    out = [0] * 8
    for i, a in enumerate(u.coeffs):
        if _is_zero(a):
            continue
        for j, b in enumerate(v.coeffs):
            if i & j or _is_zero(b):
                continue
            out[i | j] += a * b
    return NilPoly(tuple(out))


def nil_inv(u: NilPoly) -> NilPoly:
    u = _as_nil(u)
    a = u.scalar_part
    if _is_zero(a):
        raise ZeroScalarPart("cannot invert an element with zero scalar part")
    if isinstance(a, int):
        a = Fraction(a)
    n = (u - NilPoly.scalar(a)) / a
    # (1 + n)^(-1) = 1 - n + n^2 - n^3, since n^4 = 0.
    n2 = nil_mul(n, n)
    n3 = nil_mul(n2, n)
    return (ONE - n + n2 - n3) / a


def nil_prod(factors: Iterable[NilPoly]) -> NilPoly:
    out = ONE
    for f in factors:
        out = nil_mul(out, f)
    return out


def frac_part(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)


@dataclass(frozen=True, order=True)
class SectorLabel:
    """Monodromy (m_x, m_y, m_z, m_a), each in {0, 1/3, 2/3}: the sector of
    the group element t_v = exp(2 pi i m_v)."""

    m: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        vals = tuple(frac_part(Fraction(c)) for c in self.m)
        if len(vals) != 4 or any((3 * c).denominator != 1 for c in vals):
            raise ValueError(f"bad sector label {self.m}")
        object.__setattr__(self, "m", vals)

    @classmethod
    def of_degree(cls, beta: Sequence[Fraction], sign: int = -1) -> "SectorLabel":
        """<sign * beta>; the I-function uses sign = -1."""
        return cls(tuple(sign * Fraction(b) for b in beta))

    def inverse(self) -> "SectorLabel":
        return SectorLabel(tuple(-c for c in self.m))

    def __getitem__(self, i: int) -> Fraction:
        return self.m[i]

    def to_json(self) -> list[str]:
        return [str(c) for c in self.m]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.m) + ")"


class AmbientClass:
    """Finite sum of NilPolys placed on sector labels."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Mapping[SectorLabel, NilPoly] | None = None):
        acc: dict[SectorLabel, NilPoly] = {}
        for s, p in (parts or {}).items():
            acc[s] = acc[s] + p if s in acc else p
        self._parts = {s: p for s, p in sorted(acc.items()) if not p.is_zero()}

    @classmethod
    def single(cls, sector: SectorLabel, poly: NilPoly) -> "AmbientClass":
        return cls({sector: poly})

    def items(self):
        return self._parts.items()

    def __iter__(self):
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, s: SectorLabel) -> NilPoly:
        return self._parts.get(s, ZERO)

    def __add__(self, other: "AmbientClass") -> "AmbientClass":
        out = dict(self._parts)
        for s, p in other.items():
            out[s] = out[s] + p if s in out else p
        return AmbientClass(out)

    def __mul__(self, c) -> "AmbientClass":
        return AmbientClass({s: p * c for s, p in self._parts.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "AmbientClass":
        return self * -1

    def __eq__(self, other) -> bool:
        return isinstance(other, AmbientClass) and self._parts == other._parts

    def __hash__(self):
        return hash(tuple(self._parts.items()))

    def is_zero(self) -> bool:
        return not self._parts

    def map_polys(self, fn) -> "AmbientClass":
        return AmbientClass({s: fn(p) for s, p in self._parts.items()})

    def __repr__(self) -> str:
        inner = ", ".join(f"{s}: {p}" for s, p in self._parts.items())
        return f"AmbientClass({{{inner}}})"


@dataclass(frozen=True)
class StateClass:
    """Coefficient vector on the ordered 10-element basis of a chamber."""

    chamber: object
    coeffs: tuple

    def __post_init__(self) -> None:
        if len(self.coeffs) != 10:
            raise ValueError("state classes have 10 coefficients")

    @property
    def degrees(self) -> tuple[int, ...]:
        from .state_space import state_basis

        return tuple(b.degree for b in state_basis(self.chamber))

    def __add__(self, other: "StateClass") -> "StateClass":
        if other.chamber != self.chamber:
            raise ValueError("state classes live on different chambers")
        return StateClass(self.chamber, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, c) -> "StateClass":
        return StateClass(self.chamber, tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)


def reduce_to_state(c: AmbientClass, theta) -> StateClass:
    """Restrict an ambient class to the narrow state space of ``theta``."""
    from .state_space import reduce_to_state as _reduce

    return _reduce(c, theta)


@dataclass(frozen=True)
class DualNum:
    """a + b*eps with eps^2 = 0."""

    a: complex
    b: complex = 0

    def __add__(self, o) -> "DualNum":
        o = _as_dual(o)
        return DualNum(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "DualNum":
        return DualNum(-self.a, -self.b)

    def __sub__(self, o) -> "DualNum":
        return self + (-_as_dual(o))

    def __rsub__(self, o) -> "DualNum":
        return _as_dual(o) - self

    def __mul__(self, o) -> "DualNum":
        o = _as_dual(o)
        return DualNum(self.a * o.a, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inv(self) -> "DualNum":
        if self.a == 0:
            raise ZeroScalarPart("dual number with zero value part")
        return DualNum(1 / self.a, -self.b / (self.a * self.a))

    def __truediv__(self, o) -> "DualNum":
        return self * _as_dual(o).inv()

    def __rtruediv__(self, o) -> "DualNum":
        return _as_dual(o) * self.inv()

    def __pow__(self, n: int) -> "DualNum":
        if n < 0:
            return self.inv() ** (-n)
        return DualNum(self.a**n, n * self.a ** (n - 1) * self.b if n else 0)

    def exp(self) -> "DualNum":
        e = cmath.exp(self.a)
        return DualNum(e, e * self.b)

    def to_nil(self, v: str, scale=1) -> NilPoly:
        """a + b*(scale*H_v)."""
        return NilPoly.scalar(self.a) + NilPoly.gen(v, self.b * scale)


def _as_dual(x) -> DualNum:
    return x if isinstance(x, DualNum) else DualNum(x, 0)
