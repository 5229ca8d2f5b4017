"""Bicomplex numbers (tessarines): the commutative algebra on 1, i, h, k = ih.

Unit relations: i**2 = h**2 = -1, k**2 = +1, and everything commutes.  The
same algebra appears in the literature in two dressings:

* Segre's bicomplex numbers x + i*y with complex x, y over a second
  imaginary h -- the basis used here;
* Cockle's tessarines w + i*x + j*y + k*z with j**2 = +1, k = ij.  Cockle's
  j is this module's k (both square to +1); Cockle's k = ij is -h here.

The algebra is isomorphic to C (+) C.  The isomorphism is realized by
:meth:`Bicomplex.decompose`: with the idempotents g = (1 - hi)/2 and
g' = (1 + hi)/2, every element equals Z*g + Z'*g' for complex Z, Z', and
multiplication acts componentwise on (Z, Z').  The zero divisors are
exactly the elements with Z = 0 or Z' = 0; they form the two ideals
generated by -h + i and h + i.

All values are immutable and every operation is a pure function, so
anything here can be shared freely across threads.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .scalars import (
    HALF,
    abs_sq,
    format_scalar,
    is_exact,
    make_complex,
    parse_scalar,
    scalar_norm,
)

# Float-backend zero-divisor test: |Z| <= NULLIFIC_RTOL * (1 + ||a||).
NULLIFIC_RTOL = 1e-12


class NotInvertible(ArithmeticError):
    """Raised for zero or nullific (zero-divisor) elements."""


class IdealTag(enum.Enum):
    NONE = "None"
    FIRST_SET = "FirstSet"
    SECOND_SET = "SecondSet"
    ZERO = "Zero"


class SplitPair(NamedTuple):
    """Image of an element under the idempotent split, (Z, Z')."""

    z1: object
    z2: object


@dataclass(frozen=True)
class Bicomplex:
    """w + x*i + y*h + z*k with scalar components (exact rational or float)."""

    w: object = 0
    x: object = 0
    y: object = 0
    z: object = 0

    # -- basics ---------------------------------------------------------

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.components())

    def is_zero(self) -> bool:
        return not (self.w or self.x or self.y or self.z)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Bicomplex(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z
        )

    __radd__ = __add__

    def __neg__(self):
        return Bicomplex(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        return Bicomplex(
            a.w * b.w - a.x * b.x - a.y * b.y + a.z * b.z,
            a.w * b.x + a.x * b.w - a.y * b.z - a.z * b.y,
            a.w * b.y + a.y * b.w - a.x * b.z - a.z * b.x,
            a.w * b.z + a.z * b.w + a.x * b.y + a.y * b.x,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- Segre split ----------------------------------------------------

    def decompose(self) -> SplitPair:
        """(Z, Z') with self = Z*g + Z'*g'; Z is self at i -> h, Z' at i -> -h."""
        return SplitPair(
            make_complex(self.w - self.z, self.x + self.y),
            make_complex(self.w + self.z, self.y - self.x),
        )

    @staticmethod
    def recompose(pair: SplitPair) -> "Bicomplex":
        """Inverse of :meth:`decompose` (exact on the exact backend)."""
        z1, z2 = pair
        p, q = z1.real, z1.imag
        pp, qq = z2.real, z2.imag
        return Bicomplex(
            (p + pp) * HALF, (q - qq) * HALF, (q + qq) * HALF, (pp - p) * HALF
        )

    def ideal(self) -> IdealTag:
        """Which nullific set (zero-divisor ideal) the element belongs to."""
        if self.is_zero():
            return IdealTag.ZERO
        z1, z2 = self.decompose()
        if self.is_exact():
            z1_zero, z2_zero = not z1, not z2
        else:
            tol = NULLIFIC_RTOL * (1.0 + scalar_norm(self.components()))
            z1_zero, z2_zero = abs(z1) <= tol, abs(z2) <= tol
        if z2_zero:
            return IdealTag.FIRST_SET
        if z1_zero:
            return IdealTag.SECOND_SET
        return IdealTag.NONE

    def is_zero_divisor(self) -> bool:
        return self.ideal() in (IdealTag.FIRST_SET, IdealTag.SECOND_SET)

    # -- norm and inversion ----------------------------------------------

    def norm_sq(self):
        """|Z|^2 * |Z'|^2 -- exact on rationals; equals norm()**2."""
        z1, z2 = self.decompose()
        return abs_sq(z1) * abs_sq(z2)

    def norm(self) -> float:
        """Multiplicative norm |Z|*|Z'|; zero exactly on zero divisors and 0."""
        return math.sqrt(float(self.norm_sq()))

    def inverse(self) -> "Bicomplex":
        tag = self.ideal()
        if tag is not IdealTag.NONE:
            raise NotInvertible(f"element is not invertible (ideal tag {tag.value})")
        z1, z2 = self.decompose()
        return Bicomplex.recompose(SplitPair(1 / z1, 1 / z2))

    # -- involutions -----------------------------------------------------

    def conj_i(self) -> "Bicomplex":
        """i -> -i (k = ih flips too)."""
        return Bicomplex(self.w, -self.x, self.y, -self.z)

    def conj_h(self) -> "Bicomplex":
        """h -> -h (k flips too)."""
        return Bicomplex(self.w, self.x, -self.y, -self.z)

    def conj_ih(self) -> "Bicomplex":
        """Both units flipped; k is fixed."""
        return Bicomplex(self.w, -self.x, -self.y, self.z)

    def conjugates(self):
        return (self.conj_i(), self.conj_h(), self.conj_ih())

    # -- text form ---------------------------------------------------------

    def __str__(self):
        terms = []
        for coeff, unit in zip(self.components(), ("", "i", "h", "k")):
            if not coeff:
                continue
            sign = "-" if _is_negative(coeff) else "+"
            mag = format_scalar(-coeff if sign == "-" else coeff)
            terms.append((sign, mag if not unit else f"{mag}*{unit}"))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = (first if first_sign == "+" else f"-{first}")
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Bicomplex({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    @staticmethod
    def parse(text: str) -> "Bicomplex":
        """Parse 'w + x*i + y*h + z*k' with rational (p/q) or float literals."""
        comps = {"": 0, "i": 0, "h": 0, "k": 0}
        for sign, coeff_text, unit in _element_terms(text):
            coeff = parse_scalar(coeff_text) if coeff_text else 1
            comps[unit] = comps[unit] + (-coeff if sign == "-" else coeff)
        return Bicomplex(comps[""], comps["i"], comps["h"], comps["k"])

    def to_json(self) -> dict:
        return {
            "w": format_scalar(self.w),
            "x": format_scalar(self.x),
            "y": format_scalar(self.y),
            "z": format_scalar(self.z),
        }


def _coerce(value):
    if isinstance(value, Bicomplex):
        return value
    if is_exact(value) or isinstance(value, float):
        return Bicomplex(value, 0, 0, 0)
    return NotImplemented


def _is_negative(scalar) -> bool:
    try:
        return scalar < 0
    except TypeError:
        return False


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:\s*/\s*\d+)?)
            (?:\s*\*\s*(?P<unit>[ihk]))?
          | (?P<bare_unit>[ihk])
        )\s*""",
    re.VERBOSE,
)


def _element_terms(text: str):
    """Yield (sign, coefficient-text, unit) triples; '' unit = scalar term."""
    pos, first = 0, True
    text = text.strip()
    if not text:
        raise ValueError("empty element")
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad element syntax at position {pos}: {text[pos:]!r}")
        sign = m.group("sign") or "+"
        if not first and m.group("sign") is None:
            raise ValueError(f"missing '+'/'-' before position {pos}")
        if m.group("bare_unit"):
            coeff_text, unit = "", m.group("bare_unit")
        else:
            coeff_text = m.group("coeff").replace(" ", "")
            unit = m.group("unit") or ""
        yield sign, coeff_text, unit
        pos, first = m.end(), False


ZERO = Bicomplex(0, 0, 0, 0)
ONE = Bicomplex(1, 0, 0, 0)
I = Bicomplex(0, 1, 0, 0)
H = Bicomplex(0, 0, 1, 0)
K = Bicomplex(0, 0, 0, 1)

# Segre idempotents g = (1 - hi)/2, g' = (1 + hi)/2 and the nullific units
# k1 = hg = (h + i)/2, k2 = -hg' = (-h + i)/2.
G = Bicomplex(Fraction(1, 2), 0, 0, Fraction(-1, 2))
G_PRIME = Bicomplex(Fraction(1, 2), 0, 0, Fraction(1, 2))
K1 = Bicomplex(0, Fraction(1, 2), Fraction(1, 2), 0)
K2 = Bicomplex(0, Fraction(1, 2), Fraction(-1, 2), 0)
