"""The multicomplex tower MC(n): n commuting imaginary units i1..in.

MC(1) is the complex numbers, MC(2) is the bicomplex algebra on
(1, i1, i2, i1*i2) <-> (1, i, h, k), and MC(3) is Cockle's "octrine" with
eight components.  Every generator squares to -1; a basis element is a
product of distinct generators, stored densely as 2**n coefficients
indexed by the generator subset bitmask (bit r <-> unit i_{r+1}), which is
exactly subset-lexicographic order.

Products of basis elements follow the subset rule

    e_S * e_T = (-1)**|S & T| * e_(S ^ T)

since each shared generator contributes a square of -1.

The recursive idempotent split peels off one unit per stage: writing an
element as a = x + i1*y with x, y in the algebra on i2..in, the idempotent
pair (1 -+ i1*i2)/2 turns a into the component pair (x + i2*y, x - i2*y),
and recursion over the remaining units flattens the algebra onto
2**(n-1) copies of the complex numbers with componentwise operations.  At
n = 2 this is precisely the bicomplex decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from .bicomplex import Bicomplex
from .scalars import (
    HALF,
    format_scalar,
    is_exact,
    make_complex,
    parse_scalar,
    scalar_norm,
)

MAX_ORDER = 16
NULLIFIC_RTOL = 1e-12


class OrderMismatch(ValueError):
    """Operands live in towers of different order."""


class ZeroInput(ValueError):
    """The operation is undefined at zero."""


@dataclass(frozen=True)
class Multicomplex:
    order: int
    coeffs: tuple

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {self.order}")
        if len(self.coeffs) != 1 << self.order:
            raise ValueError(
                f"order {self.order} needs {1 << self.order} coefficients, "
                f"got {len(self.coeffs)}"
            )
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @staticmethod
    def scalar(order: int, value) -> "Multicomplex":
        coeffs = [0] * (1 << order)
        coeffs[0] = value
        return Multicomplex(order, tuple(coeffs))

    @staticmethod
    def unit(order: int, index: int) -> "Multicomplex":
        """The generator i_{index+1} (index counts from 0)."""
        if not 0 <= index < order:
            raise ValueError(f"unit index {index} out of range for order {order}")
        coeffs = [0] * (1 << order)
        coeffs[1 << index] = 1
        return Multicomplex(order, tuple(coeffs))

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _check_order(self, other: "Multicomplex"):
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_order(other)
        return Multicomplex(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return Multicomplex(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_order(other)
        out = [0] * (1 << self.order)
        for s, a in enumerate(self.coeffs):
            if not a:
                continue
            for t, b in enumerate(other.coeffs):
                if not b:
                    continue
                term = a * b
                if (s & t).bit_count() & 1:
                    term = -term
                out[s ^ t] = out[s ^ t] + term
        return Multicomplex(self.order, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = Multicomplex.scalar(self.order, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _coerce(self, value):
        if isinstance(value, Multicomplex):
            return value
        if is_exact(value) or isinstance(value, float):
            return Multicomplex.scalar(self.order, value)
        return NotImplemented

    # -- idempotent split -------------------------------------------------

    def split(self) -> tuple:
        """Flatten onto 2**(n-1) complex components (the algebra spectrum)."""
        if self.order == 1:
            return (make_complex(self.coeffs[0], self.coeffs[1]),)
        x, y = self._first_unit_parts()
        u = Multicomplex.unit(self.order - 1, 0)
        uy = u * y
        return (x + uy).split() + (x - uy).split()

    @staticmethod
    def unsplit(values, order: int) -> "Multicomplex":
        """Inverse of :meth:`split`; exact on the exact backend."""
        values = tuple(values)
        if len(values) != 1 << (order - 1):
            raise ValueError(
                f"order {order} needs {1 << (order - 1)} components, got {len(values)}"
            )
        if order == 1:
            (z,) = values
            return Multicomplex(1, (z.real, z.imag))
        half = len(values) // 2
        zp = Multicomplex.unsplit(values[:half], order - 1)
        zm = Multicomplex.unsplit(values[half:], order - 1)
        u = Multicomplex.unit(order - 1, 0)
        x = (zp + zm) * HALF
        y = -(u * (zp - zm)) * HALF  # u**2 = -1, so u-inverse is -u
        return Multicomplex._from_first_unit_parts(x, y)

    def _first_unit_parts(self):
        """Write self as x + i1*y with x, y one order down (units renumbered)."""
        sub = 1 << (self.order - 1)
        x = [0] * sub
        y = [0] * sub
        for m in range(sub):
            x[m] = self.coeffs[m << 1]
            y[m] = self.coeffs[(m << 1) | 1]
        return (
            Multicomplex(self.order - 1, tuple(x)),
            Multicomplex(self.order - 1, tuple(y)),
        )

    @staticmethod
    def _from_first_unit_parts(x: "Multicomplex", y: "Multicomplex") -> "Multicomplex":
        order = x.order + 1
        coeffs = [0] * (1 << order)
        for m in range(1 << x.order):
            coeffs[m << 1] = x.coeffs[m]
            coeffs[(m << 1) | 1] = y.coeffs[m]
        return Multicomplex(order, tuple(coeffs))

    def is_zero_divisor(self) -> bool:
        """True iff some spectrum component vanishes (the nullific condition)."""
        if self.is_zero():
            raise ZeroInput("zero divisor test is undefined at zero")
        spectrum = self.split()
        if self.is_exact():
            return any(not z for z in spectrum)
        tol = NULLIFIC_RTOL * (1.0 + scalar_norm(self.coeffs))
        return any(abs(z) <= tol for z in spectrum)

    # -- bicomplex bridge -------------------------------------------------

    def to_bicomplex(self) -> Bicomplex:
        if self.order != 2:
            raise OrderMismatch("only order 2 maps onto the bicomplex algebra")
        return Bicomplex(*self.coeffs)

    @staticmethod
    def from_bicomplex(a: Bicomplex) -> "Multicomplex":
        return Multicomplex(2, a.components())

    # -- text form ---------------------------------------------------------

    def __str__(self):
        return ",".join(format_scalar(c) for c in self.coeffs)

    @staticmethod
    def parse(text: str, order: int) -> "Multicomplex":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 1 << order:
            raise ValueError(
                f"order {order} needs {1 << order} comma-separated coefficients, "
                f"got {len(parts)}"
            )
        return Multicomplex(order, tuple(parse_scalar(p) for p in parts))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [format_scalar(c) for c in self.coeffs],
        }
