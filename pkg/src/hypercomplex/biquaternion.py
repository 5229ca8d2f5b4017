"""Hamilton biquaternions: quaternions whose scalar coefficients are complex.

An element is c0 + c1*i + c2*j + c3*k with complex scalars c_m = a_m + w*b_m,
where the scalar imaginary w commutes with i, j, k and squares to -1 (so the
element is q' + w*q'' for real quaternions q', q'').  The quaternion relations
i**2 = j**2 = k**2 = -1, ij = k = -ji, jk = i, ki = j stay in force.

The algebra is isomorphic to all 2x2 complex matrices through the fixed
representation

    rho(i) = [[I, 0], [0, -I]]   rho(j) = [[0, 1], [-1, 0]]
    rho(k) = [[0, I], [I, 0]]    rho(w) = I * Identity      (I = sqrt(-1))

under which det(rho(q)) = c0^2 + c1^2 + c2^2 + c3^2.  Nullifiers -- nonzero
elements whose product with some nonzero element vanishes, e.g.
(k + w)(k - w) = k**2 + 1 = 0 -- are exactly the elements with vanishing
determinant.

Elements complanar with i (c2 = c3 = 0) form a commutative subalgebra
isomorphic to the bicomplex numbers via w -> h, i -> i.

`solve_quadratic` finds the isolated solutions of q**2 = q*b + c by solvent
enumeration: transpose rho to put coefficients on the left, build the 4x4
block companion of L(t) = t**2*I - t*rho(b)^T - rho(c)^T, and synthesize one
solvent from every pair of eigenvectors with independent top halves.  A
repeated companion eigenvalue means the solution set is not a finite list of
isolated points (e.g. q**2 = -1 has a sphere of solutions), and the solver
raises DegenerateSpectrum instead of guessing representatives.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bicomplex import Bicomplex
from .scalars import (
    HALF,
    RationalComplex,
    format_scalar,
    is_exact,
    parse_scalar,
    times_i,
)

NULLIFIER_RTOL = 1e-12
SOLVE_RESIDUAL_RTOL = 1e-9
DEDUP_RTOL = 1e-7
EIGEN_SEPARATION_RTOL = 1e-8
REAL_PART_RTOL = 1e-9


class ZeroInput(ValueError):
    """The operation is undefined at zero."""


class NotComplanar(ValueError):
    """Element has j or k components, so it lies outside the i-plane."""


class DegenerateSpectrum(RuntimeError):
    """Repeated companion eigenvalues: solutions are not isolated points."""


def _coerce_component(value):
    if isinstance(value, (RationalComplex, complex)):
        return value
    if is_exact(value):
        return RationalComplex.coerce(value)
    if isinstance(value, float):
        return complex(value)
    raise TypeError(f"cannot use {value!r} as a biquaternion component")


@dataclass(frozen=True)
class Biquaternion:
    """c0 + c1*i + c2*j + c3*k with complex scalar components."""

    c0: object = 0
    c1: object = 0
    c2: object = 0
    c3: object = 0

    def __post_init__(self):
        for name in ("c0", "c1", "c2", "c3"):
            object.__setattr__(self, name, _coerce_component(getattr(self, name)))

    def components(self):
        return (self.c0, self.c1, self.c2, self.c3)

    def is_exact(self) -> bool:
        return all(isinstance(c, RationalComplex) for c in self.components())

    def is_zero(self) -> bool:
        return not any(bool(c) for c in self.components())

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Biquaternion(
            self.c0 + other.c0, self.c1 + other.c1,
            self.c2 + other.c2, self.c3 + other.c3,
        )

    __radd__ = __add__

    def __neg__(self):
        return Biquaternion(-self.c0, -self.c1, -self.c2, -self.c3)

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
        a0, a1, a2, a3 = self.components()
        b0, b1, b2, b3 = other.components()
        return Biquaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        )

    def __rmul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    # -- Hamilton's q' + w*q'' form ---------------------------------------

    def real_part(self):
        """q' as component 4-tuple (real parts)."""
        return tuple(c.real for c in self.components())

    def imag_part(self):
        """q'' as component 4-tuple (w-parts)."""
        return tuple(c.imag for c in self.components())

    def is_real_quaternion(self, rtol: float = REAL_PART_RTOL) -> bool:
        scale = 1.0 + self.norm()
        return all(abs(float(v)) <= rtol * scale for v in self.imag_part())

    def norm(self) -> float:
        return math.sqrt(sum(abs(complex(c)) ** 2 for c in self.components()))

    # -- 2x2 matrix representation -----------------------------------------

    def to_matrix(self):
        """rho(self) as a 2x2 nested tuple; exact when components are exact."""
        c0, c1, c2, c3 = self.components()
        return (
            (c0 + times_i(c1), c2 + times_i(c3)),
            (-c2 + times_i(c3), c0 - times_i(c1)),
        )

    @staticmethod
    def from_matrix(m) -> "Biquaternion":
        """Inverse of :meth:`to_matrix` (rho is onto all 2x2 matrices)."""
        (m00, m01), (m10, m11) = m
        return Biquaternion(
            (m00 + m11) * HALF,
            -times_i((m00 - m11) * HALF),
            (m01 - m10) * HALF,
            -times_i((m01 + m10) * HALF),
        )

    def det(self):
        """det(rho(self)) = c0^2 + c1^2 + c2^2 + c3^2."""
        c0, c1, c2, c3 = self.components()
        return c0 * c0 + c1 * c1 + c2 * c2 + c3 * c3

    def is_nullifier(self) -> bool:
        """True iff self is a zero divisor."""
        if self.is_zero():
            raise ZeroInput("nullifier test is undefined at zero")
        d = self.det()
        if self.is_exact():
            return not d
        return abs(complex(d)) <= NULLIFIER_RTOL * (1.0 + self.norm()) ** 2

    # -- bicomplex bridge ----------------------------------------------------

    def complanar_to_bicomplex(self) -> Bicomplex:
        """Map c0 + c1*i with w -> h onto the bicomplex algebra."""
        if bool(self.c2) or bool(self.c3):
            raise NotComplanar("element has j/k components")
        return Bicomplex(self.c0.real, self.c1.real, self.c0.imag, self.c1.imag)

    @staticmethod
    def from_bicomplex(a: Bicomplex) -> "Biquaternion":
        from .scalars import make_complex

        return Biquaternion(make_complex(a.w, a.y), make_complex(a.x, a.z), 0, 0)

    # -- text form ------------------------------------------------------------

    def __str__(self):
        parts = []
        for c, unit in zip(self.components(), ("", "i", "j", "k")):
            if not bool(c):
                continue
            body = f"({format_scalar(c.real)},{format_scalar(c.imag)})"
            parts.append(body if not unit else f"{body}*{unit}")
        return " + ".join(parts) if parts else "(0,0)"

    def __repr__(self):
        return f"Biquaternion({self.c0!r}, {self.c1!r}, {self.c2!r}, {self.c3!r})"

    @staticmethod
    def parse(text: str) -> "Biquaternion":
        comps = {"": 0, "i": 0, "j": 0, "k": 0}
        for sign, re_text, im_text, unit in _bq_terms(text):
            re_v = parse_scalar(re_text)
            im_v = parse_scalar(im_text) if im_text is not None else 0
            value = RationalComplex(*(Fraction(v) for v in (re_v, im_v))) \
                if is_exact(re_v) and is_exact(im_v) else complex(float(re_v), float(im_v))
            comps[unit] = comps[unit] + (-value if sign == "-" else value)
        return Biquaternion(comps[""], comps["i"], comps["j"], comps["k"])

    def to_json(self) -> dict:
        out = {}
        for name, c in zip(("c0", "c1", "c2", "c3"), self.components()):
            out[name] = {"re": format_scalar(c.real), "im": format_scalar(c.imag)}
        return out


_NUM = r"-?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?"
_BQ_TERM_RE = re.compile(
    rf"""\s*(?P<sign>[+-])?\s*
        (?:
            \(\s*(?P<re>{_NUM})\s*,\s*(?P<im>{_NUM})\s*\)
          | (?P<plain>{_NUM})
        )
        (?:\s*\*\s*(?P<unit>[ijk]))?\s*""",
    re.VERBOSE,
)


def _bq_terms(text: str):
    pos, first = 0, True
    text = text.strip()
    if not text:
        raise ValueError("empty element")
    while pos < len(text):
        m = _BQ_TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad element syntax at position {pos}: {text[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing '+'/'-' before position {pos}")
        sign = m.group("sign") or "+"
        if m.group("plain") is not None:
            yield sign, m.group("plain"), None, m.group("unit") or ""
        else:
            yield sign, m.group("re"), m.group("im"), m.group("unit") or ""
        pos, first = m.end(), False


def _coerce(value):
    if isinstance(value, Biquaternion):
        return value
    try:
        return Biquaternion(_coerce_component(value), 0, 0, 0)
    except TypeError:
        return NotImplemented


ZERO = Biquaternion(0, 0, 0, 0)
ONE = Biquaternion(1, 0, 0, 0)
I = Biquaternion(0, 1, 0, 0)
J = Biquaternion(0, 0, 1, 0)
K = Biquaternion(0, 0, 0, 1)
OMEGA = Biquaternion(RationalComplex(Fraction(0), Fraction(1)), 0, 0, 0)


# ---------------------------------------------------------------------------
# quadratic equations q**2 = q*b + c


def solve_quadratic(b: Biquaternion, c: Biquaternion) -> list[Biquaternion]:
    """All isolated solutions of q**2 = q*b + c, deduplicated.

    Raises DegenerateSpectrum when the block companion matrix has a repeated
    eigenvalue, in which case the solution set contains non-isolated points
    and no finite enumeration exists.
    """
    bt = _np_matrix(b).T
    ct = _np_matrix(c).T
    companion = np.block(
        [[np.zeros((2, 2), dtype=complex), np.eye(2, dtype=complex)], [ct, bt]]
    )
    eigvals, eigvecs = np.linalg.eig(companion)

    lam_scale = max(1.0, max(abs(v) for v in eigvals))
    for p, q in itertools.combinations(range(4), 2):
        if abs(eigvals[p] - eigvals[q]) <= EIGEN_SEPARATION_RTOL * lam_scale:
            raise DegenerateSpectrum(
                "repeated companion eigenvalue "
                f"{eigvals[p]:.6g}: solutions are not isolated"
            )

    tol = SOLVE_RESIDUAL_RTOL * (1.0 + b.norm() + c.norm())
    solutions: list[Biquaternion] = []
    for p, q in itertools.combinations(range(4), 2):
        v = np.column_stack([eigvecs[:2, p], eigvecs[:2, q]])
        if abs(np.linalg.det(v)) <= 1e-10:
            continue
        y = v @ np.diag([eigvals[p], eigvals[q]]) @ np.linalg.inv(v)
        candidate = Biquaternion.from_matrix(tuple(map(tuple, y.T)))
        residual = (candidate * candidate - candidate * b - c).norm()
        if residual <= tol:
            solutions.append(candidate)

    return _dedup(solutions)


def _np_matrix(q: Biquaternion) -> np.ndarray:
    rows = q.to_matrix()
    return np.array([[complex(v) for v in row] for row in rows], dtype=complex)


def _dedup(solutions: list[Biquaternion]) -> list[Biquaternion]:
    scale = max([1.0] + [s.norm() for s in solutions])
    kept: list[Biquaternion] = []
    for s in solutions:
        if all(_distance(s, t) > DEDUP_RTOL * scale for t in kept):
            kept.append(s)
    kept.sort(key=lambda s: tuple(
        (round(v.real, 9), round(v.imag, 9)) for v in (complex(x) for x in s.components())
    ))
    return kept


def _distance(a: Biquaternion, b: Biquaternion) -> float:
    return (a - b).norm()
