"""Roots of polynomials with bicomplex or multicomplex coefficients.

The split isomorphism turns one equation over the split algebra into
independent complex polynomial equations, one per spectrum component:
coefficients are decomposed componentwise, each component polynomial is
solved over C, and every combination of component roots is recombined
into a root of the original equation.  With component degrees m and m'
the equation has m*m' roots; when the leading coefficient is not a zero
divisor the degrees agree and the count is m**2.  If some component
polynomial vanishes identically the solution set is an infinite family:
the vanished components are free and the rest are pinned to the root
list of their component polynomial.

The complex root finder is Aberth-Ehrlich simultaneous iteration with a
Cauchy-bound initial circle, falling back to companion-matrix eigenvalues
when it stalls.  Roots of exact-coefficient components are snapped back to
Gaussian rationals whenever exact substitution confirms them, so rational
root sets (and their residuals) come out exactly zero.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .bicomplex import Bicomplex, SplitPair
from .multicomplex import Multicomplex, OrderMismatch
from .scalars import RationalComplex, scalar_norm

ROOT_RESIDUAL_RTOL = 1e-10   # complex root finder acceptance
SOLVE_RESIDUAL_RTOL = 1e-9   # recombined-root substitution check
CLUSTER_RTOL = 1e-7          # multiplicity merge radius
SNAP_DENOMINATOR = 10**6


class ZeroPolynomial(ValueError):
    """All coefficients vanish."""


class NoConvergence(RuntimeError):
    """Root finder failed; message carries iteration diagnostics."""


# ---------------------------------------------------------------------------
# complex root finding


def complex_roots(coeffs: Sequence) -> list[complex]:
    """All roots (with multiplicity) of a complex polynomial.

    ``coeffs`` is degree-ascending with nonzero leading coefficient and
    degree >= 1.  Each returned root r satisfies
    |p(r)| <= 1e-10 * max(1, max|coeff|).
    """
    cs = [complex(c) for c in coeffs]
    if len(cs) < 2:
        raise ValueError("degree must be at least 1")
    if cs[-1] == 0:
        raise ValueError("leading coefficient must be nonzero")
    scale = max(1.0, max(abs(c) for c in cs))
    tol = ROOT_RESIDUAL_RTOL * scale

    # roots at the origin come off exactly
    nzero = 0
    while cs[nzero] == 0:
        nzero += 1
    roots = [0j] * nzero
    cs = cs[nzero:]

    if len(cs) == 2:
        roots.append(-cs[0] / cs[1])
    elif len(cs) > 2:
        found = _aberth(cs)
        if found is None or any(abs(_horner(cs, r)) > tol for r in found):
            found = _companion_roots(cs)
            bad = [abs(_horner(cs, r)) for r in found if abs(_horner(cs, r)) > tol]
            if bad:
                raise NoConvergence(
                    f"root finder stalled: worst residual {max(bad):.3e} "
                    f"exceeds {tol:.3e} after Aberth and companion fallback"
                )
        roots.extend(found)

    roots = _merge_clusters(roots)
    roots.sort(key=lambda r: (r.real, r.imag))
    return roots


def _horner(coeffs, z):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def _aberth(coeffs, max_iter: int = 200) -> Optional[list[complex]]:
    """Aberth-Ehrlich simultaneous iteration; None when it fails to settle."""
    deg = len(coeffs) - 1
    monic = [c / coeffs[-1] for c in coeffs]
    deriv = [k * monic[k] for k in range(1, deg + 1)]
    radius = 1.0 + max(abs(c) for c in monic[:-1])
    # perturbed circle: irrational-ish angle offset plus a mild radius ramp
    # so symmetric polynomials cannot lock the iteration
    zs = [
        radius * (0.75 + 0.5 * j / deg) * cmath.exp(1j * (2 * math.pi * j / deg + 0.43))
        for j in range(deg)
    ]
    scale = max(1.0, max(abs(c) for c in coeffs))
    tol = ROOT_RESIDUAL_RTOL * scale
    for _ in range(max_iter):
        settled = True
        for j in range(deg):
            pj = _horner(monic, zs[j])
            dj = _horner(deriv, zs[j])
            if dj == 0:
                zs[j] += (1e-6 + 1e-6j) * (1 + abs(zs[j]))
                settled = False
                continue
            w = pj / dj
            s = sum(1 / (zs[j] - zs[k]) for k in range(deg) if k != j)
            denom = 1 - w * s
            step = w if denom == 0 else w / denom
            zs[j] -= step
            if abs(step) > 1e-14 * (1 + abs(zs[j])):
                settled = False
        if settled:
            break
    if all(abs(_horner(coeffs, z)) <= tol for z in zs):
        return zs
    return None


def _companion_roots(coeffs) -> list[complex]:
    return [complex(r) for r in np.roots(list(reversed(coeffs)))]


def _merge_clusters(roots: list[complex]) -> list[complex]:
    """Merge roots within 1e-7*scale into centroid copies (multiplicity kept)."""
    if not roots:
        return []
    radius = CLUSTER_RTOL * max(1.0, max(abs(r) for r in roots))
    remaining = sorted(roots, key=lambda r: (r.real, r.imag))
    merged: list[complex] = []
    while remaining:
        seed = remaining.pop(0)
        cluster = [seed]
        rest = []
        for r in remaining:
            if abs(r - seed) <= radius:
                cluster.append(r)
            else:
                rest.append(r)
        remaining = rest
        centroid = sum(cluster) / len(cluster)
        merged.extend([centroid] * len(cluster))
    return merged


_SNAP_DENOMINATORS = (1, 2, 3, 4, 5, 6, 8, 10, 12, 16, 20, 24, 32, 48, 64, 100, 1000, SNAP_DENOMINATOR)


def _eval_exact(coeffs, x: RationalComplex) -> RationalComplex:
    acc = RationalComplex(Fraction(0))
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate_exact(coeffs, root: RationalComplex) -> list:
    """Exact synthetic division by (z - root); the remainder must vanish."""
    quotient_desc = []
    acc = RationalComplex(Fraction(0))
    for c in reversed(coeffs[1:]):
        acc = acc * root + c
        quotient_desc.append(acc)
    assert not (acc * root + coeffs[0]), "deflation by a non-root"
    return list(reversed(quotient_desc))


def _snap_candidate(root: complex, coeffs) -> Optional[RationalComplex]:
    """Gaussian-rational value near a float root that exactly annihilates the
    polynomial; small denominators first, so float noise around a multiple
    rational root still lands on it.  Exact verification rules out false hits."""
    seen = set()
    for d in _SNAP_DENOMINATORS:
        candidate = RationalComplex(
            Fraction(root.real).limit_denominator(d),
            Fraction(root.imag).limit_denominator(d),
        )
        if candidate in seen:
            continue
        seen.add(candidate)
        if not _eval_exact(coeffs, candidate):
            return candidate
    return None


def _component_roots(coeffs) -> list:
    """Roots of one split-component polynomial, exact where provable.

    Exact-coefficient components get their Gaussian-rational roots pulled
    out by exact deflation (with true multiplicity); only the remaining
    rational-root-free part is left to the numeric finder.
    """
    if len(coeffs) <= 1:
        return []
    if not all(isinstance(c, RationalComplex) for c in coeffs):
        return complex_roots(coeffs)

    exact_roots: list[RationalComplex] = []
    current = list(coeffs)
    while len(current) >= 2:
        hit = None
        for r in complex_roots(current):
            hit = _snap_candidate(r, current)
            if hit is not None:
                break
        if hit is None:
            break
        while len(current) >= 2 and not _eval_exact(current, hit):
            exact_roots.append(hit)
            current = _deflate_exact(current, hit)
    remainder_roots = complex_roots(current) if len(current) >= 2 else []
    return exact_roots + remainder_roots


def _strip(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


# ---------------------------------------------------------------------------
# polynomials over the split algebras


@dataclass(frozen=True)
class BicomplexPoly:
    """Degree-ascending bicomplex coefficients, leading coefficient nonzero."""

    coeffs: tuple

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            raise ZeroPolynomial("all coefficients are zero")
        if len(cs) < 2:
            raise ValueError("polynomial degree must be at least 1")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, value: Bicomplex) -> Bicomplex:
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc


@dataclass(frozen=True)
class InfiniteFamily:
    """Solution family when some split component vanished identically."""

    free_components: tuple
    constrained_roots: dict  # component index -> tuple of complex-ish roots


@dataclass(frozen=True)
class RootSet:
    kind: str  # "Finite" | "InfiniteFamily"
    counts: tuple  # effective degree per split component
    roots: tuple = ()
    residuals: tuple = ()
    family: Optional[InfiniteFamily] = None


def split_polynomial(p: BicomplexPoly) -> tuple[list, list]:
    """Componentwise decomposition; trailing zero leading coefficients dropped."""
    pairs = [c.decompose() for c in p.coeffs]
    return _strip([z1 for z1, _ in pairs]), _strip([z2 for _, z2 in pairs])


def solve(p: BicomplexPoly) -> RootSet:
    """All roots via the split; InfiniteFamily when a component vanishes."""
    comps = list(split_polynomial(p))
    return _solve_components(
        comps,
        recompose=lambda vals: Bicomplex.recompose(SplitPair(*vals)),
        substitute=p,
        sort_key=lambda root: _float_key(root.decompose()),
        coeff_norms=[scalar_norm(c.components()) for c in p.coeffs],
    )


def mc_solve(coeffs: Sequence[Multicomplex], order: Optional[int] = None) -> RootSet:
    """Multicomplex analogue of :func:`solve` with 2**(n-1) components."""
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    if not cs:
        raise ZeroPolynomial("all coefficients are zero")
    if len(cs) < 2:
        raise ValueError("polynomial degree must be at least 1")
    n = cs[0].order if order is None else order
    for c in cs:
        if c.order != n:
            raise OrderMismatch(f"coefficient orders differ: {c.order} vs {n}")
    splits = [c.split() for c in cs]
    ncomp = 1 << (n - 1)
    comps = [_strip([s[i] for s in splits]) for i in range(ncomp)]

    def substitute(value: Multicomplex) -> Multicomplex:
        acc = cs[-1]
        for c in reversed(cs[:-1]):
            acc = acc * value + c
        return acc

    return _solve_components(
        comps,
        recompose=lambda vals: Multicomplex.unsplit(vals, n),
        substitute=substitute,
        sort_key=lambda root: _float_key(root.split()),
        coeff_norms=[scalar_norm(c.coeffs) for c in cs],
    )


def _float_key(values) -> tuple:
    key = []
    for z in values:
        key.append(float(z.real))
        key.append(float(z.imag))
    return tuple(key)


def _solve_components(comps, recompose, substitute, sort_key, coeff_norms) -> RootSet:
    counts = tuple(max(len(c) - 1, 0) for c in comps)
    if any(not c for c in comps):
        free = tuple(i for i, c in enumerate(comps) if not c)
        constrained = {
            i: tuple(_component_roots(c)) for i, c in enumerate(comps) if c
        }
        return RootSet(
            kind="InfiniteFamily",
            counts=counts,
            family=InfiniteFamily(free_components=free, constrained_roots=constrained),
        )

    root_lists = [_component_roots(c) for c in comps]
    combos = [[]]
    for lst in root_lists:
        combos = [prefix + [r] for prefix in combos for r in lst]

    tol = SOLVE_RESIDUAL_RTOL * (1.0 + max(coeff_norms))
    roots, residuals = [], []
    for combo in combos:
        if all(isinstance(z, RationalComplex) for z in combo):
            root = recompose(combo)
            value = substitute(root)
            residual = 0.0 if value.is_zero() else _value_norm(value)
        else:
            root = recompose([complex(z) for z in combo])
            residual = _value_norm(substitute(root))
        if residual > tol:
            raise NoConvergence(
                f"recombined root fails substitution: residual {residual:.3e} > {tol:.3e}"
            )
        roots.append(root)
        residuals.append(residual)

    order = sorted(range(len(roots)), key=lambda idx: sort_key(roots[idx]))
    return RootSet(
        kind="Finite",
        counts=counts,
        roots=tuple(roots[i] for i in order),
        residuals=tuple(residuals[i] for i in order),
    )


def _value_norm(value) -> float:
    comps = value.components() if isinstance(value, Bicomplex) else value.coeffs
    return scalar_norm(comps)
