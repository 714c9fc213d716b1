"""Degree-zero Picard lattice of a flag variety.

Fixing an integral Kahler class, the degree of each Picard generator against
it is an integer; dividing the vector of those integers by its GCD gives the
primitive pairing vector ``q``.  Picking a pivot generator produces the
classical two-term degree-zero bundles

    xi_alpha = O_gamma(-q_alpha) (x) O_alpha(q_gamma),  alpha != gamma,

which all have exact degree zero and span the degree-zero sublattice over the
rationals.  Whether they span it over the integers is checked empirically by
``integer_combination`` (it can fail for Picard rank >= 3: the xi span a
finite-index sublattice whenever no pairing entry is a unit; see the tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import DimensionMismatch, IndexOutOfRange, NotIntegral, PicardRankOne
from .flag_geometry import (
    InvariantClass,
    ParabolicFlag,
    _check_class,
    _require_kahler,
    basis_class,
    degree,
    lefschetz_contraction,
)


@dataclass(frozen=True)
class LineBundleClass:
    """Integer exponent vector of a tensor product of Picard generators."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_class(self) -> InvariantClass:
        return InvariantClass(0, tuple(Fraction(c) for c in self.coeffs))

    def scaled(self, m: int) -> "LineBundleClass":
        return LineBundleClass(tuple(m * c for c in self.coeffs))


@dataclass(frozen=True)
class PrimitiveBasis:
    """Pivot data and the two-term degree-zero generators for one flag.

    ``q`` is indexed by the flag's Picard directions and has GCD one; ``tau``
    is the GCD that was divided out of the raw pairing integers.
    """

    pivot_gamma: int
    q: tuple[int, ...]
    tau: int
    basis: tuple[LineBundleClass, ...]


def _integral_representative(flag: ParabolicFlag, omega0: InvariantClass) -> InvariantClass:
    """Scale a rational Kahler class to its minimal integral multiple, at 2*pi power 0."""
    scale = lcm(*(c.denominator for c in omega0.coeffs))
    return InvariantClass(0, tuple(c * scale for c in omega0.coeffs))


def hodge_riemann_pairing(flag: ParabolicFlag, alpha: int, omega0: InvariantClass) -> int:
    """Degree of the Picard generator ``alpha`` against an integral Kahler class.

    The inputs must be integral (integer coefficients, 2*pi power 0); the
    result is then an exact integer.
    """
    _require_kahler(flag, omega0)
    if omega0.two_pi_power != 0 or any(c.denominator != 1 for c in omega0.coeffs):
        raise NotIntegral("reference class must have integer coefficients at 2*pi power 0")
    value, power = degree(flag, basis_class(flag, alpha), omega0)
    if value.denominator != 1 or power != 0:
        raise NotIntegral(f"pairing against alpha_{alpha} is {value} at power {power}")
    return int(value)


def primitive_basis(
    flag: ParabolicFlag, omega0: InvariantClass, gamma: int | None = None
) -> PrimitiveBasis:
    """Two-term degree-zero generators for a rational Kahler class.

    Rational classes are cleared to their minimal integral representative
    first; the resulting ``q`` vector and basis depend only on the ray of
    ``omega0``.  The pivot defaults to the smallest Picard direction.
    """
    if flag.picard_rank < 2:
        raise PicardRankOne("degree-zero lattice is trivial for Picard rank one")
    _require_kahler(flag, omega0)
    if gamma is None:
        gamma = flag.complement[0]
    if gamma not in flag.complement:
        raise IndexOutOfRange(f"pivot alpha_{gamma} is not a Picard direction of this flag")

    integral = _integral_representative(flag, omega0)
    pairings = [hodge_riemann_pairing(flag, a, integral) for a in flag.complement]
    tau = 0
    for p in pairings:
        tau = gcd(tau, p)
    q = tuple(p // tau for p in pairings)

    idx = {a: i for i, a in enumerate(flag.complement)}
    q_gamma = q[idx[gamma]]
    basis = []
    for a in flag.complement:
        if a == gamma:
            continue
        coeffs = [0] * flag.picard_rank
        coeffs[idx[gamma]] = -q[idx[a]]
        coeffs[idx[a]] = q_gamma
        basis.append(LineBundleClass(tuple(coeffs)))
    return PrimitiveBasis(gamma, q, tau, tuple(basis))


def is_primitive(flag: ParabolicFlag, c: InvariantClass, omega0: InvariantClass) -> bool:
    """True exactly when the contraction against the Kahler class vanishes."""
    value, _ = lefschetz_contraction(flag, omega0, c)
    return value == 0


def orthogonal_decompose(
    flag: ParabolicFlag, c: InvariantClass, omega0: InvariantClass
) -> tuple[Fraction, InvariantClass]:
    """Split ``c`` into a multiple of the Kahler class plus a primitive part.

    Returns ``(m, p)`` with ``c = m * omega0 + p`` at the coefficient level
    and the contraction of ``p`` exactly zero.  When the two classes carry
    different 2*pi powers the multiple ``m`` implicitly absorbs the
    difference.
    """
    _check_class(flag, c)
    value, _ = lefschetz_contraction(flag, omega0, c)
    m = value / flag.dim_c
    p = InvariantClass(
        c.two_pi_power,
        tuple(cc - m * oc for cc, oc in zip(c.coeffs, omega0.coeffs)),
    )
    return m, p


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve an overdetermined exact linear system, or None if inconsistent.

    The columns must be linearly independent, which holds for the pivot basis
    matrix: each generator has a nonzero entry in its own private row.
    """
    m, n = len(rows), len(rows[0]) if rows else 0
    aug = [row[:] + [b] for row, b in zip(rows, rhs)]
    for col in range(n):
        target = next((r for r in range(col, m) if aug[r][col] != 0), None)
        if target is None:
            raise AssertionError("basis columns are linearly dependent")
        aug[col], aug[target] = aug[target], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    # every column is eliminated from the trailing rows; consistency is rhs == 0 there
    for r in range(n, m):
        if aug[r][n] != 0:
            return None
    return [aug[i][n] for i in range(n)]


def integer_combination(
    basis: PrimitiveBasis, target: LineBundleClass | Sequence[int]
) -> tuple[int, ...] | None:
    """Integer coordinates of ``target`` over the basis, or None if there are none.

    Solves the exact rational system first and then checks integrality, so a
    rational-but-not-integral solution also reports None.  This is the
    empirical saturation check for the degree-zero lattice.
    """
    coeffs = target.coeffs if isinstance(target, LineBundleClass) else tuple(int(c) for c in target)
    if not basis.basis:
        return () if all(c == 0 for c in coeffs) else None
    rho = len(basis.basis[0].coeffs)
    if len(coeffs) != rho:
        raise DimensionMismatch("target has the wrong number of coefficients")
    rows = [
        [Fraction(b.coeffs[i]) for b in basis.basis]
        for i in range(rho)
    ]
    rhs = [Fraction(c) for c in coeffs]
    solution = _solve_exact(rows, rhs)
    if solution is None:
        return None
    if any(x.denominator != 1 for x in solution):
        return None
    return tuple(int(x) for x in solution)
