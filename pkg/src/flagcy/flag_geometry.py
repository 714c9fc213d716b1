"""Invariant (1,1)-cohomology calculus on generalized flag varieties.

A flag variety is encoded by a root datum together with a parabolic subset
``I`` of simple-root indices (1-based).  The simple roots outside ``I`` index
the Picard generators; every invariant real (1,1)-class is an exact rational
vector over that basis, with an explicit integer power of 2*pi carried
separately so that no transcendental factor is ever multiplied out.

All invariants reduce to coroot pairings of the attached weights against the
positive roots not supported on ``I``: contraction against a Kahler class,
the eigenvalue list of the associated endomorphism, volumes and degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatch, IndexOutOfRange, NotKahler
from .root_system import (
    PositiveRoot,
    RootDatum,
    Weight,
    pairing,
    root_as_weight,
    weyl_vector,
)


@dataclass(frozen=True)
class ParabolicFlag:
    """A flag variety: root datum plus parabolic subset of simple roots.

    ``complement`` lists the simple-root indices outside the parabolic set in
    ascending order; invariant classes are coefficient vectors over it.
    ``phi_complement`` holds the positive roots with support meeting the
    complement, in the root datum's deterministic order.  Its length is the
    complex dimension.
    """

    datum: RootDatum
    parabolic_set: frozenset[int]
    complement: tuple[int, ...]
    phi_complement: tuple[PositiveRoot, ...]

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def dim_c(self) -> int:
        return len(self.phi_complement)

    @property
    def picard_rank(self) -> int:
        return len(self.complement)


def make_flag(datum: RootDatum, parabolic: Iterable[int] = ()) -> ParabolicFlag:
    """Build the flag for a parabolic subset of 1-based simple-root indices."""
    pset = frozenset(int(i) for i in parabolic)
    for i in pset:
        if not 1 <= i <= datum.rank:
            raise IndexOutOfRange(f"simple-root index {i} outside 1..{datum.rank}")
    complement = tuple(i for i in range(1, datum.rank + 1) if i not in pset)
    if not complement:
        raise IndexOutOfRange("parabolic set must be a proper subset of the simple roots")
    phi = tuple(
        beta
        for beta in datum.positive_roots
        if any(beta.root_coords[i - 1] for i in complement)
    )
    return ParabolicFlag(datum, pset, complement, phi)


@dataclass(frozen=True)
class InvariantClass:
    """(2*pi)^two_pi_power times a rational vector over the Picard basis.

    The zero vector is normalized to power 0, so structural equality of the
    dataclass is exactly equality of classes.
    """

    two_pi_power: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if all(c == 0 for c in self.coeffs):
            object.__setattr__(self, "two_pi_power", 0)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _compatible(self, other: "InvariantClass") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionMismatch("classes live on different flags")
        if not self.is_zero and not other.is_zero and self.two_pi_power != other.two_pi_power:
            raise DimensionMismatch("classes carry different powers of 2*pi")

    def __add__(self, other: "InvariantClass") -> "InvariantClass":
        self._compatible(other)
        power = other.two_pi_power if self.is_zero else self.two_pi_power
        return InvariantClass(power, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "InvariantClass") -> "InvariantClass":
        self._compatible(other)
        power = other.two_pi_power if self.is_zero else self.two_pi_power
        return InvariantClass(power, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, s) -> "InvariantClass":
        s = Fraction(s)
        return InvariantClass(self.two_pi_power, tuple(s * c for c in self.coeffs))

    def times_two_pi(self, k: int = 1) -> "InvariantClass":
        return InvariantClass(self.two_pi_power + k, self.coeffs)


def class_from_coeffs(flag: ParabolicFlag, coeffs: Sequence, two_pi_power: int = 0) -> InvariantClass:
    if len(coeffs) != flag.picard_rank:
        raise DimensionMismatch(
            f"expected {flag.picard_rank} coefficients, got {len(coeffs)}"
        )
    return InvariantClass(two_pi_power, tuple(Fraction(c) for c in coeffs))


def zero_class(flag: ParabolicFlag) -> InvariantClass:
    return InvariantClass(0, (Fraction(0),) * flag.picard_rank)


def basis_class(flag: ParabolicFlag, alpha: int) -> InvariantClass:
    """The Picard generator attached to the simple root ``alpha``."""
    if alpha not in flag.complement:
        raise IndexOutOfRange(f"alpha_{alpha} is not a Picard direction of this flag")
    return InvariantClass(
        0,
        tuple(Fraction(1 if a == alpha else 0) for a in flag.complement),
    )


def _check_class(flag: ParabolicFlag, c: InvariantClass) -> None:
    if len(c.coeffs) != flag.picard_rank:
        raise DimensionMismatch(
            f"class has {len(c.coeffs)} coefficients, flag has Picard rank {flag.picard_rank}"
        )


def class_weight(flag: ParabolicFlag, c: InvariantClass) -> tuple[Weight, int]:
    """Attach to a class its weight (coefficients over the full rank) and 2*pi power."""
    _check_class(flag, c)
    coeffs = [Fraction(0)] * flag.rank
    for a, v in zip(flag.complement, c.coeffs):
        coeffs[a - 1] = v
    return Weight(tuple(coeffs)), c.two_pi_power


def anticanonical_weight(flag: ParabolicFlag) -> Weight:
    """Sum of the positive roots off the parabolic set, in the weight basis."""
    total = Weight.zero(flag.rank)
    for beta in flag.phi_complement:
        total = total + root_as_weight(flag.datum, beta)
    return total


def anticanonical_coeffs(flag: ParabolicFlag) -> tuple[int, ...]:
    """Coefficients of the anticanonical class over the Picard generators."""
    w = anticanonical_weight(flag)
    out = []
    for a in flag.complement:
        c = w.coeffs[a - 1]
        if c.denominator != 1 or c <= 0:
            raise AssertionError(f"anticanonical coefficient at alpha_{a} is {c}")
        out.append(int(c))
    return tuple(out)


def anticanonical_class(flag: ParabolicFlag) -> InvariantClass:
    """The integral anticanonical Kahler class (2*pi power 0)."""
    return InvariantClass(0, tuple(Fraction(l) for l in anticanonical_coeffs(flag)))


def ricci_class(flag: ParabolicFlag) -> InvariantClass:
    """The Ricci form of any invariant Kahler metric: 2*pi times the anticanonical class."""
    return anticanonical_class(flag).times_two_pi()


def fano_index(flag: ParabolicFlag) -> int:
    """GCD of the anticanonical coefficients."""
    ell = anticanonical_coeffs(flag)
    out = 0
    for l in ell:
        out = gcd(out, l)
    return out


def is_kahler(flag: ParabolicFlag, c: InvariantClass) -> bool:
    """True exactly when every coefficient is strictly positive."""
    _check_class(flag, c)
    return all(v > 0 for v in c.coeffs)


def _require_kahler(flag: ParabolicFlag, omega: InvariantClass) -> None:
    if not is_kahler(flag, omega):
        raise NotKahler("reference class must have strictly positive coefficients")


def lefschetz_contraction(
    flag: ParabolicFlag, omega0: InvariantClass, psi: InvariantClass
) -> tuple[Fraction, int]:
    """Trace of the endomorphism comparing ``psi`` with the Kahler class.

    Returns the exact rational together with the 2*pi power
    ``psi.two_pi_power - omega0.two_pi_power``.  Linear in ``psi``, and equal
    to the complex dimension when ``psi == omega0``.
    """
    _require_kahler(flag, omega0)
    _check_class(flag, psi)
    w_omega, p_omega = class_weight(flag, omega0)
    w_psi, p_psi = class_weight(flag, psi)
    total = Fraction(0)
    for beta in flag.phi_complement:
        total += pairing(w_psi, beta) / pairing(w_omega, beta)
    return total, p_psi - p_omega


def endomorphism_eigenvalues(
    flag: ParabolicFlag, omega0: InvariantClass, psi: InvariantClass
) -> tuple[Fraction, ...]:
    """Pairing ratios indexed by the positive roots off the parabolic set.

    The entries sum to the Lefschetz contraction; their common 2*pi power is
    ``psi.two_pi_power - omega0.two_pi_power``.
    """
    _require_kahler(flag, omega0)
    _check_class(flag, psi)
    w_omega, _ = class_weight(flag, omega0)
    w_psi, _ = class_weight(flag, psi)
    return tuple(
        pairing(w_psi, beta) / pairing(w_omega, beta) for beta in flag.phi_complement
    )


def volume(flag: ParabolicFlag, omega: InvariantClass) -> tuple[Fraction, int]:
    """Exact volume of the flag with respect to a Kahler class.

    The rational part is the product over the relevant positive roots of the
    class pairing divided by the Weyl-vector pairing; the 2*pi power is
    ``omega.two_pi_power * dim_c``.
    """
    _require_kahler(flag, omega)
    w_omega, p_omega = class_weight(flag, omega)
    rho = weyl_vector(flag.datum)
    vol = Fraction(1)
    for beta in flag.phi_complement:
        vol *= pairing(w_omega, beta) / pairing(rho, beta)
    return vol, p_omega * flag.dim_c


def degree(
    flag: ParabolicFlag, bundle_class: InvariantClass, omega: InvariantClass
) -> tuple[Fraction, int]:
    """Degree of a bundle class against a Kahler class: (n-1)! * contraction * volume."""
    n = flag.dim_c
    lam, p_lam = lefschetz_contraction(flag, omega, bundle_class)
    vol, p_vol = volume(flag, omega)
    return factorial(n - 1) * lam * vol, p_lam + p_vol
