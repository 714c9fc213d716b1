"""Exact root systems of the simple complex Lie algebras.

Everything here is arbitrary-precision rational arithmetic: root and coroot
coordinates are stored exactly, and the single primitive consumed by all
higher layers is the pairing of a weight against a coroot.

Conventions:

* Cartan matrix ``C[i][j] = <alpha_i, alpha_j_coroot>`` (columns normalized
  by the length of ``alpha_j``), Bourbaki node numbering.
* Weights live in the fundamental-weight basis, so ``<w, alpha_j_coroot>``
  is simply the j-th coordinate of ``w``.
* Root lengths are normalized so short roots have half square length 1
  (B/C/F: long = 2, G2: long = 3); only ratios ever matter downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import DimensionMismatch, InvalidRank

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class LieType:
    """A simple Lie family letter together with its rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_RANGE:
            raise InvalidRank(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        lo, hi = _RANK_RANGE[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            bound = f">= {lo}" if hi is None else f"in [{lo}, {hi}]"
            raise InvalidRank(f"family {self.family} needs rank {bound}, got {self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def positive_root_count(lie_type: LieType) -> int:
    """Closed-form number of positive roots for each family."""
    n = lie_type.rank
    fam = lie_type.family
    if fam == "A":
        return n * (n + 1) // 2
    if fam in ("B", "C"):
        return n * n
    if fam == "D":
        return n * (n - 1)
    if fam == "E":
        return {6: 36, 7: 63, 8: 120}[n]
    return 24 if fam == "F" else 6


def cartan_matrix(lie_type: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with ``C[i][j] = <alpha_i, alpha_j_coroot>`` (0-based)."""
    n, fam = lie_type.rank, lie_type.family
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        C[i][j] = cij
        C[j][i] = cji

    if fam == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif fam == "B":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, cij=-2, cji=-1)  # alpha_n short
    elif fam == "C":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1, cij=-1, cji=-2)  # alpha_n long
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)  # fork: last node hangs off node n-2
    elif fam == "E":
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5)):
            bond(i, j)
        for i in range(5, n - 1):
            bond(i, i + 1)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, cij=-2, cji=-1)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        bond(2, 3)
    else:  # G
        bond(0, 1, cij=-1, cji=-3)  # alpha_1 short, alpha_2 long
    return tuple(tuple(row) for row in C)


def symmetrizer(lie_type: LieType) -> tuple[int, ...]:
    """Half square lengths d_j of the simple roots, short roots scaled to 1."""
    n, fam = lie_type.rank, lie_type.family
    if fam in ("A", "D", "E"):
        return (1,) * n
    if fam == "B":
        return (2,) * (n - 1) + (1,)
    if fam == "C":
        return (1,) * (n - 1) + (2,)
    if fam == "F":
        return (2, 2, 1, 1)
    return (1, 3)  # G2


@dataclass(frozen=True)
class PositiveRoot:
    """A positive root in simple-root coordinates plus its coroot coordinates.

    ``coroot_coords[j]`` is the coefficient of ``alpha_j_coroot`` in the
    expansion of the coroot; for simply-laced types it equals ``root_coords``.
    """

    root_coords: tuple[int, ...]
    coroot_coords: tuple[Fraction, ...]

    @property
    def height(self) -> int:
        return sum(self.root_coords)


@dataclass(frozen=True)
class Weight:
    """Exact rational vector in the fundamental-weight basis."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((Fraction(0),) * rank)

    def __add__(self, other: "Weight") -> "Weight":
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionMismatch("weights have different ranks")
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Weight") -> "Weight":
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionMismatch("weights have different ranks")
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, scalar) -> "Weight":
        s = Fraction(scalar)
        return Weight(tuple(s * c for c in self.coeffs))


@dataclass(frozen=True)
class RootDatum:
    """Cartan matrix, symmetrizer and the full graded list of positive roots."""

    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[PositiveRoot, ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank


def _coroot_pairing_with_simple(cartan, coords: tuple[int, ...], i: int) -> int:
    # <beta, alpha_i_coroot> for beta given in simple-root coordinates
    return sum(m * cartan[j][i] for j, m in enumerate(coords))


@lru_cache(maxsize=None)
def build_root_datum(lie_type: LieType) -> RootDatum:
    """Enumerate all positive roots by closing the simple roots under root strings.

    Roots are listed by increasing height; within a height level the root
    supported on earlier simple roots comes first.  The whole computation is
    exact and cached per Lie type.
    """
    n = lie_type.rank
    C = cartan_matrix(lie_type)
    d = symmetrizer(lie_type)
    for i in range(n):
        for j in range(n):
            if C[i][j] * d[j] != C[j][i] * d[i]:
                raise AssertionError("symmetrizer does not symmetrize the Cartan matrix")

    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found: set[tuple[int, ...]] = set(simple)
    frontier = list(simple)
    while frontier:
        grown: set[tuple[int, ...]] = set()
        for coords in frontier:
            for i in range(n):
                down = 0
                probe = list(coords)
                while True:
                    probe[i] -= 1
                    if probe[i] < 0 or tuple(probe) not in found:
                        break
                    down += 1
                up = down - _coroot_pairing_with_simple(C, coords, i)
                if up >= 1:
                    cand = tuple(m + (1 if j == i else 0) for j, m in enumerate(coords))
                    if cand not in found:
                        grown.add(cand)
        found |= grown
        frontier = sorted(grown)

    ordered = sorted(found, key=lambda m: (sum(m), tuple(-c for c in m)))
    roots = []
    for coords in ordered:
        num = sum(
            coords[i] * coords[j] * C[i][j] * d[j] for i in range(n) for j in range(n)
        )
        half_len = Fraction(num, 2)
        if half_len.denominator != 1 or half_len <= 0:
            raise AssertionError(f"bad half square length {half_len} for {coords}")
        coroot = tuple(Fraction(coords[j] * d[j], int(half_len)) for j in range(n))
        roots.append(PositiveRoot(coords, coroot))

    if len(roots) != positive_root_count(lie_type):
        raise AssertionError(
            f"enumerated {len(roots)} positive roots for {lie_type}, "
            f"expected {positive_root_count(lie_type)}"
        )
    return RootDatum(lie_type, C, d, tuple(roots))


def pairing(w: Weight, beta: PositiveRoot) -> Fraction:
    """Exact pairing ``<w, beta_coroot>``, linear in the weight."""
    if len(w.coeffs) != len(beta.coroot_coords):
        raise DimensionMismatch(
            f"weight has rank {len(w.coeffs)}, root has rank {len(beta.coroot_coords)}"
        )
    return sum((c * q for c, q in zip(w.coeffs, beta.coroot_coords)), Fraction(0))


def weyl_vector(datum: RootDatum) -> Weight:
    """Half the sum of the positive roots: all fundamental-weight coefficients 1."""
    return Weight((Fraction(1),) * datum.rank)


def root_as_weight(datum: RootDatum, beta: PositiveRoot) -> Weight:
    """Rewrite a root in the fundamental-weight basis via the Cartan matrix."""
    return Weight(
        tuple(
            Fraction(_coroot_pairing_with_simple(datum.cartan, beta.root_coords, i))
            for i in range(datum.rank)
        )
    )


def weight_from(coeffs: Iterable) -> Weight:
    """Build a weight from any iterable of rationals."""
    return Weight(tuple(Fraction(c) for c in coeffs))
