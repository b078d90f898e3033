"""Seifert invariants of the Brieskorn spheres Sigma(2,3,6n-1)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import InputError

TIGHT_COUNT_SOURCE = (
    "classification result for Sigma(2,3,6n-1), n >= 2: exactly two tight "
    "structures up to isotopy, both Stein fillable via Legendrian surgery on S3 "
    "with one rotation number +-1 (recorded, not recomputed)"
)
ORIENTATION_NOTE = (
    "fractions M(-1/2, 1/3, n/(6n-1)) describe -Sigma(2,3,6n-1); the orientation "
    "matching is not verified here, only the homology-sphere property"
)


@dataclass(frozen=True)
class SeifertData:
    """Unnormalized Seifert invariants beta_i/alpha_i over S^2."""

    fractions: tuple[Fraction, ...]

    def __post_init__(self):
        fr = tuple(Fraction(f) for f in self.fractions)
        object.__setattr__(self, "fractions", fr)

    @classmethod
    def of(cls, *fractions: Fraction | str | int) -> "SeifertData":
        return cls(tuple(Fraction(f) for f in fractions))

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(f.denominator for f in self.fractions)

    def __str__(self):
        return "M(" + ", ".join(str(f) for f in self.fractions) + ")"


def euler_sum(s: SeifertData) -> Fraction:
    return sum(s.fractions, Fraction(0))


def h1_order_indicator(s: SeifertData) -> Fraction:
    """|sum beta_i/alpha_i| * prod alpha_i; equal to 1 for a homology sphere."""
    prod = 1
    for a in s.alphas:
        prod *= a
    return abs(euler_sum(s)) * prod


def is_homology_sphere(s: SeifertData) -> bool:
    return h1_order_indicator(s) == 1


def brieskorn_seifert(n: int) -> SeifertData:
    return SeifertData.of(Fraction(-1, 2), Fraction(1, 3), Fraction(n, 6 * n - 1))


@dataclass(frozen=True)
class BrieskornRecord:
    n: int
    seifert: SeifertData
    is_homology_sphere: bool
    milnor_b2_plus: int
    tight_count: int | None
    weinstein_holds: bool | None
    universally_tight: bool | None
    poincare_sphere: bool
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "manifold": f"Sigma(2,3,{6 * self.n - 1})",
            "seifert": [str(f) for f in self.seifert.fractions],
            "euler_sum": str(euler_sum(self.seifert)),
            "h1_order_indicator": str(h1_order_indicator(self.seifert)),
            "homology_sphere": self.is_homology_sphere,
            "milnor_b2_plus": self.milnor_b2_plus,
            "tight_count": self.tight_count,
            "weinstein_holds": self.weinstein_holds,
            "universally_tight": self.universally_tight,
            "poincare_sphere": self.poincare_sphere,
            "notes": list(self.notes),
        }


def brieskorn(n: int) -> BrieskornRecord:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be an integer >= 1, got {n}")
    s = brieskorn_seifert(n)
    notes = [ORIENTATION_NOTE]
    if n == 1:
        notes.append(
            "n = 1 is the Poincare homology sphere (finite fundamental group); "
            "tight count and Weinstein fields are not applicable"
        )
        return BrieskornRecord(
            n, s, is_homology_sphere(s), 0, None, None, None, True, tuple(notes)
        )
    notes.append(TIGHT_COUNT_SOURCE)
    notes.append(
        "Weinstein conjecture holds: each tight structure is a Legendrian surgery "
        "with a nonzero rotation number, so the exact-filling criterion applies"
    )
    return BrieskornRecord(
        n, s, is_homology_sphere(s), 2 * (n - 1), 2, True, True, False, tuple(notes)
    )

