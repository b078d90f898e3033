"""Negative (Hirzebruch-Jung) continued fractions and the q-sequence.

Indices: ``coefficients[0]`` is n_1, and ``QSequence.values[j]`` is q_j, so the
q-sequence already reads with the usual 1-based subscripts (q_0 = 0 in slot 0).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .exactmath import InputError


@dataclass(frozen=True)
class CoprimePair:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if not (isinstance(p, int) and isinstance(q, int)):
            raise InputError("p and q must be integers")
        if not p > q >= 1:
            raise InputError(f"need p > q >= 1, got p={p}, q={q}")
        if gcd(p, q) != 1:
            raise InputError(f"p={p} and q={q} are not coprime")


@dataclass(frozen=True)
class ContinuedFraction:
    coefficients: tuple[int, ...]
    pair: CoprimePair

    @property
    def k(self) -> int:
        return len(self.coefficients)

    def __str__(self):
        return "[" + ",".join(str(n) for n in self.coefficients) + "]"


@dataclass(frozen=True)
class QSequence:
    values: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.values[j]

    def __len__(self):
        return len(self.values)


def neg_cfrac(p, q: int | None = None) -> ContinuedFraction:
    """Expansion ``-p/q = n1 - 1/(n2 - 1/(... - 1/nk))`` with every ``ni <= -2``.

    Accepts either a :class:`CoprimePair` or two integers.
    """
    pair = p if isinstance(p, CoprimePair) else CoprimePair(p, q)
    num, den = pair.p, pair.q
    coeffs = []
    while True:
        a = -(-num // den)  # ceil
        coeffs.append(-a)
        rem = a * den - num
        if rem == 0:
            break
        num, den = den, rem
    return ContinuedFraction(tuple(coeffs), pair)


def _check_coefficients(coefficients: Sequence[int]) -> None:
    if not coefficients:
        raise InputError("empty continued fraction")
    bad = [n for n in coefficients if n > -2]
    if bad:
        raise InputError(f"coefficients must be <= -2, got {bad}")


def eval_cfrac(coefficients: Sequence[int] | ContinuedFraction) -> Fraction:
    if isinstance(coefficients, ContinuedFraction):
        coefficients = coefficients.coefficients
    _check_coefficients(coefficients)
    # n - 1/(a/b) = (n a - b)/a, kept reduced with a positive denominator
    num, den = coefficients[-1], 1
    for n in reversed(coefficients[:-1]):
        num, den = n * num - den, num
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        if g > 1:
            num, den = num // g, den // g
    return Fraction(num, den)


def from_coefficients(coefficients: Sequence[int]) -> ContinuedFraction:
    """Build the expansion object for an arbitrary admissible coefficient list."""
    value = eval_cfrac(coefficients)
    return ContinuedFraction(
        tuple(coefficients), CoprimePair(-value.numerator, value.denominator)
    )


def q_sequence(cf: ContinuedFraction) -> QSequence:
    """q_0 = 0, q_1 = 1, q_{j+1} = -q_{j-1} - n_{k+1-j} q_j for j = 1..k."""
    n = cf.coefficients
    k = len(n)
    qs = [0, 1]
    for j in range(1, k + 1):
        qs.append(-qs[j - 1] - n[k - j] * qs[j])
    return QSequence(tuple(qs))


def is_odd_lens(cf: ContinuedFraction) -> bool:
    return any(n % 2 for n in cf.coefficients)
