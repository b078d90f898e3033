"""Tight contact structures on lens spaces and their Reeb-link classes.

Every tight structure on L(p,q) comes from Legendrian surgery on a linked
chain of unknots whose framings are the continued-fraction coefficients
n_1..n_k of -p/q; a structure is a choice of rotation number r_j for each
unknot.  The boundary cocore classes c_j satisfy c_{k+1-j} = e_j c_k, which
turns the Reeb-link class -sum r_j c_j into the single residue
-sum r_j e_{k+1-j} (mod p) relative to c_k.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Sequence

from .cfrac import (
    ContinuedFraction,
    CoprimePair,
    QSequence,
    is_odd_lens,
    neg_cfrac,
    q_sequence,
)
from .exactmath import InputError, IntMatrix
from .surgery import FramedLinkDiagram, LegendrianKnot

ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class LensSpace:
    pair: CoprimePair
    cf: ContinuedFraction
    qseq: QSequence
    odd: bool

    @property
    def p(self) -> int:
        return self.pair.p

    @property
    def q(self) -> int:
        return self.pair.q

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.cf.coefficients

    @property
    def k(self) -> int:
        return self.cf.k

    def __str__(self):
        return f"L({self.p},{self.q})"


def lens_space(p: int, q: int) -> LensSpace:
    cf = neg_cfrac(CoprimePair(p, q))
    return LensSpace(cf.pair, cf, q_sequence(cf), is_odd_lens(cf))


@dataclass(frozen=True)
class ESequence:
    modulus: int
    values: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        return self.values[j]


def allowed_rotations(n: int) -> list[int]:
    """Rotation numbers of a Legendrian unknot with tb = n + 1 (n <= -2)."""
    if n > -2:
        raise InputError(f"framing coefficient must be <= -2, got {n}")
    return list(range(n + 2, n + 2 * abs(n + 1) + 1, 2))


def tight_count(L: LensSpace) -> int:
    out = 1
    for n in L.coefficients:
        out *= abs(n + 1)
    return out


def enumerate_tight(L: LensSpace, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Rotation tuples in lexicographic order, one per tight structure."""
    tuples = itertools.product(*(allowed_rotations(n) for n in L.coefficients))
    if cap is not None:
        tuples = itertools.islice(tuples, cap)
    return tuples


def e_sequence(L: LensSpace) -> ESequence:
    """e_0 = 0, e_1 = 1, e_{j+1} = -e_{j-1} - n_{k+1-j} e_j, all mod p."""
    p, n, k = L.p, L.coefficients, L.k
    es = [0, 1 % p]
    for j in range(1, k + 1):
        es.append((-es[j - 1] - n[k - j] * es[j]) % p)
    return ESequence(p, tuple(es))


def check_rotations(L: LensSpace, r: Sequence[int]) -> tuple[int, ...]:
    r = tuple(r)
    if len(r) != L.k:
        raise InputError(f"{L} needs {L.k} rotation numbers, got {len(r)}")
    for j, (n, rj) in enumerate(zip(L.coefficients, r), start=1):
        if (n + rj) % 2 or abs(rj) > -n - 2:
            raise InputError(
                f"r_{j} = {rj} is not an allowed rotation number for n_{j} = {n}"
            )
    return r


def _class_weights(L: LensSpace, e: ESequence | None = None) -> list[int]:
    # weight of r_j is e_{k+1-j}
    e = e or e_sequence(L)
    return [e[L.k + 1 - j] for j in range(1, L.k + 1)]


def reeb_class(L: LensSpace, r: Sequence[int]) -> int:
    """Reeb-link class as a residue mod p, relative to the generator c_k."""
    r = check_rotations(L, r)
    w = _class_weights(L)
    return -sum(rj * wj for rj, wj in zip(r, w)) % L.p


def weighted_rotation(L: LensSpace, r: Sequence[int]) -> int:
    """sum |r_j| q_{k+1-j}; never exceeds p - q - 1 for admissible r."""
    k, qs = L.k, L.qseq
    return sum(abs(rj) * qs[k + 1 - j] for j, rj in enumerate(r, start=1))


def conjugate_tag(r: Sequence[int]) -> str:
    """``self`` for the conjugation-invariant tuple, ``paired`` otherwise.

    The admissible set is symmetric under r -> -r, so every other tuple's
    conjugate is also emitted.
    """
    return "self" if not any(r) else "paired"


@dataclass(frozen=True)
class LensCertificate:
    lens: LensSpace
    rotations: tuple[int, ...]
    reeb_class: int
    certified: bool
    report: str

    def to_dict(self) -> dict:
        return {
            "rotations": list(self.rotations),
            "reeb_class": self.reeb_class,
            "certified": self.certified,
            "conjugation": conjugate_tag(self.rotations),
        }


def noncontractible_certificate(L: LensSpace, r: Sequence[int]) -> LensCertificate:
    r = check_rotations(L, r)
    cls = reeb_class(L, r)
    if cls:
        msg = (
            f"{L} r={list(r)}: Reeb link class {cls} * c_k != 0 in H1 = Z/{L.p}; "
            f"since pi1 = Z/{L.p} = H1, some Reeb-link component is non-contractible"
        )
    elif L.odd:
        msg = f"{L} r={list(r)}: class 0 on an odd lens space (unexpected)"
    else:
        msg = f"{L} r={list(r)}: class 0, criterion silent"
    return LensCertificate(L, r, cls, cls != 0, msg)


def lens_to_diagram(L: LensSpace, r: Sequence[int]) -> FramedLinkDiagram:
    """Linked chain of Legendrian unknots with tb = n_j + 1 and rot = r_j."""
    r = check_rotations(L, r)
    k, n = L.k, L.coefficients
    knots = tuple(
        LegendrianKnot(f"K{j + 1}", n[j] + 1, r[j], True) for j in range(k)
    )
    rows = [[0] * k for _ in range(k)]
    for i in range(k):
        rows[i][i] = n[i]
        if i + 1 < k:
            rows[i][i + 1] = rows[i + 1][i] = 1
    return FramedLinkDiagram(knots, IntMatrix.from_rows(rows, k))


def chain_matrix(L: LensSpace) -> IntMatrix:
    return lens_to_diagram(L, [n + 2 for n in L.coefficients]).linking


@dataclass(frozen=True)
class SurveyRow:
    """One (p, q) cell of the exhaustive check.

    ``class_violations`` counts tuples with class 0 that should not have it:
    any tuple on an odd lens space, or a nonzero tuple on an even one.
    ``bound_violations`` counts tuples with weighted rotation above p - q - 1.
    """

    p: int
    q: int
    coefficients: tuple[int, ...]
    odd: bool
    tight_count: int
    tuples_checked: int
    min_abs_class: int
    max_weighted_rotation: int
    class_violations: int
    bound_violations: int
    capped: bool

    @property
    def violations(self) -> int:
        return self.class_violations + self.bound_violations

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "cfrac": list(self.coefficients),
            "odd": self.odd,
            "tight_count": self.tight_count,
            "tuples_checked": self.tuples_checked,
            "min_abs_class": self.min_abs_class,
            "max_weighted_rotation": self.max_weighted_rotation,
            "bound": self.p - self.q - 1,
            "class_violations": self.class_violations,
            "bound_violations": self.bound_violations,
            "capped": self.capped,
        }


@dataclass(frozen=True)
class SurveyReport:
    pmax: int
    rows: tuple[SurveyRow, ...] = field(repr=False)

    @property
    def odd_count(self) -> int:
        return sum(r.odd for r in self.rows)

    @property
    def tuples_checked(self) -> int:
        return sum(r.tuples_checked for r in self.rows)

    @property
    def violations(self) -> int:
        return sum(r.violations for r in self.rows)

    @property
    def capped(self) -> list[tuple[int, int]]:
        return [(r.p, r.q) for r in self.rows if r.capped]

    def summary(self) -> dict:
        return {
            "pmax": self.pmax,
            "lens_spaces": len(self.rows),
            "odd_lens_spaces": self.odd_count,
            "tuples_checked": self.tuples_checked,
            "violations": self.violations,
            "capped_cells": [list(c) for c in self.capped],
        }


def survey_cell(p: int, q: int, cap: int = ENUMERATION_CAP) -> SurveyRow:
    L = lens_space(p, q)
    k, qs = L.k, L.qseq
    w = _class_weights(L)
    qw = [qs[k + 1 - j] for j in range(1, k + 1)]
    bound = p - q - 1
    count = tight_count(L)
    checked = 0
    min_abs = p
    max_weighted = 0
    class_bad = 0
    bound_bad = 0
    for r in enumerate_tight(L, cap):
        checked += 1
        cls = -sum(a * b for a, b in zip(r, w)) % p
        min_abs = min(min_abs, cls, p - cls)
        if cls == 0 and (L.odd or any(r)):
            class_bad += 1
        weighted = sum(abs(a) * b for a, b in zip(r, qw))
        max_weighted = max(max_weighted, weighted)
        if weighted > bound:
            bound_bad += 1
    return SurveyRow(
        p, q, L.coefficients, L.odd, count, checked, min_abs, max_weighted,
        class_bad, bound_bad, checked < count,
    )


def _survey_p(p: int) -> list[SurveyRow]:
    return [survey_cell(p, q) for q in range(1, p) if gcd(p, q) == 1]


def survey(pmax: int, parallel: bool = False) -> SurveyReport:
    """Check every coprime q < p <= pmax; rows in (p, q) order either way."""
    if pmax < 2:
        raise InputError(f"pmax must be >= 2, got {pmax}")
    ps = range(2, pmax + 1)
    if parallel:
        with ProcessPoolExecutor() as pool:
            chunks = list(pool.map(_survey_p, ps))
    else:
        chunks = [_survey_p(p) for p in ps]
    return SurveyReport(pmax, tuple(row for chunk in chunks for row in chunk))
