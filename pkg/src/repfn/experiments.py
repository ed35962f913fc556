"""Finite-horizon experiments on count equality between a set and its complement.

Nothing here proves an asymptotic statement.  verify_equality checks, for
each n in a window, whether the weighted count of the set equals that of its
complement, and reports the first violation.  scan_ratio tracks r/n for the
side that contains each n's lattice cell, against the theoretical floor
1/(k^5*t_a*(k^g+2)) and the trivial ceiling 1/k.  search_seeds enumerates
small seeds at desk scale and ranks them by how long they survive; a ranking
is an observation about a window, not a certificate.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import IO

from .blockset import BlockSet
from .render import fraction_decimal, fraction_str
from .repcount import count_weighted
from .structure import decompose, generate_from_seed
from .witness import SIDE_SET, containing_side


@dataclass(frozen=True)
class EqualityReport:
    """Result of comparing r(set, n) with r(complement, n) over [n_lo, n_hi]."""

    k: int
    n_lo: int
    n_hi: int
    equal_count: int
    first_violation: int | None
    per_n: tuple[tuple[int, int, int], ...] | None = None  # (n, r_set, r_comp)

    def to_doc(self) -> dict:
        doc = {
            "k": self.k,
            "n_lo": str(self.n_lo),
            "n_hi": str(self.n_hi),
            "equal_count": str(self.equal_count),
            "first_violation": None
            if self.first_violation is None
            else str(self.first_violation),
        }
        if self.per_n is not None:
            doc["per_n"] = [
                {"n": str(n), "r_set": str(ra), "r_comp": str(rc)}
                for n, ra, rc in self.per_n
            ]
        return doc


def verify_equality(
    s: BlockSet, k: int, n_lo: int, n_hi: int, record_per_n: bool = False
) -> EqualityReport:
    """Compare the two counts pointwise with weights (1, k)."""
    if k < 2:
        raise ValueError(f"ratio k must be at least 2, got {k}")
    if n_lo < 0:
        raise ValueError(f"window must start at a nonnegative n, got {n_lo}")
    comp = s.complement()
    rows = []
    equal = 0
    first: int | None = None
    for n in range(n_lo, n_hi + 1):
        ra = count_weighted(s, n, (1, k))
        rc = count_weighted(comp, n, (1, k))
        if ra == rc:
            equal += 1
        elif first is None:
            first = n
        if record_per_n:
            rows.append((n, ra, rc))
    return EqualityReport(
        k=k,
        n_lo=n_lo,
        n_hi=n_hi,
        equal_count=equal,
        first_violation=first,
        per_n=tuple(rows) if record_per_n else None,
    )


@dataclass(frozen=True)
class ScanPoint:
    n: int
    r_set: int
    r_comp: int
    ratio: Fraction  # containing-side count divided by n


@dataclass(frozen=True)
class RatioScan:
    points: tuple[ScanPoint, ...]
    window_lo: int  # tail window over which min_ratio is taken
    min_ratio: Fraction | None
    theoretical_floor: Fraction
    trivial_ceiling: Fraction

    def to_doc(self) -> dict:
        return {
            "window_lo": str(self.window_lo),
            "min_ratio": None if self.min_ratio is None else fraction_str(self.min_ratio),
            "theoretical_floor": fraction_str(self.theoretical_floor),
            "trivial_ceiling": fraction_str(self.trivial_ceiling),
            "points": [
                {
                    "n": str(p.n),
                    "r_set": str(p.r_set),
                    "r_comp": str(p.r_comp),
                    "ratio": fraction_str(p.ratio),
                    "ratio_decimal": fraction_decimal(p.ratio, 9),
                }
                for p in self.points
            ],
        }


def scan_ratio(
    s: BlockSet, k: int, n_lo: int, n_hi: int, g: int, stride: int = 1
) -> RatioScan:
    """Sample r/n on the containing side at n_lo, n_lo+stride, ..., <= n_hi."""
    if n_lo < 1:
        raise ValueError(f"scan window must start at n >= 1, got {n_lo}")
    if stride < 1:
        raise ValueError(f"stride must be positive, got {stride}")
    comp = s.complement()
    points = []
    for n in range(n_lo, n_hi + 1, stride):
        d = decompose(s, n, g)
        side = containing_side(s, d.s, d.ell)
        ra = count_weighted(s, n, (1, k))
        rc = count_weighted(comp, n, (1, k))
        r_side = ra if side == SIDE_SET else rc
        points.append(ScanPoint(n=n, r_set=ra, r_comp=rc, ratio=Fraction(r_side, n)))
    window_lo = -(-(n_lo + n_hi) // 2)
    tail_ratios = [p.ratio for p in points if p.n >= window_lo]
    t_a = k * s.boundaries[0]
    return RatioScan(
        points=tuple(points),
        window_lo=window_lo,
        min_ratio=min(tail_ratios) if tail_ratios else None,
        theoretical_floor=Fraction(1, k**5 * t_a * (k**g + 2)),
        trivial_ceiling=Fraction(1, k),
    )


def scan_to_csv(scan: RatioScan, stream: IO[str]) -> None:
    """Write the scan series with exact rational columns."""
    writer = csv.writer(stream)
    writer.writerow(["n", "r_A", "r_comp", "ratio_num", "ratio_den"])
    for p in scan.points:
        writer.writerow([p.n, p.r_set, p.r_comp, p.ratio.numerator, p.ratio.denominator])


def search_seeds(
    k: int,
    a: int,
    t0_max: int,
    width_max: int,
    horizon: int,
    n_start: int | None = None,
) -> list[tuple[tuple[int, ...], EqualityReport]]:
    """Try every admissible seed and rank by survival of the equality check.

    Seeds are (t_0, ..., t_(a-1)) with 1 <= t_0 <= t0_max, strictly
    increasing, t_(a-1) - t_0 <= width_max, and k*t_0 > t_(a-1).  Each seed's
    set is expanded to the horizon and checked on [n_start, horizon], where
    n_start defaults to that set's t_(a+2).  Ranking: clean seeds first, then
    larger first violation; ties break deterministically by seed.
    """
    if t0_max < 1:
        raise ValueError(f"t0_max must be at least 1, got {t0_max}")
    if width_max < 0:
        raise ValueError(f"width_max must be nonnegative, got {width_max}")
    results = []
    for t0 in range(1, t0_max + 1):
        if a == 1:
            candidates = [(t0,)]
        else:
            candidates = [
                (t0, *rest)
                for rest in combinations(range(t0 + 1, t0 + width_max + 1), a - 1)
            ]
        for seed in candidates:
            if k * seed[0] <= seed[-1]:
                continue
            bset = generate_from_seed(seed, a, k, horizon)
            lo = int(bset.boundary(a + 2)) if n_start is None else n_start
            results.append((seed, verify_equality(bset, k, lo, horizon)))

    def rank(item):
        seed, rep = item
        if rep.first_violation is None:
            return (0, 0, seed)
        return (1, -rep.first_violation, seed)

    results.sort(key=rank)
    return results
