"""Constructive witness families for weighted representation counts.

Given a tail-ruled set (law anchored at index 0), a target n decomposes as
n = (k^g + 1)m + r with m inside one lattice cell [k^s*t_ell, k^s*t_(ell+1)).
That cell, and every value constructed below, lies on one side (the set or
its complement) fixed by the parity of the block number ell + s*a.

Within the cell, m sits in one of three zones measured by a k^(s-4) margin:

  II   left edge:   k^s*t_ell       <= m < k^s*t_ell + k^(s-4)
  I    middle:      otherwise
  III  right edge:  k^s*t_(ell+1) - k^(s-4) <= m < k^s*t_(ell+1)

Each zone yields an explicit one-parameter family of pairs with
a1 + k*a2 = n, both components on the containing side:

  I, III:  (m + k*q + r,  k^(g-1)*m - q)
  II:      (m - k*q + r,  k^(g-1)*m + q)

with q running over a case-specific integer interval.  The margins are exact
rationals, so classification and interval endpoints are computed exactly for
every s >= 0; the enumerator only *emits* pairs when s >= 5, where the
interval arithmetic guarantees every candidate lands inside its target block
(small n carry no guarantee and produce an empty family).
"""

from __future__ import annotations

import warnings
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .blockset import BlockSet
from .render import fraction_decimal, fraction_str
from .structure import Decomposition, _require_anchored_tail, decompose, select_g

CASES = ("I", "II", "III")

SIDE_SET = "set"
SIDE_COMPLEMENT = "complement"


class WitnessValidationError(RuntimeError):
    """A constructed pair failed its membership check.

    This cannot happen for a valid anchored tail set when k^g exceeds the
    selection threshold; seeing it means the set structure is broken or the
    chosen g violates the precondition (a warning will have fired).
    """


def containing_side(s: BlockSet, scale: int, ell: int) -> str:
    """Which side of the partition owns block number ell + scale*a."""
    tail = _require_anchored_tail(s)
    if not 0 <= ell < tail.a:
        raise ValueError(f"ell must lie in [0, {tail.a}), got {ell}")
    if scale < 0:
        raise ValueError(f"scale must be nonnegative, got {scale}")
    j = ell + scale * tail.a
    return SIDE_SET if s._block_in_set(j) else SIDE_COMPLEMENT


def classify_case(s: BlockSet, d: Decomposition) -> str:
    """Exact zone of m inside its lattice cell: "I", "II", or "III"."""
    tail = _require_anchored_tail(s)
    k = tail.k
    lo = k**d.s * s.boundary(d.ell)
    hi = k**d.s * s.boundary(d.ell + 1)
    if not lo <= d.m < hi:
        raise ValueError(f"decomposition does not match set: m={d.m} not in [{lo},{hi})")
    margin = Fraction(k**d.s, k**4)
    if d.m < lo + margin:
        return "II"
    if d.m >= hi - margin:
        return "III"
    return "I"


def witness_q_range(s: BlockSet, d: Decomposition, case: str) -> tuple[int, int]:
    """Inclusive integer interval [q_lo, q_hi] for the case's family.

    Empty is encoded as q_lo > q_hi.  Bounds follow the case inequalities
    with strict/inclusive endpoints honored through exact rational floor/ceil:

      I:    0 <= q < k^(s-5) - r
      II:   k^(s-1)*(t_ell - t_(ell-1)) + k^(s-5) + r < q
                 <= k^(s-1)*(t_ell - t_(ell-2))
      III:  k^(s-1)*(t_(ell+2) - t_(ell+1)) + k^(s-5)
                 <= q <= k^(s-1)*(t_(ell+3) - t_(ell+1)) - r
    """
    tail = _require_anchored_tail(s)
    if case not in CASES:
        raise ValueError(f"case must be one of {CASES}, got {case!r}")
    k = tail.k

    def kpow(e: int) -> Fraction:
        return Fraction(k**e) if e >= 0 else Fraction(1, k**-e)

    t = s.boundary
    if case == "I":
        upper = kpow(d.s - 5) - d.r  # exclusive
        return 0, ceil(upper) - 1
    if case == "II":
        lo_excl = kpow(d.s - 1) * (t(d.ell) - t(d.ell - 1)) + kpow(d.s - 5) + d.r
        hi_incl = kpow(d.s - 1) * (t(d.ell) - t(d.ell - 2))
        return floor(lo_excl) + 1, floor(hi_incl)
    lo_incl = kpow(d.s - 1) * (t(d.ell + 2) - t(d.ell + 1)) + kpow(d.s - 5)
    hi_incl = kpow(d.s - 1) * (t(d.ell + 3) - t(d.ell + 1)) - d.r
    return ceil(lo_incl), floor(hi_incl)


def guaranteed_lower_bound(s: BlockSet, n: int, g: int) -> Fraction:
    """max(0, n / (k^5 * t_a * (k^g + 2)) - (k^g + 1)), exactly."""
    tail = _require_anchored_tail(s)
    if n < 0:
        raise ValueError(f"target n must be nonnegative, got {n}")
    if g < 1 or g % 2 == 0:
        raise ValueError(f"exponent g must be odd and positive, got {g}")
    k = tail.k
    t_a = k * s.boundaries[0]
    bound = Fraction(n, k**5 * t_a * (k**g + 2)) - (k**g + 1)
    return max(Fraction(0), bound)


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of one witness enumeration.

    pairs_checked equals the size of the emitted q-interval; every candidate
    was validated (sum identity plus membership of both components on the
    containing side) before being counted.
    """

    decomposition: Decomposition
    case: str
    side: str
    q_lo: int
    q_hi: int
    pairs_checked: int
    guaranteed: Fraction

    @property
    def q_count(self) -> int:
        return max(0, self.q_hi - self.q_lo + 1)

    def to_doc(self) -> dict:
        d = self.decomposition
        empty = self.q_lo > self.q_hi
        return {
            "n": str(d.n),
            "m": str(d.m),
            "r": str(d.r),
            "s": d.s,
            "ell": d.ell,
            "g": d.g,
            "case": self.case,
            "side": self.side,
            "q_lo": None if empty else str(self.q_lo),
            "q_hi": None if empty else str(self.q_hi),
            "pairs_checked": str(self.pairs_checked),
            "guaranteed": fraction_str(self.guaranteed),
            "guaranteed_decimal": fraction_decimal(self.guaranteed),
        }


def iter_witness_pairs(s: BlockSet, n: int, g: int):
    """Yield every validated pair (a1, a2) of the witness family for n.

    Pairs satisfy a1 + k*a2 = n with both components members of the
    containing side.  Raises WitnessValidationError if any candidate fails;
    see that class for when this is possible at all.
    """
    d = decompose(s, n, g)
    case = classify_case(s, d)
    side = containing_side(s, d.s, d.ell)
    q_lo, q_hi = _effective_q_range(s, d, case)
    yield from _validated_pairs(s, d, case, side, q_lo, q_hi)


def _effective_q_range(s: BlockSet, d: Decomposition, case: str) -> tuple[int, int]:
    # Below scale 5 the interval inequalities no longer pin candidates inside
    # real blocks; the family is defined to be empty there.
    if d.s < 5:
        return 0, -1
    return witness_q_range(s, d, case)


def _validated_pairs(s, d, case, side, q_lo, q_hi):
    if q_lo > q_hi:
        return
    k = s.tail.k
    lead = k ** (d.g - 1) * d.m
    if case == "II":
        a1, a2, step1, step2 = d.m - k * q_lo + d.r, lead + q_lo, -k, 1
    else:
        a1, a2, step1, step2 = d.m + k * q_lo + d.r, lead - q_lo, k, -1
    side_set = s if side == SIDE_SET else s.complement()
    top = max(a1, a1 + step1 * (q_hi - q_lo), a2, a2 + step2 * (q_hi - q_lo))
    edges = side_set.boundaries_through(top)
    want = side_set.leading_gap
    for q in range(q_lo, q_hi + 1):
        if a1 + k * a2 != d.n:
            raise WitnessValidationError(
                f"q={q}: {a1} + {k}*{a2} != {d.n} (sum identity broken)"
            )
        for v in (a1, a2):
            if (bisect_right(edges, v) % 2 == 1) != want:
                raise WitnessValidationError(
                    f"q={q}: component {v} not in the containing side "
                    f"({side}); set structure broken or k^g below threshold"
                )
        yield a1, a2
        a1 += step1
        a2 += step2


def enumerate_witnesses(s: BlockSet, n: int, g: int) -> WitnessReport:
    """Build, validate, and summarize the full witness family for n."""
    tail = _require_anchored_tail(s)
    sel = select_g(s)
    if tail.k**g <= sel.T:
        warnings.warn(
            f"k^g = {tail.k ** g} does not exceed the threshold T = {sel.T}; "
            "the family may be invalid or empty",
            stacklevel=2,
        )
    d = decompose(s, n, g)
    case = classify_case(s, d)
    side = containing_side(s, d.s, d.ell)
    q_lo, q_hi = _effective_q_range(s, d, case)
    checked = sum(1 for _ in _validated_pairs(s, d, case, side, q_lo, q_hi))
    return WitnessReport(
        decomposition=d,
        case=case,
        side=side,
        q_lo=q_lo,
        q_hi=q_hi,
        pairs_checked=checked,
        guaranteed=guaranteed_lower_bound(s, n, g),
    )
