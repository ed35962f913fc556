"""Structural analysis of scaling tails and multiplicative dependence.

Operations here answer four questions about a boundary sequence or a pair of
ratios: does the data obey a scaling law t_{i+a} = k*t_i (detect_tail /
generate_from_seed); which odd exponent g makes k^g dominate the set's
geometry (select_g); where does a target n sit on the boundary lattice once
written as n = (k^g + 1)m + r (decompose); and when are two ratios k, l
powers of a common base with an odd/odd exponent ratio (multiplicative_profile
/ intersection_nonempty).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .blockset import BlockSet, TailRule


class InsufficientDataError(ValueError):
    """Raised when a boundary list is too short to check any scaling relation."""


def detect_tail(boundaries: Sequence[int], k: int) -> TailRule | None:
    """Find the least odd period a (then least anchor i0) fitting the data.

    A candidate (a, i0) is accepted when t_{i+a} = k*t_i holds for every
    checkable i >= i0 and at least a relations were actually verified.
    Returns None when no candidate fits; raises InsufficientDataError when
    fewer than two boundaries are given (nothing is checkable at all).
    """
    bs = [int(t) for t in boundaries]
    if k < 2:
        raise ValueError(f"ratio k must be at least 2, got {k}")
    if any(bs[i] >= bs[i + 1] for i in range(len(bs) - 1)):
        raise ValueError("boundaries must be strictly increasing")
    n = len(bs)
    if n < 2:
        raise InsufficientDataError(
            f"need at least 2 boundaries to check a scaling relation, got {n}"
        )
    a = 1
    while 2 * a <= n:
        i0 = 0
        for i in range(n - a):
            if bs[i + a] != k * bs[i]:
                i0 = i + 1
        if n - a - i0 >= a:
            return TailRule(a=a, k=k, i0=i0)
        a += 2
    return None


def generate_from_seed(seed: Sequence[int], a: int, k: int, limit: int) -> BlockSet:
    """Expand a seed t_0..t_{a-1} by t_{i+a} = k*t_i, storing values <= limit.

    The seed is stored in full even when it exceeds the limit; the seed must
    be strictly increasing with k*t_0 > t_{a-1} so the expansion stays strictly
    increasing forever.
    """
    if a < 1 or a % 2 == 0:
        raise ValueError(f"period a must be odd and positive, got {a}")
    if len(seed) != a:
        raise ValueError(f"seed must have exactly a={a} entries, got {len(seed)}")
    vals = [int(t) for t in seed]
    if any(vals[i] >= vals[i + 1] for i in range(a - 1)):
        raise ValueError("seed must be strictly increasing")
    if k < 2:
        raise ValueError(f"ratio k must be at least 2, got {k}")
    if k * vals[0] <= vals[-1]:
        raise ValueError(
            f"seed not expandable: k*t_0 = {k * vals[0]} must exceed "
            f"t_(a-1) = {vals[-1]}"
        )
    while True:
        nxt = k * vals[-a]
        if nxt > limit:
            break
        vals.append(nxt)
    return BlockSet(tuple(vals), TailRule(a=a, k=k, i0=0), True)


# ---------------------------------------------------------------------------
# exponent selection and lattice decomposition


@dataclass(frozen=True)
class GSelection:
    """Threshold T = 4*(t_{a+2} - t_0) and the least odd g with k^g > T."""

    T: int
    g: int


def _require_anchored_tail(s: BlockSet) -> TailRule:
    if s.tail is None:
        raise ValueError("operation needs a tail-ruled set")
    if s.tail.i0 != 0:
        raise ValueError(
            "operation needs the scaling law anchored at index 0; "
            "call truncate_to_tail() first"
        )
    return s.tail


def select_g(s: BlockSet) -> GSelection:
    """Pick the least odd g with k^g above the set's spread threshold."""
    tail = _require_anchored_tail(s)
    T = int(4 * (s.boundary(tail.a + 2) - s.boundary(0)))
    g = 1
    while tail.k**g <= T:
        g += 2
    return GSelection(T=T, g=g)


@dataclass(frozen=True)
class Decomposition:
    """n = (k^g + 1)*m + r with m located on the boundary lattice.

    m falls in [k^s * t_ell, k^s * t_(ell+1)) for a unique scale s >= 0 and
    seed position 0 <= ell < a; that half-open cell is the extended boundary
    block number ell + s*a.
    """

    n: int
    m: int
    r: int
    s: int
    ell: int
    g: int


def decompose(s: BlockSet, n: int, g: int) -> Decomposition:
    """Split n by k^g + 1 and locate the quotient on the boundary lattice."""
    tail = _require_anchored_tail(s)
    if g < 1 or g % 2 == 0:
        raise ValueError(f"exponent g must be odd and positive, got {g}")
    if n < 0:
        raise ValueError(f"target n must be nonnegative, got {n}")
    k, a = tail.k, tail.a
    m, r = divmod(n, k**g + 1)
    t0 = s.boundaries[0]
    if m < t0:
        raise ValueError(
            f"n = {n} too small: quotient m = {m} sits below t_0 = {t0}, "
            "off the boundary lattice"
        )
    scale = 0
    while k ** (scale + 1) * t0 <= m:
        scale += 1
    ell = 0
    while ell + 1 < a and k**scale * s.boundaries[ell + 1] <= m:
        ell += 1
    return Decomposition(n=n, m=m, r=r, s=scale, ell=ell, g=g)


# ---------------------------------------------------------------------------
# multiplicative dependence of two ratios


@dataclass(frozen=True)
class MultiplicativeProfile:
    """Maximal common base d with k = d^p, l = d^q, gcd(p, q) = 1."""

    dependent: bool
    d: int | None = None
    p: int | None = None
    q: int | None = None


def _integer_root(x: int, e: int) -> int:
    """Largest r with r**e <= x, by bisection (exact for big ints)."""
    lo, hi = 1, 1 << (x.bit_length() // e + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**e <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _primitive_power(x: int) -> tuple[int, int]:
    """Write x = b**e with e maximal; b is then not a perfect power."""
    for e in range(x.bit_length(), 1, -1):
        r = _integer_root(x, e)
        if r**e == x:
            return r, e
    return x, 1


def multiplicative_profile(k: int, l: int) -> MultiplicativeProfile:
    """Classify k and l as powers of a maximal common base, if one exists."""
    if k < 2 or l < 2:
        raise ValueError(f"ratios must be at least 2, got k={k}, l={l}")
    b1, e1 = _primitive_power(k)
    b2, e2 = _primitive_power(l)
    if b1 != b2:
        return MultiplicativeProfile(dependent=False)
    h = gcd(e1, e2)
    return MultiplicativeProfile(dependent=True, d=b1**h, p=e1 // h, q=e2 // h)


def intersection_nonempty(k: int, l: int) -> bool:
    """Whether log k / log l is a ratio of two odd integers."""
    prof = multiplicative_profile(k, l)
    return bool(prof.dependent and prof.p % 2 == 1 and prof.q % 2 == 1)
