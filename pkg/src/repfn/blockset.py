"""Block-structured subsets of the nonnegative integers.

A :class:`BlockSet` is a union of half-open intervals ("blocks") described by
a strictly increasing boundary sequence t_0 < t_1 < ..., optionally extended
to infinity by a scaling rule t_{i+a} = k * t_i that holds from some index i0
on.  With ``leading_gap`` true the set is [t_0,t_1) | [t_2,t_3) | ...; with it
false the phase flips, so the set additionally contains [0, t_0).  The
complement of a block set is the same boundary sequence with the flag
flipped, which makes complementation exact, O(1), and an involution.

Two degenerate encodings are deliberate: ``BlockSet(())`` is the empty set
and ``BlockSet((), leading_gap=False)`` is all of N.

When a tail rule with i0 = 0 is present the boundary sequence extends to
*negative* indices as well, via t_{i-a} = t_i / k.  Those values are exact
rationals whose denominators are powers of k; :meth:`BlockSet.boundary`
returns them as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


@dataclass(frozen=True)
class TailRule:
    """Self-similar extension: t_{i+a} = k * t_i for every index i >= i0."""

    a: int
    k: int
    i0: int = 0

    def __post_init__(self) -> None:
        if self.a < 1 or self.a % 2 == 0:
            raise ValueError(f"tail period a must be odd and positive, got {self.a}")
        if self.k < 2:
            raise ValueError(f"tail ratio k must be at least 2, got {self.k}")
        if self.i0 < 0:
            raise ValueError(f"tail anchor i0 must be nonnegative, got {self.i0}")


@dataclass(frozen=True)
class BlockSet:
    """An integer set stored as interval boundaries plus an optional tail rule.

    The stored prefix must contain the full seed t_{i0} .. t_{i0+a-1} when a
    tail is present, and the rule must hold exactly wherever both sides of
    t_{i+a} = k * t_i are stored.  All instances are immutable; derived sets
    (complements, truncations) are new objects.
    """

    boundaries: tuple[int, ...]
    tail: TailRule | None = None
    leading_gap: bool = True

    def __post_init__(self) -> None:
        bs = tuple(int(t) for t in self.boundaries)
        object.__setattr__(self, "boundaries", bs)
        if any(t < 0 for t in bs):
            raise ValueError("boundaries must be nonnegative")
        if any(bs[i] >= bs[i + 1] for i in range(len(bs) - 1)):
            raise ValueError("boundaries must be strictly increasing")
        tail = self.tail
        if tail is None:
            return
        a, k, i0 = tail.a, tail.k, tail.i0
        if len(bs) < i0 + a:
            raise ValueError(
                f"tail rule needs the seed t_{i0}..t_{i0 + a - 1} stored; "
                f"only {len(bs)} boundaries given"
            )
        for i in range(i0, len(bs) - a):
            if bs[i + a] != k * bs[i]:
                raise ValueError(
                    f"stored prefix violates t_(i+a) = k*t_i at i={i}: "
                    f"{bs[i + a]} != {k}*{bs[i]}"
                )
        # The first generated boundary k*t_{i0+...} must continue the strict
        # increase; equivalent to k*t_{i0} > t_{i0+a-1} on the seed.
        if k * bs[i0] <= bs[i0 + a - 1]:
            raise ValueError(
                f"seed not expandable: k*t_{i0} = {k * bs[i0]} must exceed "
                f"t_{i0 + a - 1} = {bs[i0 + a - 1]}"
            )

    # -- membership ---------------------------------------------------------

    def boundaries_through(self, limit: int) -> list[int]:
        """Every boundary value <= limit, stored plus tail-generated."""
        bs = self.boundaries
        vals = [t for t in bs if t <= limit]
        if self.tail is None or len(vals) < len(bs):
            return vals
        a, k = self.tail.a, self.tail.k
        while vals:
            nxt = k * vals[-a]
            if nxt > limit:
                break
            vals.append(nxt)
        return vals

    def contains(self, x: int) -> bool:
        """Exact membership test.  x must be a nonnegative integer."""
        if x < 0:
            raise ValueError(f"members are nonnegative integers, got {x}")
        parity_odd = len(self.boundaries_through(x)) % 2 == 1
        return parity_odd == self.leading_gap

    def __contains__(self, x: int) -> bool:
        return x >= 0 and self.contains(x)

    # -- derived sets --------------------------------------------------------

    def complement(self) -> BlockSet:
        """N minus this set: same boundaries, flipped phase flag."""
        return dataclasses.replace(self, leading_gap=not self.leading_gap)

    def truncate_to_tail(self) -> BlockSet:
        """Drop the irregular prefix so the scaling law anchors at index 0.

        Returns an equal set when i0 is already 0.  Otherwise the members
        below the first in-set block at index >= i0 are discarded and the
        result has leading_gap=True with a re-anchored TailRule(a, k, 0).
        """
        tail = self.tail
        if tail is None:
            raise ValueError("set has no tail rule to align to")
        if tail.i0 == 0:
            return self
        j = tail.i0 if self._block_in_set(tail.i0) else tail.i0 + 1
        vals = list(self.boundaries[j:])
        if len(vals) < tail.a:
            # j = i0+1 can leave a-1 seed rows; regenerate the missing one.
            vals.append(tail.k * self.boundaries[j - 1])
        return BlockSet(tuple(vals), TailRule(tail.a, tail.k, 0), True)

    def _block_in_set(self, j: int) -> bool:
        """Whether the block [t_j, t_{j+1}) belongs to the set."""
        return (j % 2 == 0) == self.leading_gap

    # -- views ----------------------------------------------------------------

    def materialize(self, limit: int) -> list[tuple[int, int]]:
        """The set's blocks intersected with [0, limit), as (lo, hi) pairs."""
        if limit < 0:
            raise ValueError(f"limit must be nonnegative, got {limit}")
        out: list[tuple[int, int]] = []
        inside = not self.leading_gap
        prev = 0
        for t in self.boundaries_through(limit):
            if inside and prev < t:
                out.append((prev, t))
            inside = not inside
            prev = t
        if inside and prev < limit:
            out.append((prev, limit))
        return out

    def boundary(self, i: int) -> Fraction:
        """t_i for any integer index i reachable from the data.

        Stored indices return the stored value.  With a tail rule, indices
        above the prefix extend by repeated multiplication; with i0 = 0 the
        extension is two-sided and negative indices yield exact rationals
        t_{i-a} = t_i / k whose denominators are powers of k.
        """
        bs = self.boundaries
        if 0 <= i < len(bs):
            return Fraction(bs[i])
        tail = self.tail
        if tail is None:
            raise ValueError(f"index {i} outside stored boundaries and no tail rule")
        a, k, i0 = tail.a, tail.k, tail.i0
        if i >= i0:
            j = (i - i0) % a
            c = (i - i0 - j) // a
            return Fraction(bs[i0 + j] * k**c)
        if i0 != 0:
            raise ValueError(
                f"index {i} precedes the tail anchor i0={i0}; "
                "two-sided extension needs i0=0 (use truncate_to_tail())"
            )
        j = i % a
        c = (i - j) // a  # negative
        return Fraction(bs[j], k**-c)

    # -- canonical JSON document ----------------------------------------------

    def to_doc(self) -> dict:
        """Plain-JSON form: {"boundaries": [...], "leading_gap": ..., "tail": ...}."""
        tail = None
        if self.tail is not None:
            tail = {"a": self.tail.a, "k": self.tail.k, "i0": self.tail.i0}
        return {
            "boundaries": list(self.boundaries),
            "leading_gap": self.leading_gap,
            "tail": tail,
        }

    @classmethod
    def from_doc(cls, doc: dict) -> BlockSet:
        if not isinstance(doc, dict) or "boundaries" not in doc:
            raise ValueError("set document must be an object with a 'boundaries' list")
        tail_doc = doc.get("tail")
        tail = None
        if tail_doc is not None:
            try:
                tail = TailRule(
                    a=int(tail_doc["a"]),
                    k=int(tail_doc["k"]),
                    i0=int(tail_doc.get("i0", 0)),
                )
            except (KeyError, TypeError) as exc:
                raise ValueError(f"malformed tail rule: {tail_doc!r}") from exc
        return cls(
            boundaries=tuple(int(t) for t in doc["boundaries"]),
            tail=tail,
            leading_gap=bool(doc.get("leading_gap", True)),
        )


def normalize(intervals: Iterable[Sequence[int]]) -> BlockSet:
    """Merge half-open intervals into a canonical finite BlockSet.

    Input intervals may overlap, touch, or arrive unsorted; each must satisfy
    0 <= lo < hi.  The result always has leading_gap=True (t_0 = 0 allowed).
    """
    cleaned: list[tuple[int, int]] = []
    for iv in intervals:
        lo, hi = int(iv[0]), int(iv[1])
        if lo < 0 or lo >= hi:
            raise ValueError(f"intervals need 0 <= lo < hi, got ({lo}, {hi})")
        cleaned.append((lo, hi))
    cleaned.sort()
    merged: list[list[int]] = []
    for lo, hi in cleaned:
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    bounds: list[int] = []
    for lo, hi in merged:
        bounds.append(lo)
        bounds.append(hi)
    return BlockSet(tuple(bounds), None, True)
