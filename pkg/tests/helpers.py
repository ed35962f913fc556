"""Shared generators and brute-force oracles used across test modules.

The brute-force functions here are deliberately written from definitions
(iterate members, test sums) so they stay independent of the library's
closed-form counting path.
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from repfn import BlockSet, generate_from_seed


def random_finite_set(rng: random.Random, max_blocks: int = 12, hi: int = 4096) -> BlockSet:
    nblocks = rng.randint(1, max_blocks)
    cuts = sorted(rng.sample(range(0, hi + 1), 2 * nblocks))
    return BlockSet(tuple(cuts), None, rng.random() < 0.5)


def random_tail_set(rng: random.Random, periods=(1, 3, 5), ratios=(2, 3)) -> BlockSet:
    a = rng.choice(periods)
    k = rng.choice(ratios)
    while True:
        t0 = rng.randint(1, 60)
        if (k - 1) * t0 - 1 >= a - 1:  # enough room for a-1 values in (t0, k*t0)
            break
    rest = sorted(rng.sample(range(t0 + 1, k * t0), a - 1))
    seed = (t0, *rest)
    limit = seed[-1] * k ** rng.randint(2, 5)
    return generate_from_seed(seed, a, k, limit)


def members_below(s: BlockSet, hi: int) -> set[int]:
    out: set[int] = set()
    for lo, up in s.materialize(hi):
        out.update(range(lo, up))
    return out


def brute_count(members: set[int], n: int, w: tuple[int, int]) -> int:
    k1, k2 = w
    count = 0
    for a2 in members:
        if k2 * a2 > n:
            continue
        rem = n - k2 * a2
        if rem % k1 == 0 and rem // k1 in members:
            count += 1
    return count


def brute_classic(members: set[int], n: int, variant: str) -> int:
    small = {x for x in members if x <= n}
    if variant == "R1":
        return sum(1 for a in small if n - a in small)
    if variant == "R2":
        return sum(1 for a in small for b in small if a < b and a + b == n)
    return sum(1 for a in small for b in small if a <= b and a + b == n)


@st.composite
def finite_blocksets(draw, max_blocks: int = 8, hi: int = 512) -> BlockSet:
    nblocks = draw(st.integers(0, max_blocks))
    cuts = draw(
        st.lists(
            st.integers(0, hi),
            min_size=2 * nblocks,
            max_size=2 * nblocks,
            unique=True,
        )
    )
    return BlockSet(tuple(sorted(cuts)), None, draw(st.booleans()))
