"""Desk-scale experiments: equality windows, ratio scans, seed searches.

Can a block set represent every n exactly as often as its complement does?
These helpers only ever check finite windows; a clean window is an
observation, not a proof. The doubling set below shows how close a simple
set gets: equality on every odd n in the window, off by one on every even.
"""

from __future__ import annotations

import io

from repfn import (
    BlockSet,
    TailRule,
    intersection_nonempty,
    scan_ratio,
    scan_to_csv,
    search_seeds,
    verify_equality,
)

dyadic = BlockSet((1,), TailRule(a=1, k=2, i0=0))
print("doubling set [1,2) u [4,8) u [16,32) ... vs its complement, k = 2:")
rep = verify_equality(dyadic, 2, 10, 60, record_per_n=True)
print(f"  window [10, 60]: {rep.equal_count} of 51 equal, first violation at {rep.first_violation}")
for n, ra, rc in rep.per_n[:6]:
    mark = "=" if ra == rc else "!"
    print(f"    n = {n:2d}: set {ra}, complement {rc}  {mark}")

print()
print("searching all period-3 seeds with t0 <= 4, width <= 3 at ratio 2:")
results = search_seeds(2, 3, 4, 3, 200)
for seed, r in results:
    status = "clean" if r.first_violation is None else f"violated at {r.first_violation}"
    print(f"  seed {seed}: {status} on [{r.n_lo}, {r.n_hi}]")

print()
s = BlockSet((4, 5, 7), TailRule(a=3, k=2, i0=0))
print("ratio r/n on the containing side for the running example:")
scan = scan_ratio(s, 2, 600, 700, 7, stride=20)
for p in scan.points:
    print(f"  n = {p.n}: r_set = {p.r_set}, r_comp = {p.r_comp}, ratio = {p.ratio}")
print(f"  min over the window's second half: {scan.min_ratio}")
print(f"  theoretical floor {scan.theoretical_floor}, trivial ceiling {scan.trivial_ceiling}")

buf = io.StringIO()
scan_to_csv(scan, buf)
print()
print("the same series as CSV (scan --format csv):")
for line in buf.getvalue().strip().splitlines():
    print(f"  {line}")

print()
print("which scale ratios can share a self-similar set at all?")
for k, l in ((2, 8), (8, 32), (2, 4), (2, 3)):
    verdict = "can" if intersection_nonempty(k, l) else "cannot"
    print(f"  ratios {k} and {l} {verdict} coexist")
