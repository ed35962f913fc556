"""Anatomy of a self-similar block set.

Builds the running example (seed boundaries 4, 5, 7 with period 3 and
ratio 2), walks its blocks, pokes at membership, complement, and the
two-sided boundary lattice, and round-trips the JSON document.
"""

from __future__ import annotations

import json

from repfn import BlockSet, TailRule, normalize

s = BlockSet((4, 5, 7), TailRule(a=3, k=2, i0=0))

print("blocks up to 120:")
for lo, hi in s.materialize(120):
    print(f"  [{lo}, {hi})")

print()
print("membership samples:")
for x in (3, 4, 5, 10, 13, 14, 40, 55, 56, 64):
    print(f"  {x:3d} {'in ' if x in s else 'out'}")

comp = s.complement()
print()
print("complement is O(1), just a flipped flag:")
print(f"  comp blocks up to 30: {comp.materialize(30)}")
print(f"  13 in s: {13 in s}, 13 in comp: {13 in comp}")
print(f"  comp.complement() == s: {comp.complement() == s}")

print()
print("the boundary lattice runs in both directions (t[i+3] = 2 t[i]):")
for i in range(-6, 10):
    print(f"  t[{i:2d}] = {s.boundary(i)}")

print()
print("finite sets come from interval lists; overlaps merge:")
t = normalize([(2, 4), (0, 1), (3, 6)])
print(f"  normalize([(2,4), (0,1), (3,6)]) -> boundaries {t.boundaries}")
print(f"  members below 8: {[x for x in range(8) if x in t]}")

print()
print("sets serialize to a small JSON document:")
doc = s.to_doc()
print(f"  {json.dumps(doc)}")
print(f"  round trip ok: {BlockSet.from_doc(doc) == s}")
