"""
Classifying (d, q) pairs by base-p digits
=========================================

Whether S_d can be a sumset is governed by the base-p digits of
(q-1)/d.  classify_pair evaluates four concrete digit bullets (a "good"
pair admits no self-sum decomposition), a delta grid, and the full table
of theorem verdicts with their proof tiers.
"""

from sgdecomp import classify_pair

for d, q in [(3, 13), (2, 169), (8, 121), (8, 49)]:
    pc = classify_pair(d, q)
    print(f"(d={d}, q={q}): digits of (q-1)/d base {pc.p} = "
          f"{list(pc.expansion.digits)}")
    print(f"  good: {pc.is_good}  bullets: {list(pc.bullets)}"
          f"  delta_sup: {pc.delta_sup}")

# (8, 49) fails every bullet, and it must: the subfield chain realizes
# S_8 = A + A there, so no correct criterion can call it good.
pc = classify_pair(8, 49)
assert not pc.is_good

# Verdicts split into PROVED (hold at every size) and CONDITIONAL
# (true hypotheses, but the conclusion needs q beyond an ineffective
# threshold, so desk-scale searches can still find witnesses).
print("\nverdicts for (d=2, q=13):")
for v in classify_pair(2, 13).verdicts:
    if v.applies:
        print(f"  [{v.tier}] {v.rule}: {v.conclusion}")

print("\nverdicts for (d=2, q=2003):")
for v in classify_pair(2, 2003).verdicts:
    if v.applies:
        print(f"  [{v.tier}] {v.rule}: {v.conclusion}")
