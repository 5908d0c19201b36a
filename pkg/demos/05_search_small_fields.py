"""
Exhaustive decomposition search
===============================

For small q the package settles decomposition questions outright: it
enumerates all A + B = S_d up to the symmetries (part swap, dilation by
S_d, translation between parts) and returns one canonical witness per
orbit, or a certified NONE_EXHAUSTIVE.
"""

from sgdecomp import SearchTask, make_field_q, search_binary, verify_witness

# The cubes in F_13 decompose in exactly one way up to symmetry.
res = search_binary(SearchTask(q=13, d=3))
print("q=13, d=3:", res.kind, "with", len(res.witnesses), "orbit(s)")
for w in res.witnesses:
    print("  A =", list(w.parts[0]), " B =", list(w.parts[1]))
    assert verify_witness(make_field_q(13), w.parts, 3)

# The squares in F_13 do not decompose at all; the pruned search proves
# it without visiting a single candidate pair.
res = search_binary(SearchTask(q=13, d=2))
print("\nq=13, d=2:", res.kind, " nodes visited:", res.nodes)
print("  prune counters:", {k: v for k, v in res.prune_counts.items() if v})

# The embedded copy of F_7^* inside F_49 decomposes; one orbit has equal
# parts, which is the subfield self-sum.
res = search_binary(SearchTask(q=49, d=8))
print("\nq=49, d=8:", res.kind, "with", len(res.witnesses), "orbit(s)")
for w in res.witnesses:
    print("  A =", list(w.parts[0]), " B =", list(w.parts[1]))

# Budgets degrade honestly: a starved search reports UNKNOWN or an
# incomplete EXISTS, never a false NONE_EXHAUSTIVE.
res = search_binary(SearchTask(q=121, d=2, budget=200))
print("\nq=121, d=2 with a 200-node budget:", res.kind,
      " complete:", res.complete)
