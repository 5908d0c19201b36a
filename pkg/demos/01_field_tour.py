"""
A tour of the field contexts
============================

Every computation in the package runs inside a FieldCtx: a small finite
field F_q, q = p^n up to 2^20, with exact integer arithmetic throughout.
Elements are integers 0..q-1 whose base-p digits are the coefficients of
the residue polynomial, lowest degree first.
"""

from sgdecomp import make_field, make_field_q

# A prime field needs nothing but p.
f13 = make_field_q(13)
print("F_13:", "modulus", f13.modulus, "generator", f13.generator)
print("  3 + 11 =", f13.add(3, 11), "   3 * 11 =", f13.mul(3, 11))
print("  inverse of 5 is", f13.inv(5), "since 5 *", f13.inv(5), "=",
      f13.mul(5, f13.inv(5)))

# Extension fields pick the lexicographically smallest monic irreducible
# modulus, so the same (p, n) always gives the same arithmetic.
f49 = make_field(7, 2)
print("\nF_49: modulus coefficients (low to high)", f49.modulus)
x = 7  # the element with digits (0, 1), i.e. the residue class of x
print("  x =", x, "has digits", f49.digits(x))
print("  x^2 =", f49.mul(x, x), "with digits", f49.digits(f49.mul(x, x)))

# Discrete logarithms are tabulated once per context; exp and dlog are
# exact inverses on the nonzero elements.
g = f49.generator
assert all(f49.exp[f49.dlog[v]] == v for v in range(1, 49))
print("\n  generator", g, "and for example g^5 =", f49.exp[5],
      "whose dlog is", f49.dlog[f49.exp[5]])

# Frobenius x -> x^7 permutes the field and fixes exactly the prime field.
fixed = [v for v in range(49) if f49.pow(v, 7) == v]
print("  fixed points of x -> x^7:", fixed)
