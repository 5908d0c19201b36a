"""
A polynomial certificate for the size bound
===========================================

If A + B lands inside S_d (up to 0), an auxiliary polynomial of degree
(q-1)/d + |A| - 1 vanishes to order |A| at every point of B.  Counting
roots with multiplicity gives |A||B| <= (q-1)/d + |A intersect -B|
whenever a single binomial coefficient survives mod p.  The certificate
below carries every ingredient and re-verifies them on construction.
"""

from sgdecomp import (
    FqSubset,
    build_certificate,
    make_field_q,
    zero_polynomial_dichotomy,
)

ctx = make_field_q(13)
a = FqSubset.from_indices(ctx, (0, 7))
b = FqSubset.from_indices(ctx, (1, 5))

# A + B = {1, 5, 8, 12} is exactly the cubes, so d = 3 applies.
cert = build_certificate(ctx, a, b, 3)
print("coefficients c =", cert.coefficients)
print("auxiliary polynomial degree", cert.poly.degree,
      " (cap (q-1)/d =", (13 - 1) // 3, ")")
print("binomial C(%d, %d) mod 13 = %d, nonzero: %s"
      % (cert.exponent, (13 - 1) // 3, cert.binom_residue, cert.binom_ok))
print("multiplicity at each b in B:", cert.multiplicity)
print("bound |A||B| <= %d; actual product %d; tight: %s"
      % (cert.bound, cert.product, cert.tight))

# The same machinery classifies what happens when the pair is too big for
# the degree cap: the polynomial is forced to vanish identically instead
# of certifying a bound.  The embedded copy of F_7^* inside F_49 is the
# canonical example.
ctx49 = make_field_q(49)
aa = FqSubset.from_indices(ctx49, (1, 2, 4))
dich = zero_polynomial_dichotomy(ctx49, aa, aa, 8)
print("\nF_49, d = 8, A = B = {1, 2, 4}:")
print("dichotomy:", dich.kind)
print("certified bound:", dich.certified_bound,
      " (product 9 exceeds the degree cap 6, so f = 0)")
print("polynomial is literally zero:", dich.certificate.poly.is_zero)
