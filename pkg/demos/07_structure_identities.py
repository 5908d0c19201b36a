"""
Symmetric-function structure behind the certificate
===================================================

The linear system defining the certificate coefficients has explicit
symmetric-function content: the power sums of the c_i against A are
complete homogeneous polynomials h_k(A), and the minors that decide
whether the auxiliary polynomial collapses are generalized Vandermonde
determinants.  Everything here is exact field arithmetic.
"""

from sgdecomp import (
    FqSubset,
    build_certificate,
    complete_homogeneous,
    generalized_vandermonde_det,
    make_field_q,
    power_sum_identity_check,
    solve_coefficient_system,
    structure_check,
)

ctx = make_field_q(13)
elems = (2, 5, 6)
coeffs = solve_coefficient_system(ctx, elems)
print("A =", elems, " certificate coefficients c =", coeffs)

# sum_i c_i a_i^(n-1+k) = h_k(A) for every k; spot-check k = 0..6.
h = complete_homogeneous(ctx, elems, 6)
n = len(elems)
for k in range(7):
    lhs = 0
    for c, a in zip(coeffs, elems):
        lhs = ctx.add(lhs, ctx.mul(c, ctx.pow(a, n - 1 + k)))
    assert lhs == h[k]
print("power sums match h_0..h_6:", list(h))

# The packaged check runs the same identity on a full certificate.
cert = build_certificate(ctx, FqSubset.from_indices(ctx, (0, 7)),
                         FqSubset.from_indices(ctx, (1, 5)), 3)
print("identity holds on the golden certificate:",
      power_sum_identity_check(cert))

# structure_check explains zero collapses through binomial minors: on the
# F_49 subfield pair both leading minors die mod 7.
ctx49 = make_field_q(49)
aa = FqSubset.from_indices(ctx49, (1, 2, 4))
rep = structure_check(build_certificate(ctx49, aa, aa, 8))
print("\nF_49 subfield pair: poly is zero:", rep.poly_is_zero)
print("  leading binomial minors (top, bottom, nonzero):",
      rep.binom_top, rep.binom_second)

# A singular generalized Vandermonde: columns (0, 1, 3) on {1, 3, 9}
# in F_13 has determinant 0 because h_1(1,3,9) = 13 = 0 mod 13.
det = generalized_vandermonde_det(ctx, (1, 3, 9), 3)
print("\ngeneralized Vandermonde det on {1,3,9}, top exponent 3:", det)
