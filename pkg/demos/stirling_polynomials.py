"""
Stirling polynomials and the Vandermonde factorization
======================================================

The factorial Stirling matrix of a staircase, multiplied by its Pascal
matrix, gives the Vandermonde matrix of the linear forms
A_k = x0 + k1 x1 + ... + kn xn.
"""
from multipascal import PointSet
from multipascal.formats import format_matrix
from multipascal.pascal import binomial_transform, build_L
from multipascal.stirling import (build_stirling_matrix, build_vandermonde_matrix,
                                  linear_form, stirling_number, stirling_poly,
                                  stirling_poly_egf, verify_decomposition)

print("S(5, k):", [stirling_number(5, k) for k in range(6)])

k = (0, 1)
for ell in range(4):
    print(f"S_{k}^({ell}) =", stirling_poly(k, ell))
# the generating function gives the same polynomials
print("closed formula == EGF:", all(stirling_poly(k, e) == stirling_poly_egf(k, e)
                                    for e in range(8)))

R = PointSet([(0, 0), (0, 1), (1, 0), (2, 0)])
M = build_stirling_matrix(R, 3)
print("factorial Stirling matrix, l <= 3:")
print(format_matrix(M, "text"))
print("L_R M:")
print(format_matrix(build_L(R) @ M, "text"))
print("equals Vandermonde:", build_L(R) @ M == build_vandermonde_matrix(R, 3))

# Row by row this is a binomial transform
seq = {k: stirling_poly(k, 4) * k.factorial() for k in R}
out = binomial_transform(R, seq)
for k in R:
    print(f"  {tuple(k)}: {out[k]}   A_k^4 = {linear_form(k) ** 4}")

print("holds on a set with a hole:", verify_decomposition(PointSet([(0, 0), (1, 0), (0, 2)]), 3))
