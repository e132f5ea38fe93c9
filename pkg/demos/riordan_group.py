"""
Multivariate Riordan arrays
===========================

A pair (G, X) of truncated power series acts as a matrix on the monomial
basis.  Products of pairs become products of matrices, and the Pascal
matrix is the pair (1/((1-z1)(1-z2)), z/(1-z)).
"""
import random

from multipascal.formats import format_matrix
from multipascal.pascal import build_L_power, inverse
from multipascal.pointset import degree_window
from multipascal.riordan import (RiordanBasis, pascal_basis, random_basis, riordan_inverse,
                                 riordan_matrix)

P = RiordanBasis.parse("1/((1-z1)*(1-z2))", ["z1/(1-z1)", "z2/(1-z2)"], 3)
print("G =", P.g)
print("X1 =", P.x[0])
print("matrix up to degree 3:")
print(format_matrix(riordan_matrix(P), "text"))

Pinv = riordan_inverse(P)
print("inverse pair: G =", Pinv.g, "  X1 =", Pinv.x[0])
print("matches L^-1:", riordan_matrix(Pinv) == build_L_power(degree_window(2, 3), -1))

# Powers of the Pascal pair are the Pascal pair with ratio p
print("P * P == Pascal pair with p=2:", P * P == pascal_basis(2, 3, 2))

# The matrix representation is multiplicative for any pair
rng = random.Random(1)
a, b = random_basis(rng, 2, 4), random_basis(rng, 2, 4)
ma, mb = riordan_matrix(a), riordan_matrix(b)
print("M(a*b) == M(a) M(b):", riordan_matrix(a * b) == ma @ mb)
print("M(a^-1) == M(a)^-1:", riordan_matrix(riordan_inverse(a)) == inverse(ma))
