"""
Pascal matrices of a point set
==============================

Build L, U and S for a small downward-closed set in the plane, check
S = L U and the determinants, and watch both fail once the set has a hole.
"""
from multipascal import PointSet, standard_monomials, MonomialIdeal
from multipascal.formats import format_matrix
from multipascal.pascal import (build_A, build_D, build_L, build_L_power, build_S, build_U,
                                determinant, inverse, matrix_exponential_nilpotent)

# Staircase of the ideal (x^2, xy, y^3): rows and columns run in grevlex order
R = standard_monomials(MonomialIdeal([(2, 0), (1, 1), (0, 3)]))
print("R =", R.to_lists())

L, U, S = build_L(R), build_U(R), build_S(R)
print("L_R:")
print(format_matrix(L, "text"))
print("S_R:")
print(format_matrix(S, "text"))
print("S == L U:", S == L @ U, " det S =", determinant(S))

# Sign conjugation inverts L and U
D = build_D(R)
print("L^-1 == D L D:", inverse(L) == D @ L @ D)
print("U^-1 == D U D:", inverse(U) == D @ U @ D)
# for S the factors swap places
print("S^-1 == D U L D:", inverse(S) == D @ U @ L @ D)
print("S^-1 == D S D:", inverse(S) == D @ S @ D)

# Integer powers in closed form, and exp(p A) reaching the same matrix
for p in (-2, 3):
    Lp = build_L_power(R, p)
    print(f"L^{p} == exp({p} A):", Lp == matrix_exponential_nilpotent(build_A(R), p))
print("L^3:")
print(format_matrix(build_L_power(R, 3), "text"))

# Drop (0,1) and the factorization breaks
R2 = PointSet([(0, 0), (1, 0), (0, 2)])
print("R' =", R2.to_lists(), "downward closed:", R2.monomial_condition)
print("S' == L' U':", build_S(R2) == build_L(R2) @ build_U(R2),
      " det S' =", determinant(build_S(R2)))
