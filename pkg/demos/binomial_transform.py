"""
Binomial transform over a staircase
===================================

b_k = sum over i <= k of C(k, i) a_i, restricted to a downward-closed set.
Because the set is closed under <=, the truncated transform is invertible
by the same formula with alternating signs.
"""
from multipascal import degree_window
from multipascal.pascal import binomial_transform, inverse_binomial_transform
from multipascal.poly import Polynomial, monomial_power

W = degree_window(2, 3)

ones = {k: 1 for k in W}
print("transform of all ones:", [binomial_transform(W, ones)[k] for k in W])

fib = [0, 1]
while len(fib) < 10:
    fib.append(fib[-1] + fib[-2])
a = {k: fib[k[0]] * fib[k[1] + 1] for k in W}
b = binomial_transform(W, a)
print("a:", [a[k] for k in W])
print("b:", [b[k] for k in W])
print("round trip:", inverse_binomial_transform(W, b) == a)

# On the monomials x^k the transform shifts every variable by one
x = [Polynomial.var(1, 3), Polynomial.var(2, 3)]
mono = {k: monomial_power(x, k) for k in W}
shifted = binomial_transform(W, mono)
for k in list(W)[:6]:
    print(f"  {tuple(k)}: {shifted[k]}")
