"""Fibonacci polynomials from determinants and from a cosine product.

Setting a = x and b = i in the doubled-corner family ties its determinant to
the Fibonacci polynomial F_{n-1}: det = (x**2 + 4) F_{n-1}(x).  Since the
determinant is also the product of the closed-form eigenvalues, F_{n-1} is a
product of cosine factors.  The product form here cancels the (x**2 + 4)
factor analytically, so it stays finite even at x = 2i where the printed
identity would divide by zero.
"""

from tripow import fib_det_check, fib_factor_eval, fib_poly_eval

print("F_n(1) reproduces the Fibonacci numbers:")
print([int(fib_poly_eval(k, 1.0).real) for k in range(12)])

print("\ndeterminant identity at n=6, x=1:")
lhs, rhs = fib_det_check(6, 1.0)
print(f"  det = {lhs:.12g}")
print(f"  (x**2 + 4) F_5(x) = {rhs:.12g}")

print("\ntwo routes to F_4(x) at x = 0.5 + 0.25j:")
x = 0.5 + 0.25j
print("  recurrence:   ", fib_poly_eval(4, x))
print("  cosine product:", fib_factor_eval(5, x))

print("\nthe pole of the printed identity, x = 2i:")
x = 2j
print("  recurrence:   ", fib_poly_eval(4, x))
print("  cosine product:", fib_factor_eval(5, x))
