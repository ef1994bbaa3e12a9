"""Three independent roads to the same coefficients.

The recursion that builds a triangle never touches power series.  But the
rows evaluated at x must match, coefficient by coefficient,

  * exp(x E(T)) when h = id, with E(T) = sum g(n)/n T^n,
  * 1 / (1 - x G(T)) when h = one, with G(T) = sum g(n) T^n,
  * the Euler product prod (1 - T^n)^(-x f(n)/n) with f = mu * g (h = id).

Running all three against the recursion is the package's main self-check.
"""

from fractions import Fraction

from lclab import (
    build_triangle,
    eichler_integral,
    euler_product,
    euler_product_crosscheck,
    genfun_crosscheck,
    moebius_convolve,
    one,
    sigma,
)

N = 20

print("exp route, divisor-sum family, x = 3:")
series = (3 * eichler_integral(sigma(), 6)).exp()
tri = build_triangle(sigma(), "id", 6)
for n in range(7):
    print(f"  [T^{n}]  series {series.coefficient(n)}  row {tri.row_poly(n)(3)}")

print()
print("crosschecks over all default sample points:")
print(" ", genfun_crosscheck(sigma(), "id", N))
print(" ", genfun_crosscheck(one(), "one", N))
print(" ", euler_product_crosscheck(sigma(), N, Fraction(1, 2)))

print()
print("the Euler product with every exponent -1 generates p(n):")
gen = euler_product([-1] * (N + 1), N)
print(" ", [int(gen.coefficient(n)) for n in range(N + 1)])

print()
print("mu * sigma gives back the identity function:")
f = moebius_convolve(sigma(), 12)
print(" ", [f(n) for n in range(1, 13)])
