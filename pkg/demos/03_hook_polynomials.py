"""Hook-length polynomials from Young diagrams.

For each partition of n, multiply (x + h^2)/h^2 over the hook lengths h of
its diagram and sum over all partitions.  The resulting polynomial Q_n has
Q_n(0) = p(n), and it coincides with the divisor-sum row polynomial shifted
by one:  Q_n(x) = P_n(x + 1) for the (sigma, id) family.  The two sides
share no code: one comes from combinatorics, the other from a recursion.
"""

from lclab import (
    build_triangle,
    check_no_identity,
    count_partitions,
    hook_lengths,
    iter_partitions,
    nekrasov_okounkov_poly,
    sigma,
    taylor_shift,
)

print("partitions of 5, with their hook length multisets:")
for parts in iter_partitions(5):
    print(f"  {str(parts):18} hooks {sorted(hook_lengths(parts), reverse=True)}")

print()
print("hook polynomials:")
for n in range(5):
    q = nekrasov_okounkov_poly(n)
    print(f"  Q_{n}(x) =", " + ".join(f"({c}) x^{i}" for i, c in enumerate(q.coeffs)))

print()
tri = build_triangle(sigma(), "id", 6)
print("shift identity at n = 4:")
print("  hook side   ", nekrasov_okounkov_poly(4))
print("  shifted row ", taylor_shift(tri.row_poly(4), 1))

print()
print("Q_n(0) versus the partition counter:")
for n in range(9):
    print(f"  n={n}: {nekrasov_okounkov_poly(n)(0)} vs p(n) = {count_partitions(n)}")

print()
print(check_no_identity(14))
