"""Build coefficient triangles and look at their exact entries.

Each family is fixed by an arithmetic function g (normalized so g(1) = 1)
and a weight h in {one, id}: P_0 = 1 and

    P_n(x) = (x / h(n)) * sum_{k=1..n} g(k) P_{n-k}(x).

Rows of the triangle are the coefficients of P_n.
"""

from lclab import build_triangle, identity, one, sigma

print("== divisor-sum family (g = sigma, h = id) ==")
tri = build_triangle(sigma(), "id", 8)
for n in range(9):
    print(f"  P_{n}: ", " ".join(str(v) for v in tri.row_values(n)) if n else "1")

print()
print("row sums at x = 1 count partitions:",
      [int(tri.row_poly(n)(1)) for n in range(9)])

print()
print("== the (one, id) family, integer-scaled by n! ==")
tri = build_triangle(one(), "id", 6)
for n in range(1, 7):
    print(f"  n={n}:", tri.row_scaled(n))
print("these scaled rows are the unsigned Stirling numbers of the first kind")

print()
print("== geometric weight: (one, one) rows are x (x+1)^(n-1) ==")
tri = build_triangle(one(), "one", 5)
for n in range(1, 6):
    print(f"  n={n}:", tri.row_scaled(n))

print()
print("== boundary entries ==")
tri = build_triangle(identity(), "id", 7)
print("  first column g(n)/h(n):", [str(tri.value(n, 1)) for n in range(1, 8)])
print("  diagonal 1/n! :", [str(tri.value(n, n)) for n in range(1, 8)])
