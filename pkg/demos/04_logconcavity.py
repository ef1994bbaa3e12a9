"""Where log-concavity holds, and where it breaks.

Rows of these triangles look robustly log-concave.  Columns do not: in the
(one, id) family the column entries are S(n, m)/n!, and each column starts
failing once n is large enough.  The first failures grow roughly like a
geometric progression, and for m = 2 the verdict at every center n is
decided by the sign of a harmonic-number expression delta(n).
"""

from lclab import (
    build_triangle,
    delta,
    first_failure_table,
    first_vertical_failure,
    harmonic,
    horizontal_check,
    one,
    sigma,
    vertical_check,
)

print("horizontal scan, divisor-sum family, n <= 120:")
print(" ", horizontal_check(build_triangle(sigma(), "id", 120)).passed and "all rows pass")

print()
print("vertical scan of the same family, columns 1..6, n <= 60:")
report = vertical_check(build_triangle(sigma(), "id", 60), 1, 6)
print(f"  {len(report.failures)} failing centers; first few: {report.failures[:6]}")

print()
print("first failing center per column of the (one, id) family:")
firsts = first_failure_table(7)
for m, n0 in enumerate(firsts, 1):
    print(f"  m={m}: n0 = {n0}")

print()
tri = build_triangle(one(), "id", 60)
print("the same numbers from a direct triangle scan (m <= 3):",
      [first_vertical_failure(tri, m) for m in (1, 2, 3)])

print()
print("m = 2 is decided by the sign of delta(n), which turns negative")
print("once the harmonic number H(n-1) crosses 2:")
for n in (2, 3, 4, 5, 6):
    print(f"  n={n}: H(n-1) = {harmonic(n-1)}  delta = {delta(n)}")
