"""Integer partitions, hook lengths, and hook-length polynomials.

Partitions stream in descending lexicographic order as tuples of parts
(largest first), using the iterative successor algorithm that mutates a
shared buffer, so memory stays O(n) no matter how many partitions there
are.  Hooks come from the conjugate shape: the cell (i, j) of the diagram
has hook length lambda_i + lambda'_j - i - j - 1 (zero-based i, j).

The hook-length polynomial of weight n,

    Q_n(x) = sum over partitions of n of prod over cells of (x + h^2) / h^2,

has Q_n(0) = p(n) and equals the weight-n row polynomial of the divisor-sum
family shifted by one.  check_no_identity verifies that shift identity with
both sides computed through completely different pipelines (hook products
versus the coefficient recursion).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .triangles import CheckResult, Poly, build_triangle


def iter_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all partitions of n as descending tuples, descending-lex order.

    The first partition is (n,), the last is (1,) * n.  p(0) = 1: the empty
    tuple is yielded once for n = 0.
    """
    if n < 0:
        raise ValueError("partitions are defined for n >= 0")
    if n == 0:
        yield ()
        return
    x = [1] * (n + 1)
    x[1] = n
    m = 1
    h = 1
    yield tuple(x[1 : m + 1])
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1 : m + 1])


def count_partitions(n: int) -> int:
    """p(n) by the bounded-part table, independent of the stream above."""
    if n < 0:
        raise ValueError("partitions are defined for n >= 0")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the Young diagram: column lengths of parts."""
    if not parts:
        return ()
    conj = [0] * parts[0]
    for p in parts:
        for j in range(p):
            conj[j] += 1
    return tuple(conj)


def hook_lengths(parts: tuple[int, ...]) -> list[int]:
    """Hook lengths of all cells, row-major.  A multiset: order is not part
    of the contract, only the counts are."""
    conj = conjugate(parts)
    hooks = []
    for i, p in enumerate(parts):
        for j in range(p):
            hooks.append(p + conj[j] - i - j - 1)
    return hooks


def nekrasov_okounkov_poly(n: int) -> Poly:
    """The hook-length polynomial Q_n, summed cell product by cell product.

    Each partition contributes prod (x + h^2) / prod h^2 over its hooks;
    the numerator is expanded with integer coefficients and divided once,
    so the result is exact.
    """
    if n < 0:
        raise ValueError("weight must be >= 0")
    acc = [Fraction(0)] * (n + 1)
    for parts in iter_partitions(n):
        num = [1]
        den = 1
        for hk in hook_lengths(parts):
            h2 = hk * hk
            den *= h2
            nxt = [0] * (len(num) + 1)
            for i, c in enumerate(num):
                nxt[i] += h2 * c
                nxt[i + 1] += c
            num = nxt
        for i, c in enumerate(num):
            acc[i] += Fraction(c, den)
    return Poly(acc)


def taylor_shift(p: Poly, a) -> Poly:
    """p(x + a), by repeated synthetic division; exact and in O(deg^2)."""
    a = Fraction(a)
    c = list(p.coeffs)
    d = len(c) - 1
    for i in range(d):
        for j in range(d - 1, i - 1, -1):
            c[j] += a * c[j + 1]
    return Poly(c)


def check_no_identity(n_max: int) -> CheckResult:
    """Hook-length polynomials against shifted divisor-sum rows.

    Q_n(x) must equal P_n(x + 1) for the (sigma, id) family, for every
    n <= n_max.  The left side comes from partitions and hooks only, the
    right side from the coefficient recursion plus a Taylor shift.
    """
    from .arith import sigma

    tri = build_triangle(sigma(), "id", n_max)
    checked = 0
    for n in range(n_max + 1):
        lhs = nekrasov_okounkov_poly(n)
        rhs = taylor_shift(tri.row_poly(n), 1)
        for m in range(max(lhs.degree, rhs.degree) + 1):
            checked += 1
            if lhs.coefficient(m) != rhs.coefficient(m):
                return CheckResult(
                    "no-identity", False, checked, (n, m),
                    f"hook side {lhs.coefficient(m)} vs shifted row {rhs.coefficient(m)}",
                )
    return CheckResult("no-identity", True, checked, note=f"n <= {n_max}")
