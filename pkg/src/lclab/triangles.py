"""Coefficient triangles of recursively defined polynomial families.

For an arithmetic function g (g(1) = 1) and a weight h that is either the
constant 1 or the identity, the family P_0 = 1,

    P_n(x) = (x / h(n)) * sum over k = 1..n of g(k) P_(n-k)(x),

has P_n(x) = sum over m = 1..n of A(n, m) x^m.  The triangle of the A(n, m)
is what everything else in this package consumes.

Rows are stored integer-scaled: the entry kept for (n, m) is L_n * A(n, m)
with L_n = product of h(k) for k <= n (so n! when h = id, 1 when h = one).
In the scaled form the recursion is division-free,

    B(n, m) = sum over k of g(k) * w(n, k) * B(n-k, m-1),
    w(n, k) = (n-1)! / (n-k)!   (falling factorial; all ones when h = one),

which keeps every entry an integer whenever g is integer-valued and makes
the big builds pure bigint arithmetic.  Exact rational values are recovered
on demand by dividing by L_n.

Two independent generating-function routes reproduce the same rows:
exp(x E(T)) when h = id and 1 / (1 - x G(T)) when h = one, with E and G the
series of g(n)/n and g(n).  A third route goes through the Euler product
prod (1 - T^n)^(-x f(n)/n) with f = mu * g.  The crosscheck functions here
compare those routes against the recursion and never share code with it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import ArithFn, moebius_convolve, tilde, _exactify
from .series import Series, eichler_integral, euler_product
from .stirling import stirling_first

_H_KINDS = ("one", "id")


class Poly:
    """Dense polynomial with exact coefficients, ascending powers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs or [Fraction(0)]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, m: int) -> Fraction:
        if m < 0:
            raise IndexError("negative power")
        return self.coeffs[m] if m <= self.degree else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


@dataclass
class CheckResult:
    """Outcome of a dual-route comparison."""

    name: str
    passed: bool
    checked: int = 0
    first_mismatch: tuple | None = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "first_mismatch": list(self.first_mismatch) if self.first_mismatch else None,
            "note": self.note,
        }


class Triangle:
    """Integer-scaled coefficient triangle of one family (g, h).

    Row n holds the scaled entries for m = 1..n (or m = 1..m_max when the
    build was column-limited); row 0 is the single seed entry A(0, 0) = 1.
    Use value()/row_values() for the exact rational coefficients and
    scaled()/row_scaled() for the raw stored entries.
    """

    def __init__(self, g: ArithFn, h: str, rows: list[list], m_max: int | None = None):
        if h not in _H_KINDS:
            raise ValueError(f"h must be one of {_H_KINDS}, got {h!r}")
        self.g = g
        self.h = h
        self.m_max = m_max
        self._rows = rows
        self.n_max = len(rows) - 1
        if h == "id":
            scales = [1] * (self.n_max + 1)
            for n in range(1, self.n_max + 1):
                scales[n] = scales[n - 1] * n
            self._scales = scales
        else:
            self._scales = None

    def scale(self, n: int) -> int:
        """L_n, the common denominator of row n."""
        return self._scales[n] if self._scales is not None else 1

    def _m_top(self, n: int) -> int:
        return n if self.m_max is None else min(n, self.m_max)

    def scaled(self, n: int, m: int):
        """L_n * A(n, m); zero outside the triangle.

        Raises if (n, m) falls in a column the build dropped, since silently
        returning zero there would corrupt scans.
        """
        if n < 0 or n > self.n_max:
            raise IndexError(f"row {n} outside triangle (n_max = {self.n_max})")
        if n == 0:
            return 1 if m == 0 else 0
        if m < 1 or m > n:
            return 0
        if self.m_max is not None and m > self.m_max:
            raise IndexError(f"column {m} was not built (m_max = {self.m_max})")
        return self._rows[n][m - 1]

    def value(self, n: int, m: int) -> Fraction:
        """The exact coefficient A(n, m)."""
        return Fraction(self.scaled(n, m)) / self.scale(n)

    def row_scaled(self, n: int) -> list:
        if n < 0 or n > self.n_max:
            raise IndexError(f"row {n} outside triangle (n_max = {self.n_max})")
        return list(self._rows[n])

    def row_values(self, n: int) -> list[Fraction]:
        ln = self.scale(n)
        return [Fraction(b) / ln for b in self.row_scaled(n)]

    def row_poly(self, n: int) -> Poly:
        """P_n as a polynomial (needs the full row, so no column limit)."""
        if n == 0:
            return Poly([1])
        if self.m_max is not None and self.m_max < n:
            raise ValueError(f"row {n} is column-limited (m_max = {self.m_max})")
        return Poly([Fraction(0)] + self.row_values(n))

    def __repr__(self):
        lim = f", m_max={self.m_max}" if self.m_max is not None else ""
        return f"Triangle(g={self.g.label}, h={self.h}, n_max={self.n_max}{lim})"


def build_triangle(g: ArithFn, h: str, n_max: int, m_max: int | None = None) -> Triangle:
    """Run the scaled recursion for the family (g, h) up to row n_max.

    Args:
        g: arithmetic function with g(1) = 1.
        h: "one" or "id".
        n_max: last row to build.
        m_max: keep only columns m <= m_max (scans along a few columns do
            not need whole rows).  None builds full rows.

    The inner loop is the hot path of the whole package; it works on the
    scaled entries only, so for integer g it never leaves bigint land.
    """
    if h not in _H_KINDS:
        raise ValueError(f"h must be one of {_H_KINDS}, got {h!r}")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if m_max is not None and m_max < 1:
        raise ValueError("m_max must be >= 1 when given")
    gvals = g.values(n_max) if n_max >= 1 else [0]
    rows: list[list] = [[1]]
    weighted = h == "id"
    for n in range(1, n_max + 1):
        # w[k] = (n-1)!/(n-k)!, built incrementally; all ones for h = one
        gw = [0] * (n + 1)
        w = 1
        for k in range(1, n + 1):
            gw[k] = gvals[k] * w
            if weighted:
                w *= n - k
        m_top = n if m_max is None else min(n, m_max)
        row = [0] * m_top
        # m = 1 keeps only the k = n term (it multiplies the n = 0 seed)
        row[0] = gw[n]
        for m in range(2, m_top + 1):
            acc = 0
            for k in range(1, n - m + 2):
                prev = rows[n - k][m - 2]
                if prev:
                    acc += gw[k] * prev
            row[m - 1] = acc
        rows.append(row)
    return Triangle(g, h, rows, m_max)


def convert(tri: Triangle) -> Triangle:
    """Map an exponential-family triangle to its geometric twin.

    A(n, m) for (g, id) turns into m! A(n, m) for (g(n)/n, one).  The
    result is computed from the input rows, not rebuilt, so comparing it
    against an independently built triangle is a real consistency check.
    """
    if tri.h != "id":
        raise ValueError("conversion starts from an h = id family")
    if tri.m_max is not None:
        raise ValueError("conversion needs full rows")
    new_rows: list[list] = [[1]]
    mfac = [1]
    for m in range(1, tri.n_max + 1):
        mfac.append(mfac[-1] * m)
    for n in range(1, tri.n_max + 1):
        ln = tri.scale(n)
        new_rows.append(
            [_exactify(Fraction(mfac[m] * tri._rows[n][m - 1], ln)) for m in range(1, n + 1)]
        )
    return Triangle(tilde(tri.g), "one", new_rows)


def check_conversion(g: ArithFn, n_max: int) -> CheckResult:
    """Compare convert(build(g, id)) against an independent build of
    (g(n)/n, one), entry by entry."""
    exp_tri = build_triangle(g, "id", n_max)
    geo_tri = build_triangle(tilde(g), "one", n_max)
    mapped = convert(exp_tri)
    checked = 0
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            checked += 1
            if mapped.value(n, m) != geo_tri.value(n, m):
                return CheckResult(
                    "conversion", False, checked, (n, m),
                    f"g={g.label}: mapped {mapped.value(n, m)} vs built {geo_tri.value(n, m)}",
                )
    return CheckResult("conversion", True, checked, note=f"g={g.label}, n <= {n_max}")


DEFAULT_EVAL_POINTS = (Fraction(1), Fraction(2), Fraction(3), Fraction(-1), Fraction(1, 2))


def genfun_crosscheck(g: ArithFn, h: str, n_max: int, xs=DEFAULT_EVAL_POINTS) -> CheckResult:
    """Evaluate rows at each x and compare with the generating series.

    h = id uses exp(x E(T)); h = one uses 1 / (1 - x G(T)).  Both sides are
    computed independently of the triangle recursion.
    """
    tri = build_triangle(g, h, n_max)
    polys = [tri.row_poly(n) for n in range(n_max + 1)]
    checked = 0
    for x in xs:
        x = Fraction(x)
        if h == "id":
            s = (x * eichler_integral(g, n_max)).exp()
        else:
            s = (Series.one(n_max) - x * Series.from_arith(g, n_max)).inverse()
        for n in range(n_max + 1):
            checked += 1
            if s.coefficient(n) != polys[n](x):
                return CheckResult(
                    "genfun", False, checked, (n, x),
                    f"g={g.label} h={h}: series {s.coefficient(n)} vs row {polys[n](x)}",
                )
    return CheckResult(
        "genfun", True, checked,
        note=f"g={g.label} h={h}, n <= {n_max}, {len(tuple(xs))} eval points",
    )


def euler_product_crosscheck(g: ArithFn, n_max: int, x) -> CheckResult:
    """Compare the h = id family against prod (1 - T^n)^(-x f(n)/n), f = mu * g."""
    x = Fraction(x)
    f = moebius_convolve(g, n_max) if n_max >= 1 else None
    exps = [Fraction(0)] * (n_max + 1)
    for n in range(1, n_max + 1):
        exps[n] = -x * Fraction(f(n)) / n
    s = euler_product(exps, n_max)
    tri = build_triangle(g, "id", n_max)
    checked = 0
    for n in range(n_max + 1):
        checked += 1
        if s.coefficient(n) != tri.row_poly(n)(x):
            return CheckResult(
                "euler-product", False, checked, (n,),
                f"g={g.label} x={x}: product {s.coefficient(n)} vs row {tri.row_poly(n)(x)}",
            )
    return CheckResult("euler-product", True, checked, note=f"g={g.label}, x={x}, n <= {n_max}")


def closed_form_oracle(g_label: str, h: str, n: int, m: int) -> Fraction:
    """Known closed form of A(n, m) for the six classic families.

    Keyed by (g label, h): one/one and id/one are binomial, id/id and
    square/id are binomial over m!, one/id is Stirling over n!, and
    tilde(one)/one is m! Stirling over n!.  Raises on out-of-range (n, m)
    or an unknown family.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got n={n} m={m}")
    key = (g_label, h)
    if key == ("one", "one"):
        return Fraction(math.comb(n - 1, m - 1))
    if key == ("id", "id"):
        return Fraction(math.comb(n - 1, m - 1), math.factorial(m))
    if key == ("square", "id"):
        return Fraction(math.comb(n + m - 1, 2 * m - 1), math.factorial(m))
    if key == ("id", "one"):
        return Fraction(math.comb(n + m - 1, 2 * m - 1))
    if key == ("one", "id"):
        return Fraction(stirling_first(n, m), math.factorial(n))
    if key == ("tilde(one)", "one"):
        return Fraction(math.factorial(m) * stirling_first(n, m), math.factorial(n))
    raise ValueError(f"no closed form on record for {key}")


CLOSED_FORM_FAMILIES = (
    ("one", "one"),
    ("id", "id"),
    ("square", "id"),
    ("id", "one"),
    ("one", "id"),
    ("tilde(one)", "one"),
)


def closed_forms_check(n_max: int) -> CheckResult:
    """Build all six classic families and compare every entry with its
    closed form."""
    from . import arith

    makers = {
        "one": arith.one,
        "id": arith.identity,
        "square": arith.square,
        "tilde(one)": lambda: tilde(arith.one()),
    }
    checked = 0
    for g_label, h in CLOSED_FORM_FAMILIES:
        tri = build_triangle(makers[g_label](), h, n_max)
        for n in range(1, n_max + 1):
            for m in range(1, n + 1):
                checked += 1
                if tri.value(n, m) != closed_form_oracle(g_label, h, n, m):
                    return CheckResult(
                        "closed-forms", False, checked, (n, m),
                        f"family ({g_label}, {h})",
                    )
    return CheckResult(
        "closed-forms", True, checked,
        note=f"6 families, n <= {n_max}",
    )
