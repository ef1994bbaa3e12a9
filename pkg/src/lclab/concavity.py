"""Log-concavity scans over rows and columns of coefficient triangles.

A nonnegative sequence a is log-concave when a_i^2 >= a_(i-1) a_(i+1) for
every interior i, with the sequence extended by zeros on both sides.
Horizontal checks apply this to triangle rows, vertical checks to columns
at fixed m, and windowed vertical checks restrict the centers to
1 <= n <= floor(C^m) while still comparing against the true neighbors
(the window bounds which centers are tested, it does not zero out the
column past its edge).

Column comparisons never leave integers: with row scale L_n the inequality
A(n, m)^2 >= A(n-1, m) A(n+1, m) is equivalent to

    L_(n-1) L_(n+1) B_n^2 >= L_n^2 B_(n-1) B_(n+1),

and the scale ratio collapses to (n+1) vs n when h = id and to 1 when
h = one.  The same cross-multiplied form powers the first-failure tables
computed from Stirling columns, where S(n, m)/n! is the column entry.

The conjecture-style scan over the divisor-sum coefficients b_(m, n) of
f(q)^m, with f the weight-normalized divisor-sum series, runs on the
(sigma, id) triangle via the m! column bridge; hz_equivalence_check pins
that bridge against the series route first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import ArithFn, sigma, tilde
from .series import eichler_integral
from .stirling import StirlingColumnTable
from .triangles import CheckResult, Triangle, build_triangle


@dataclass
class ConcavityReport:
    """Outcome of one scan.  failures lists (n, m) centers; equalities
    lists centers that hold with exact equality (still passes); boundary
    lists failures sitting exactly on a window edge."""

    mode: str
    g: str
    h: str
    n_range: tuple[int, int]
    m_range: tuple[int, int]
    failures: list[tuple[int, int]] = field(default_factory=list)
    equalities: list[tuple[int, int]] = field(default_factory=list)
    boundary: list[tuple[int, int]] = field(default_factory=list)
    clipped: bool = False
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "check": self.mode,
            "g": self.g,
            "h": self.h,
            "passed": self.passed,
            "n_range": list(self.n_range),
            "m_range": list(self.m_range),
            "failures": [list(t) for t in self.failures],
            "equalities": [list(t) for t in self.equalities],
            "boundary": [list(t) for t in self.boundary],
            "clipped": self.clipped,
            "params": {k: str(v) for k, v in self.params.items()},
        }


def is_logconcave(seq) -> int | None:
    """First index where a_i^2 < a_(i-1) a_(i+1), or None if log-concave.

    The sequence is zero-extended on both sides.  Negative entries make
    the notion meaningless here, so they raise.
    """
    vals = list(seq)
    for v in vals:
        if v < 0:
            raise ValueError("log-concavity check needs nonnegative entries")
    for i, v in enumerate(vals):
        left = vals[i - 1] if i > 0 else 0
        right = vals[i + 1] if i + 1 < len(vals) else 0
        if v * v < left * right:
            return i
    return None


def _triple_sign(tri: Triangle, n: int, m: int) -> int:
    """Sign of A(n,m)^2 - A(n-1,m) A(n+1,m), cross-multiplied on scaled
    entries (exact for Fraction-valued triangles too)."""
    b0 = tri.scaled(n, m)
    bl = tri.scaled(n - 1, m)
    br = tri.scaled(n + 1, m)
    if tri.h == "id":
        lhs = (n + 1) * b0 * b0
        rhs = n * bl * br
    else:
        lhs = b0 * b0
        rhs = bl * br
    return (lhs > rhs) - (lhs < rhs)


def horizontal_check(tri: Triangle, n_from: int = 1, n_to: int | None = None) -> ConcavityReport:
    """Scan rows n_from..n_to for log-concavity in m."""
    if tri.m_max is not None:
        raise ValueError("horizontal scans need full rows")
    n_to = tri.n_max if n_to is None else min(n_to, tri.n_max)
    report = ConcavityReport(
        "horizontal", tri.g.label, tri.h, (n_from, n_to), (1, n_to)
    )
    for n in range(max(n_from, 1), n_to + 1):
        row = tri.row_scaled(n)
        for i, v in enumerate(row):
            left = row[i - 1] if i > 0 else 0
            right = row[i + 1] if i + 1 < len(row) else 0
            lhs = v * v
            rhs = left * right
            if lhs < rhs:
                report.failures.append((n, i + 1))
            elif lhs == rhs and rhs != 0:
                report.equalities.append((n, i + 1))
    return report


def vertical_check(
    tri: Triangle,
    m_from: int = 1,
    m_to: int | None = None,
    n_to: int | None = None,
) -> ConcavityReport:
    """Scan columns m_from..m_to at centers n <= n_to.

    Centers are capped at tri.n_max - 1 (the right neighbor must exist);
    the report notes when that cap clipped the request.
    """
    built_cols = tri.n_max if tri.m_max is None else tri.m_max
    m_to = built_cols if m_to is None else m_to
    if m_to > built_cols:
        raise ValueError(f"column {m_to} was not built")
    n_cap = tri.n_max - 1
    requested = tri.n_max - 1 if n_to is None else n_to
    n_top = min(requested, n_cap)
    report = ConcavityReport(
        "vertical", tri.g.label, tri.h, (1, n_top), (m_from, m_to),
        clipped=requested > n_cap,
    )
    for m in range(m_from, m_to + 1):
        for n in range(1, n_top + 1):
            sign = _triple_sign(tri, n, m)
            if sign < 0:
                report.failures.append((n, m))
            elif sign == 0 and tri.scaled(n - 1, m) and tri.scaled(n + 1, m):
                report.equalities.append((n, m))
    return report


def first_vertical_failure(tri: Triangle, m: int, n_limit: int | None = None) -> int | None:
    """Smallest failing center of column m, or None within the range."""
    n_top = tri.n_max - 1 if n_limit is None else min(n_limit, tri.n_max - 1)
    for n in range(1, n_top + 1):
        if _triple_sign(tri, n, m) < 0:
            return n
    return None


def window_top(C: Fraction, m: int) -> int:
    """floor(C^m), computed exactly from the reduced fraction."""
    C = Fraction(C)
    if C <= 0:
        raise ValueError("the window base C must be positive")
    return C.numerator**m // C.denominator**m


def c_vertical_check(
    tri: Triangle,
    C,
    m_to: int,
    *,
    include_m1: bool = False,
) -> ConcavityReport:
    """Windowed vertical scan: column m is tested at centers 1..floor(C^m).

    Neighbors come from the full column, so a failure at the window edge
    is visible and lands in the boundary list.  m starts at 2 unless
    include_m1 is set.  Columns whose window sticks out past the built
    triangle are scanned as far as possible and flagged as clipped.
    """
    C = Fraction(C)
    m_from = 1 if include_m1 else 2
    built_cols = tri.n_max if tri.m_max is None else tri.m_max
    if m_to > built_cols:
        raise ValueError(f"column {m_to} was not built")
    report = ConcavityReport(
        "c-vertical", tri.g.label, tri.h,
        (1, window_top(C, m_to)), (m_from, m_to),
        params={"C": C, "include_m1": include_m1},
    )
    for m in range(m_from, m_to + 1):
        top = window_top(C, m)
        reach = min(top, tri.n_max - 1)
        if reach < top:
            report.clipped = True
        for n in range(1, reach + 1):
            sign = _triple_sign(tri, n, m)
            if sign < 0:
                report.failures.append((n, m))
                if n == top:
                    report.boundary.append((n, m))
            elif sign == 0 and tri.scaled(n - 1, m) and tri.scaled(n + 1, m):
                report.equalities.append((n, m))
    return report


def stirling_column_first_failure(
    m: int, n_limit: int, table: StirlingColumnTable | None = None
) -> int | None:
    """First center where the (one, id) column m fails, via Stirling numbers.

    The column entry is S(n, m)/n!, so failure at center n is exactly
    (n+1) S(n, m)^2 < n S(n-1, m) S(n+1, m).  Returns None when the whole
    range 1..n_limit passes.
    """
    if table is None:
        table = StirlingColumnTable(m, n_limit + 1)
    if table.n_max < n_limit + 1 or table.m_max < m:
        raise ValueError("table too small for the requested scan")
    for n in range(1, n_limit + 1):
        s0 = table.value(n, m)
        sl = table.value(n - 1, m)
        sr = table.value(n + 1, m)
        if (n + 1) * s0 * s0 < n * sl * sr:
            return n
    return None


def first_failure_table(m_max: int, n_limit: int = 1500) -> list[int | None]:
    """First failing center of the (one, id) columns m = 1..m_max.

    One shared column table feeds all the scans, so the cost is one
    O(n_limit * m_max) fill plus the comparisons.
    """
    table = StirlingColumnTable(m_max, n_limit + 1)
    return [
        stirling_column_first_failure(m, n_limit, table) for m in range(1, m_max + 1)
    ]


def stirling_column_failures(m: int, n_to: int) -> list[int]:
    """All failing centers n <= n_to of the (one, id) column m."""
    table = StirlingColumnTable(m, n_to + 1)
    out = []
    for n in range(1, n_to + 1):
        s0 = table.value(n, m)
        sl = table.value(n - 1, m)
        sr = table.value(n + 1, m)
        if (n + 1) * s0 * s0 < n * sl * sr:
            out.append(n)
    return out


def hong_zhang_coefficients(m: int, n_max: int) -> list[Fraction]:
    """b_(m, n) = [q^n] f(q)^m for the weight-normalized divisor-sum series
    f(q) = sum sigma(n)/n q^n, for n = 0..n_max."""
    if m < 0:
        raise ValueError("power must be >= 0")
    f = eichler_integral(sigma(), n_max)
    return list(f.pow_int(m).coeffs)


def hz_equivalence_check(m_max: int, n_max: int) -> CheckResult:
    """Tie the three routes to b_(m, n) together.

    Series powers, the geometric triangle of the normalized divisor sum,
    and m! times the exponential divisor-sum triangle must agree entry by
    entry, and b_(m, n) must vanish for 0 < n < m.
    """
    geo = build_triangle(tilde(sigma()), "one", n_max)
    exp = build_triangle(sigma(), "id", n_max)
    mfac = 1
    checked = 0
    for m in range(1, m_max + 1):
        mfac *= m
        b = hong_zhang_coefficients(m, n_max)
        for n in range(1, n_max + 1):
            checked += 1
            from_geo = geo.value(n, m) if m <= n else Fraction(0)
            from_exp = mfac * exp.value(n, m) if m <= n else Fraction(0)
            if not (b[n] == from_geo == from_exp):
                return CheckResult(
                    "hz-equivalence", False, checked, (n, m),
                    f"series {b[n]}, geometric {from_geo}, m!*exponential {from_exp}",
                )
    return CheckResult(
        "hz-equivalence", True, checked, note=f"m <= {m_max}, n <= {n_max}"
    )


MAX_WINDOW = 4096


def hong_zhang_scan(C, m_max: int, *, include_m1: bool = False) -> ConcavityReport:
    """Windowed vertical scan of the divisor-sum coefficients b_(m, n).

    Column m is tested at centers n <= floor(C^m).  b_(m, n) is m! times
    the (sigma, id) triangle column, and the m! cancels from both sides of
    each comparison, so the scan runs on a column-limited integer build.
    The window for the last column fixes the build size; anything past
    MAX_WINDOW is refused because the quadratic build cost would run away.
    """
    C = Fraction(C)
    top = window_top(C, m_max)
    if top > MAX_WINDOW:
        raise ValueError(
            f"window floor(C^m_max) = {top} exceeds {MAX_WINDOW}; "
            "scan fewer columns or a smaller C"
        )
    tri = build_triangle(sigma(), "id", top + 1, m_max=max(m_max, 1))
    report = c_vertical_check(tri, C, m_max, include_m1=include_m1)
    report.mode = "hong-zhang"
    report.params["coefficients"] = "divisor-sum series powers"
    return report
