"""Hosoya polynomial triangles.

Entry ``(r, k)`` with ``0 <= k <= r`` is ``G_k * G_(r-k)``.  Points can be
addressed by rectangular coordinates ``(r, k)`` or by diagonal coordinates
``(m, n) = (k, r - k)``, under which the entry is simply ``G_m * G_n``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NotFibonacciType, OutOfRange
from .gfp import GfpSpec, Kind, classify, term
from .polyarith import IntPolynomial, eval_at, format_poly
from .report import VerificationReport


def to_diag(rect: tuple[int, int]) -> tuple[int, int]:
    r, k = rect
    if r < 0 or k < 0 or k > r:
        raise OutOfRange(f"({r}, {k}) is not a triangle position")
    return (k, r - k)


def to_rect(diag: tuple[int, int]) -> tuple[int, int]:
    m, n = diag
    if m < 0 or n < 0:
        raise OutOfRange(f"diagonal coordinates ({m}, {n}) must be nonnegative")
    return (m + n, m)


@dataclass(frozen=True)
class TrianglePoint:
    rect: tuple[int, int]
    diag: tuple[int, int]
    value: IntPolynomial


@dataclass(frozen=True)
class HosoyaTriangle:
    spec: GfpSpec
    R: int
    # flat storage, entry (r, k) at r*(r+1)//2 + k
    entries: tuple[IntPolynomial, ...]

    def entry(self, r: int, k: int) -> IntPolynomial:
        if not (0 <= k <= r <= self.R):
            raise OutOfRange(f"({r}, {k}) outside a triangle with rows 0..{self.R}")
        return self.entries[r * (r + 1) // 2 + k]

    def row(self, r: int) -> list[IntPolynomial]:
        if not 0 <= r <= self.R:
            raise OutOfRange(f"row {r} outside 0..{self.R}")
        start = r * (r + 1) // 2
        return list(self.entries[start : start + r + 1])

    def rows(self) -> list[list[IntPolynomial]]:
        return [self.row(r) for r in range(self.R + 1)]

    def point(self, r: int, k: int) -> TrianglePoint:
        return TrianglePoint((r, k), to_diag((r, k)), self.entry(r, k))

    def at_diag(self, m: int, n: int) -> IntPolynomial:
        return self.entry(*to_rect((m, n)))


def build(spec: GfpSpec, R: int) -> HosoyaTriangle:
    """Rows ``0..R`` via the product formula."""
    if R < 0:
        raise ValueError("row count must be nonnegative")
    G = spec.terms(R + 1)
    entries = []
    for r in range(R + 1):
        for k in range(r + 1):
            entries.append(G[k] * G[r - k])
    return HosoyaTriangle(spec, R, tuple(entries))


def verify_double_recursion(
    t: HosoyaTriangle,
    delta: Optional[IntPolynomial] = None,
    gamma: Optional[IntPolynomial] = None,
) -> VerificationReport:
    """Check both recursions of the triangle for every row ``r >= 2``.

    The vertical recursion ``H(r,k) = delta H(r-1,k) + gamma H(r-2,k)`` is
    checked where ``(r-2, k)`` lies in the triangle (``k <= r-2``) and the
    diagonal one ``H(r,k) = delta H(r-1,k-1) + gamma H(r-2,k-2)`` where
    ``k >= 2``.  ``delta``/``gamma`` default to the spec's ``d``/``g``.
    """
    if t.R < 2:
        raise ValueError("need at least three rows")
    delta = t.spec.d if delta is None else delta
    gamma = t.spec.g if gamma is None else gamma
    report = VerificationReport(
        "double-recursion",
        {"family": t.spec.family_name, "rows": t.R, "delta": str(delta), "gamma": str(gamma)},
    )
    fails = {"vertical": 0, "diagonal": 0}
    H = t.entry
    for r in range(2, t.R + 1):
        for k in range(r + 1):
            if k <= r - 2:
                rhs = delta * H(r - 1, k) + gamma * H(r - 2, k)
                if not report.check(H(r, k) == rhs, recursion="vertical", r=r, k=k, lhs=H(r, k), rhs=rhs):
                    fails["vertical"] += 1
            if k >= 2:
                rhs = delta * H(r - 1, k - 1) + gamma * H(r - 2, k - 2)
                if not report.check(H(r, k) == rhs, recursion="diagonal", r=r, k=k, lhs=H(r, k), rhs=rhs):
                    fails["diagonal"] += 1
    report.details["failures_by_recursion"] = fails
    return report


def slash_diagonal(t: HosoyaTriangle, n: int, length: int) -> list[TrianglePoint]:
    """``SD(G_n)``: the points ``G_n * G_i`` for ``i < length``."""
    Gn = term(t.spec, n)
    return [
        TrianglePoint(to_rect((n, i)), (n, i), Gn * term(t.spec, i)) for i in range(length)
    ]


def backslash_diagonal(t: HosoyaTriangle, m: int, length: int) -> list[TrianglePoint]:
    """``BD(G_m)``: the points ``G_i * G_m`` for ``i < length``."""
    Gm = term(t.spec, m)
    return [
        TrianglePoint(to_rect((i, m)), (i, m), term(t.spec, i) * Gm) for i in range(length)
    ]


def initial_triangle(t: HosoyaTriangle, n: int) -> list[list[IntPolynomial]]:
    """First ``n`` rows of nonzero entries of a Fibonacci-type triangle.

    Row ``j`` (from 1) is ``[G_k * G_(j+1-k) for k = 1..j]``.
    """
    if classify(t.spec).kind is not Kind.FIBONACCI:
        raise NotFibonacciType(f"{t.spec.family_name or 'spec'} has no zero edges")
    G = t.spec.terms(n + 2)
    return [[G[k] * G[r - k] for k in range(1, r)] for r in range(2, n + 2)]


# ---------------------------------------------------------------------------
# export


def rows_to_dict(
    family: Optional[str],
    rows: Sequence[Sequence[IntPolynomial]],
    eval_point: Optional[int] = None,
) -> dict:
    out = {"family": family, "rows": [[format_poly(p) for p in row] for row in rows]}
    if eval_point is not None:
        out["eval_point"] = eval_point
        out["values"] = [[eval_at(p, eval_point) for p in row] for row in rows]
    return out


def rows_to_csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([format_poly(p) if isinstance(p, IntPolynomial) else p for p in row])
    return buf.getvalue()
