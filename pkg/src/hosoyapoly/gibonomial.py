"""Gibonomial coefficients built from Fibonacci polynomials.

``[n, r] = f*(n) / (f*(n-r) f*(r))`` where ``f*(k) = F_k F_(k-1) ... F_1``.
Rows are filled with ``[n, r] = [n-1, r-1] * F_n / F_r``, which keeps the
intermediates at the size of the result instead of ``f*(n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gfp import builtin_family, term
from .polyarith import ONE, IntPolynomial, exact_div, format_poly, gcd, gcd_many
from .report import VerificationReport

_FIB = builtin_family("fibonacci")


def fib(k: int) -> IntPolynomial:
    return term(_FIB, k)


def fstar(k: int) -> IntPolynomial:
    """``F_1 F_2 ... F_k``; ``fstar(0) == 1``."""
    if k < 0:
        raise IndexError("negative index")
    out = ONE
    for i in range(1, k + 1):
        out = out * fib(i)
    return out


@dataclass(frozen=True)
class GibonomialCoeff:
    n: int
    r: int
    value: IntPolynomial


@lru_cache(maxsize=None)
def _gibonomial(n: int, r: int) -> IntPolynomial:
    if r == 0 or r == n:
        return ONE
    if r > n - r:
        return _gibonomial(n, n - r)
    return exact_div(_gibonomial(n - 1, r - 1) * fib(n), fib(r))


def gibonomial(n: int, r: int) -> GibonomialCoeff:
    if not 0 <= r <= n:
        raise IndexError(f"gibonomial [{n}, {r}] needs 0 <= r <= n")
    return GibonomialCoeff(n, r, _gibonomial(n, r))


def gibonomial_direct(n: int, r: int) -> IntPolynomial:
    """The quotient definition, computed from full ``f*`` products."""
    if not 0 <= r <= n:
        raise IndexError(f"gibonomial [{n}, {r}] needs 0 <= r <= n")
    return exact_div(fstar(n), fstar(n - r) * fstar(r))


def gibonomial_triangle(N: int) -> list[list[IntPolynomial]]:
    if N < 0:
        raise ValueError("row count must be nonnegative")
    return [[_gibonomial(n, r) for r in range(n + 1)] for n in range(N + 1)]


def gibonomial_star(n: int, r: int) -> dict[str, IntPolynomial]:
    if not (1 <= r <= n - 1):
        raise IndexError(f"star at [{n}, {r}] needs 1 <= r <= n-1")
    G = _gibonomial
    return {
        "a1": G(n - 1, r),
        "a2": G(n, r - 1),
        "a3": G(n + 1, r + 1),
        "b1": G(n - 1, r - 1),
        "b2": G(n, r + 1),
        "b3": G(n + 1, r),
        "c": G(n, r),
    }


def verify_gibonomial_star(n: int, r: int) -> VerificationReport:
    """Product and gcd equality of the two triangles around ``[n, r]``.

    Also records (without asserting) whether gcd(a1,b3) gcd(b1,a3) equals
    the centre ``[n, r]``; for gibonomials it is not expected to.
    """
    s = gibonomial_star(n, r)
    report = VerificationReport("gibonomial-star", {"n": n, "r": r})
    prod_a = s["a1"] * s["a2"] * s["a3"]
    prod_b = s["b1"] * s["b2"] * s["b3"]
    report.check(prod_a == prod_b, claim="product", n=n, r=r)
    ga, gb = gcd_many([s["a1"], s["a2"], s["a3"]]), gcd_many([s["b1"], s["b2"], s["b3"]])
    report.check(ga == gb, claim="gcd", n=n, r=r, gcd_a=ga, gcd_b=gb)
    centre = gcd(s["a1"], s["b3"]) * gcd(s["b1"], s["a3"])
    report.details = {
        "product_equal": prod_a == prod_b,
        "gcd_equal": ga == gb,
        "gcd_a": format_poly(ga),
        "gcd_b": format_poly(gb),
        "centre_product": format_poly(centre),
        "centre": format_poly(s["c"]),
        "centre_product_equals_c": centre == s["c"],
    }
    return report


def verify_gibonomial_grid(n_max: int) -> VerificationReport:
    report = VerificationReport("gibonomial-star", {"n_max": n_max})
    centre_hits = 0
    for n in range(2, n_max + 1):
        for r in range(1, n):
            single = verify_gibonomial_star(n, r)
            report.checked += single.checked
            for w in single.witnesses:
                report.add_witness(**w)
            centre_hits += single.details["centre_product_equals_c"]
    report.details["centre_product_equals_c"] = centre_hits
    return report
