"""Generalized Fibonacci polynomial sequences.

A sequence is fixed by four integer polynomials: ``G0 = p0`` (a constant),
``G1 = p1`` and ``Gn = d*G(n-1) + g*G(n-2)``, with ``gcd(d, g) = 1``.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from typing import Optional

from .errors import NotBinetEligible, NotDivisible, NotTheoremGrade, UnknownFamily
from .polyarith import (
    ONE,
    ZERO,
    IntPolynomial,
    as_poly,
    canonical,
    exact_div,
    format_poly,
    gcd,
    parse_poly,
)
from .report import VerificationReport


class Kind(str, enum.Enum):
    LUCAS = "LucasType"
    FIBONACCI = "FibonacciType"
    OTHER = "Other"


@dataclass(frozen=True)
class GfpSpec:
    p0: IntPolynomial
    p1: IntPolynomial
    d: IntPolynomial
    g: IntPolynomial
    family_name: Optional[str] = None
    _memo: list = field(default_factory=list, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(
        default_factory=threading.Lock, init=False, repr=False, compare=False
    )

    def __post_init__(self):
        for name in ("p0", "p1", "d", "g"):
            object.__setattr__(self, name, as_poly(getattr(self, name)))
        if self.p0.degree > 0:
            raise ValueError(f"p0 must be a constant, got {self.p0}")
        for name in ("p1", "d", "g"):
            if getattr(self, name).is_zero():
                raise ValueError(f"{name} must be nonzero")
        if gcd(self.d, self.g) != ONE:
            raise ValueError(f"gcd(d, g) must be 1, got gcd({self.d}, {self.g})")
        self._memo.extend((self.p0, self.p1))

    @property
    def theorem_grade(self) -> bool:
        """True when the coprimality conditions on p0 hold.

        The conditions gcd(p0, p1) = gcd(p0, d) = gcd(p0, g) = 1 only
        constrain a nonzero p0; with p0 = 0 they are not imposed.
        """
        if self.p0.is_zero():
            return True
        return all(gcd(self.p0, q) == ONE for q in (self.p1, self.d, self.g))

    @property
    def kind(self) -> Kind:
        return classify(self).kind

    def term(self, n: int) -> IntPolynomial:
        return term(self, n)

    def terms(self, count: int) -> list[IntPolynomial]:
        if count > 0:
            term(self, count - 1)
        return list(self._memo[:count])

    def with_params(self, **changes) -> "GfpSpec":
        """Copy with some of p0, p1, d, g replaced (fresh memo)."""
        args = dict(p0=self.p0, p1=self.p1, d=self.d, g=self.g, family_name=self.family_name)
        args.update(changes)
        return GfpSpec(**args)

    def to_dict(self) -> dict:
        cls = classify(self)
        return {
            "name": self.family_name,
            "p0": format_poly(self.p0),
            "p1": format_poly(self.p1),
            "d": format_poly(self.d),
            "g": format_poly(self.g),
            "kind": cls.kind.value,
            "theorem_grade": self.theorem_grade,
        }


def term(spec: GfpSpec, n: int) -> IntPolynomial:
    """``G_n`` of the sequence, extending the per-spec memo as needed."""
    if n < 0:
        raise IndexError("negative index")
    memo = spec._memo
    if n < len(memo):
        return memo[n]
    with spec._lock:
        d, g = spec.d, spec.g
        while len(memo) <= n:
            memo.append(d * memo[-1] + g * memo[-2])
    return memo[n]


@dataclass(frozen=True)
class GfpClassification:
    kind: Kind
    # (2, p0) encodes alpha = 2/p0 for Lucas type
    alpha: Optional[tuple[int, int]]
    rho: IntPolynomial


def classify(spec: GfpSpec) -> GfpClassification:
    p0, p1, d = spec.p0, spec.p1, spec.d
    if not p0.is_zero() and 2 * p1 == p0 * d:
        kind = Kind.LUCAS
        alpha = (2, p0.lc)
    elif p0.is_zero() and p1 == ONE:
        kind, alpha = Kind.FIBONACCI, None
    else:
        kind, alpha = Kind.OTHER, None
    return GfpClassification(kind, alpha, gcd(d, p1))


# ---------------------------------------------------------------------------
# family catalog

# name: (p0, p1, d, g)
_CATALOG = {
    "fibonacci": ("0", "1", "x", "1"),
    "lucas": ("2", "x", "x", "1"),
    "pell": ("0", "1", "2*x", "1"),
    "pell_lucas_prime": ("1", "x", "2*x", "1"),
    "fermat": ("0", "1", "3*x", "-2"),
    "fermat_lucas": ("2", "3*x", "3*x", "-2"),
    "chebyshev1": ("1", "x", "2*x", "-1"),
    "chebyshev2": ("0", "1", "2*x", "-1"),
    "jacobsthal": ("0", "1", "1", "2*x"),
    "jacobsthal_lucas": ("2", "1", "1", "2*x"),
    "morgan_voyce_B": ("0", "1", "x+2", "-1"),
    "morgan_voyce_C": ("2", "x+2", "x+2", "-1"),
    "vieta": ("0", "1", "x", "-1"),
    "vieta_lucas": ("2", "x", "x", "-1"),
}

#: Plain Pell-Lucas (gcd(p0, p1) = 2); for triangle generation only.
_EXTRA = {
    "pell_lucas_raw": ("2", "2*x", "2*x", "1"),
}

#: The fourteen catalog families, in catalog order.
BUILTIN_FAMILIES: tuple[str, ...] = tuple(_CATALOG)

_LOOKUP = {name.lower(): name for name in (*_CATALOG, *_EXTRA)}


def family_names(include_extra: bool = False) -> list[str]:
    names = list(_CATALOG)
    if include_extra:
        names += list(_EXTRA)
    return names


def builtin_family(name: str) -> GfpSpec:
    """A fresh spec (with its own memo) for a catalog family."""
    key = _LOOKUP.get(name.lower()) if isinstance(name, str) else None
    if key is None:
        raise UnknownFamily(f"unknown family {name!r}")
    params = _CATALOG.get(key) or _EXTRA[key]
    p0, p1, d, g = (parse_poly(s) for s in params)
    return GfpSpec(p0, p1, d, g, family_name=key)


# ---------------------------------------------------------------------------
# structural checks


def power_sums(spec: GfpSpec, count: int) -> list[IntPolynomial]:
    """``a^n + b^n`` for the roots of z^2 - d z - g, n < count."""
    seq = [IntPolynomial.const(2), spec.d]
    while len(seq) < count:
        seq.append(spec.d * seq[-1] + spec.g * seq[-2])
    return seq[:count]


def divided_differences(spec: GfpSpec, count: int) -> list[IntPolynomial]:
    """``(a^n - b^n)/(a - b)`` for the roots of z^2 - d z - g, n < count."""
    seq = [ZERO, ONE]
    while len(seq) < count:
        seq.append(spec.d * seq[-1] + spec.g * seq[-2])
    return seq[:count]


def verify_binet_equivalence(spec: GfpSpec, N: int) -> VerificationReport:
    cls = classify(spec)
    report = VerificationReport("binet", {"family": spec.family_name, "N": N})
    if cls.kind is Kind.LUCAS:
        s = power_sums(spec, N + 1)
        for n in range(N + 1):
            lhs, rhs = 2 * term(spec, n), spec.p0 * s[n]
            report.check(lhs == rhs, n=n, lhs=lhs, rhs=rhs)
    elif cls.kind is Kind.FIBONACCI:
        r = divided_differences(spec, N + 1)
        for n in range(N + 1):
            report.check(term(spec, n) == r[n], n=n, lhs=term(spec, n), rhs=r[n])
    else:
        raise NotBinetEligible(f"{spec.family_name or 'spec'} is neither Lucas nor Fibonacci type")
    report.details["kind"] = cls.kind.value
    return report


def reduce_mod_d_squared(spec: GfpSpec, m: int) -> IntPolynomial:
    """Closed-form representative of ``G_m`` modulo ``d^2``."""
    if m < 0:
        raise IndexError("negative index")
    G0, G1, d, g = spec.p0, spec.p1, spec.d, spec.g
    k, odd = divmod(m, 2)
    if odd:
        return g ** k * (k * d * G0 + G1)
    if k == 0:
        return G0
    return g ** (k - 1) * (k * d * G1 + g * G0)


def verify_mod_d_squared(spec: GfpSpec, M: int) -> VerificationReport:
    report = VerificationReport("mod-d2", {"family": spec.family_name, "m_max": M})
    d2 = spec.d * spec.d
    for m in range(M + 1):
        diff = term(spec, m) - reduce_mod_d_squared(spec, m)
        try:
            exact_div(diff, d2)
            ok = True
        except NotDivisible:
            ok = False
        report.check(ok, m=m, difference=diff)
    return report


def verify_gcd_distance(spec: GfpSpec, N: int) -> VerificationReport:
    """All five gcd-distance statements for positive indices up to ``N``."""
    if not spec.theorem_grade:
        raise NotTheoremGrade(f"{spec.family_name or 'spec'} is not theorem-grade")
    kind = classify(spec).kind
    if kind is Kind.OTHER:
        raise NotTheoremGrade(f"{spec.family_name or 'spec'} is neither Lucas nor Fibonacci type")
    report = VerificationReport("gcd-distance", {"family": spec.family_name, "N": N})
    G = lambda i: term(spec, i)  # noqa: E731
    d, g = spec.d, spec.g
    G1 = canonical(G(1))
    for n in range(1, (N - 1) // 2 + 1):
        got = gcd(d, G(2 * n + 1))
        report.check(got == G1, part=1, n=n, got=got, expected=G1)
    expected2 = ONE if kind is Kind.LUCAS else canonical(d)
    for n in range(1, N // 2 + 1):
        got = gcd(d, G(2 * n))
        report.check(got == expected2, part=2, n=n, got=got, expected=expected2)
    for n in range(1, N + 1):
        got = gcd(g, G(n))
        report.check(got == ONE, part=3, n=n, got=got, expected=ONE)
    part = 4 if kind is Kind.LUCAS else 5
    special = G1 if kind is Kind.LUCAS else canonical(G(2))
    for n in range(2, N + 1):
        for m in range(max(1, n - 2), n):
            if kind is Kind.LUCAS:
                hit = m % 2 == 1 and n % 2 == 1
            else:
                hit = m % 2 == 0 and n % 2 == 0
            expected = special if hit else ONE
            got = gcd(G(m), G(n))
            report.check(got == expected, part=part, m=m, n=n, got=got, expected=expected)
    report.details["kind"] = kind.value
    return report
