"""Star of David configurations in Hosoya polynomial triangles.

A star is anchored at diagonal coordinates ``(m, n)``.  In orientation A the
anchor is ``a2`` and the interior point is ``G_(m+1) G_(n-1)``; in
orientation B the anchor is ``b2`` and the interior point is
``G_(m-1) G_(n-1)``.

Where the two triangle gcds are proportional rather than equal, the factor is
a ratio of small integer gcds.  It is carried as a pair ``(u, v)`` and checked
cross-multiplied, ``u * gcd_a == v * gcd_b``, so no division is ever done.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .errors import (
    DegenerateCenter,
    FamilyNotCovered,
    NotTheoremGrade,
    NotTyped,
    OutOfBounds,
    UnclassifiedPart4,
)
from .gfp import GfpSpec, Kind, classify, term
from .polyarith import IntPolynomial, canonical, content, format_poly, gcd, gcd_many
from .report import VerificationReport

DEFAULT_GRID = 16


class Orientation(str, enum.Enum):
    A = "A"
    B = "B"

    @classmethod
    def parse(cls, value) -> "Orientation":
        if isinstance(value, Orientation):
            return value
        return cls(str(value).upper())


class RatioClass(str, enum.Enum):
    EQUAL = "Equal"
    SCALED_BY_BETA = "ScaledByBeta"
    SCALED_BY_BETA_PRIME = "ScaledByBetaPrime"


# (m offset, n offset) of a1, a2, a3, b1, b2, b3, c relative to the anchor
_OFFSETS = {
    Orientation.A: ((1, -2), (0, 0), (2, -1), (0, -1), (2, -2), (1, 0), (1, -1)),
    Orientation.B: ((0, -1), (-2, -2), (-1, 0), (-1, -2), (0, 0), (-2, -1), (-1, -1)),
}


@dataclass(frozen=True)
class StarConfig:
    spec: GfpSpec
    orientation: Orientation
    anchor: tuple[int, int]
    a1: IntPolynomial
    a2: IntPolynomial
    a3: IntPolynomial
    b1: IntPolynomial
    b2: IntPolynomial
    b3: IntPolynomial
    c: IntPolynomial

    @property
    def a(self) -> tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
        return (self.a1, self.a2, self.a3)

    @property
    def b(self) -> tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
        return (self.b1, self.b2, self.b3)

    def coordinates(self) -> dict[str, tuple[int, int]]:
        m, n = self.anchor
        names = ("a1", "a2", "a3", "b1", "b2", "b3", "c")
        return {k: (m + dm, n + dn) for k, (dm, dn) in zip(names, _OFFSETS[self.orientation])}


def star_in_bounds(orientation, m: int, n: int) -> bool:
    orientation = Orientation.parse(orientation)
    if orientation is Orientation.A:
        return m >= 0 and n >= 2
    return m >= 2 and n >= 2 and (m, n) != (2, 2)


def make_star(spec: GfpSpec, orientation, m: int, n: int) -> StarConfig:
    orientation = Orientation.parse(orientation)
    low_m = 0 if orientation is Orientation.A else 2
    if m < low_m or n < 2:
        raise OutOfBounds(
            f"orientation {orientation.value} needs m >= {low_m}, n >= 2; got ({m}, {n})"
        )
    values = []
    for dm, dn in _OFFSETS[orientation]:
        values.append(term(spec, m + dm) * term(spec, n + dn))
    # a2 may not sit at the apex G_0 * G_0
    a2_m, a2_n = m + _OFFSETS[orientation][1][0], n + _OFFSETS[orientation][1][1]
    if (a2_m, a2_n) == (0, 0):
        raise DegenerateCenter(f"a2 is G_0*G_0 for anchor ({m}, {n})")
    return StarConfig(spec, orientation, (m, n), *values)


def verify_product(star: StarConfig) -> bool:
    return star.a1 * star.a2 * star.a3 == star.b1 * star.b2 * star.b3


@dataclass
class StarReport:
    family: Optional[str]
    orientation: Orientation
    anchor: tuple[int, int]
    product_equal: bool
    gcd_a: Optional[IntPolynomial] = None
    gcd_b: Optional[IntPolynomial] = None
    ratio_class: Optional[RatioClass] = None
    beta: tuple[int, int] = (1, 1)
    gcd_claim_holds: Optional[bool] = None
    part4_class: Optional[str] = None
    part4_t: Optional[int] = None
    part4_exponent: Optional[int] = None

    @property
    def gcds_equal(self) -> bool:
        return self.gcd_a == self.gcd_b

    def to_dict(self) -> dict:
        out = {
            "family": self.family,
            "orientation": self.orientation.value,
            "anchor": list(self.anchor),
            "product_equal": self.product_equal,
            "gcd_a": None if self.gcd_a is None else format_poly(self.gcd_a),
            "gcd_b": None if self.gcd_b is None else format_poly(self.gcd_b),
            "ratio_class": None if self.ratio_class is None else self.ratio_class.value,
            "beta": list(self.beta),
            "gcd_claim_holds": self.gcd_claim_holds,
        }
        if self.part4_class is not None:
            out["part4"] = {"class": self.part4_class, "t": self.part4_t}
        return out


def _require_theorem_spec(spec: GfpSpec) -> Kind:
    kind = classify(spec).kind
    if kind is Kind.OTHER:
        raise NotTyped(f"{spec.family_name or 'spec'} is neither Lucas nor Fibonacci type")
    if not spec.theorem_grade:
        raise NotTheoremGrade(f"{spec.family_name or 'spec'} is not theorem-grade")
    return kind


def beta_pair(spec: GfpSpec, orientation, m: int, n: int) -> tuple[RatioClass, tuple[int, int]]:
    """Ratio class and cross-multiplication pair ``(u, v)`` for an anchor.

    The predicted relation is ``u * gcd_a == v * gcd_b``.  Polynomial
    arguments of the integer gcds are replaced by their contents.
    """
    orientation = Orientation.parse(orientation)
    kind = classify(spec).kind
    if kind is Kind.FIBONACCI and m % 2 == 0 and n % 2 == 0:
        c = content(spec.d)
        k1, k2 = n // 2, m // 2
        if orientation is Orientation.A:
            u, v = math.gcd(c, k1, k2), math.gcd(c, k1 - 1, k2 + 1)
        else:
            u, v = math.gcd(c, k1 - 1, k2 - 1), math.gcd(c, k1, k2)
        return RatioClass.SCALED_BY_BETA, (u, v)
    if kind is Kind.LUCAS and m % 2 == 1 and n % 2 == 1:
        c1 = content(canonical(spec.p1))
        if orientation is Orientation.A:
            u, v = math.gcd(c1, n, m), math.gcd(c1, n - 2, m + 2)
        else:
            u, v = math.gcd(c1, n - 2, m - 2), math.gcd(c1, n, m)
        return RatioClass.SCALED_BY_BETA_PRIME, (u, v)
    return RatioClass.EQUAL, (1, 1)


def star_gcds(star: StarConfig) -> tuple[IntPolynomial, IntPolynomial]:
    return gcd_many(star.a), gcd_many(star.b)


def verify_gcd_theorem(star: StarConfig) -> StarReport:
    _require_theorem_spec(star.spec)
    gcd_a, gcd_b = star_gcds(star)
    ratio_class, (u, v) = beta_pair(star.spec, star.orientation, *star.anchor)
    holds = u * gcd_a == v * gcd_b
    return StarReport(
        family=star.spec.family_name,
        orientation=star.orientation,
        anchor=star.anchor,
        product_equal=verify_product(star),
        gcd_a=gcd_a,
        gcd_b=gcd_b,
        ratio_class=ratio_class,
        beta=(u, v),
        gcd_claim_holds=holds,
    )


_PART4_NAMES = ("c", "c*G_t", "c*G_t^2")


def verify_part4(star: StarConfig) -> dict:
    """Classify ``gcd(a1,b3) * gcd(b1,a3)`` as ``c * G_t^e`` with e in 0..2."""
    kind = classify(star.spec).kind
    if kind is Kind.OTHER:
        raise NotTyped(f"{star.spec.family_name or 'spec'} is neither Lucas nor Fibonacci type")
    t = 1 if kind is Kind.LUCAS else 2
    Gt = canonical(term(star.spec, t))
    product = canonical(gcd(star.a1, star.b3) * gcd(star.b1, star.a3))
    candidate = canonical(star.c)
    for e in range(3):
        if product == candidate:
            return {"class": _PART4_NAMES[e], "t": t, "exponent": e, "product": product}
        candidate = candidate * Gt
    raise UnclassifiedPart4(
        f"{star.spec.family_name} {star.orientation.value} {star.anchor}: "
        f"{format_poly(product)} is not c*G_{t}^e for c = {format_poly(star.c)}"
    )


def check_star(spec: GfpSpec, orientation, m: int, n: int) -> StarReport:
    """Everything that applies to one star.

    The gcd claim is evaluated for theorem-grade typed specs only; the
    part (4) classification for typed specs (``unclassified`` when none fits).
    """
    star = make_star(spec, orientation, m, n)
    kind = classify(spec).kind
    if kind is not Kind.OTHER and spec.theorem_grade:
        report = verify_gcd_theorem(star)
    else:
        gcd_a, gcd_b = star_gcds(star)
        report = StarReport(
            spec.family_name, star.orientation, star.anchor, verify_product(star), gcd_a, gcd_b
        )
    if kind is not Kind.OTHER:
        try:
            frag = verify_part4(star)
            report = replace(
                report, part4_class=frag["class"], part4_t=frag["t"], part4_exponent=frag["exponent"]
            )
        except UnclassifiedPart4:
            report = replace(report, part4_class="unclassified", part4_t=1 if kind is Kind.LUCAS else 2)
    return report


def anchors(orientation, m_max: int, n_max: int) -> list[tuple[int, int]]:
    return [
        (m, n)
        for m in range(m_max + 1)
        for n in range(n_max + 1)
        if star_in_bounds(orientation, m, n)
    ]


def _orientations(orientation) -> list[Orientation]:
    if orientation is None or str(orientation).lower() == "both":
        return [Orientation.A, Orientation.B]
    return [Orientation.parse(orientation)]


@dataclass
class StarSweep:
    report: VerificationReport
    stars: list[StarReport] = field(default_factory=list)


def verify_star_grid(
    spec: GfpSpec,
    orientation="both",
    m_max: int = DEFAULT_GRID,
    n_max: int = DEFAULT_GRID,
) -> StarSweep:
    """Sweep all valid anchors; the product identity is always asserted,
    the gcd claim and part (4) classification on theorem-grade typed specs."""
    report = VerificationReport(
        "star-of-david",
        {"family": spec.family_name, "orientation": str(orientation), "m_max": m_max, "n_max": n_max},
    )
    stars = []
    strict = classify(spec).kind is not Kind.OTHER and spec.theorem_grade
    classes: dict[str, int] = {}
    for ori in _orientations(orientation):
        for m, n in anchors(ori, m_max, n_max):
            sr = check_star(spec, ori, m, n)
            stars.append(sr)
            where = dict(orientation=ori.value, anchor=[m, n])
            report.check(sr.product_equal, claim="product", **where)
            if strict:
                report.check(
                    bool(sr.gcd_claim_holds),
                    claim="gcd",
                    ratio_class=sr.ratio_class.value,
                    beta=list(sr.beta),
                    gcd_a=sr.gcd_a,
                    gcd_b=sr.gcd_b,
                    **where,
                )
                report.check(sr.part4_class != "unclassified", claim="part4", **where)
            if sr.part4_class is not None:
                classes[sr.part4_class] = classes.get(sr.part4_class, 0) + 1
    report.details["gcd_theorem_asserted"] = strict
    report.details["part4_classes"] = classes
    return StarSweep(report, stars)


# ---------------------------------------------------------------------------
# corollaries


def _equal_gcd(ori, m, n):
    return True


def _both_even(m, n):
    return m % 2 == 0 and n % 2 == 0


def _pell_even(ori, m, n):
    if not _both_even(m, n):
        return None
    k1, k2 = n // 2, m // 2
    return (k1 * k2) % 4 != 0 and (k1 - k2) % 2 != 0


def _fermat_a(m, n):
    k1, k2 = n // 2, m // 2
    return (k1 * k2) % 9 != 0 and (k1 - 2 * k2) % 3 != 0


def _fermat_even(ori, m, n):
    # orientation A only: under B this condition admits e.g. (2, 8), where
    # gcd_b = 3 * gcd_a; orientation B has its own condition (fermat-even-b)
    if ori is not Orientation.A or not _both_even(m, n):
        return None
    return _fermat_a(m, n)


def _fermat_even_a(ori, m, n):
    if ori is not Orientation.A or not _both_even(m, n):
        return None
    return _fermat_a(m, n)


def fermat_condition_unrestricted(ori, m, n):
    """The fermat-even condition applied to both orientations."""
    if not _both_even(m, n):
        return None
    return _fermat_a(m, n)


def _fermat_even_b(ori, m, n):
    if ori is not Orientation.B or not _both_even(m, n):
        return None
    k1, k2 = n // 2, m // 2
    return (k1 * k2) % 9 != 0 and ((k1 - 1) * (k2 - 1)) % 9 != 0


def _fermat_lucas_a(ori, m, n):
    if ori is not Orientation.A:
        return None
    return (n * m) % 9 != 0 and ((n - 2) * (m + 2)) % 9 != 0


def _fermat_lucas_b(ori, m, n):
    if ori is not Orientation.B:
        return None
    return (n * m) % 9 != 0 and ((n - 2) * (m - 2)) % 9 != 0


# name -> (families, condition); a condition returns None when the anchor is
# outside the statement's setting, False when its modular hypothesis fails
COROLLARIES = {
    "equal-gcd": (
        (
            "fibonacci",
            "lucas",
            "jacobsthal",
            "jacobsthal_lucas",
            "chebyshev1",
            "pell_lucas_prime",
            "pell_lucas_raw",
            "morgan_voyce_B",
            "morgan_voyce_C",
        ),
        _equal_gcd,
    ),
    "pell-even": (("pell", "chebyshev2"), _pell_even),
    "fermat-even": (("fermat",), _fermat_even),
    "fermat-even-a": (("fermat",), _fermat_even_a),
    "fermat-even-b": (("fermat",), _fermat_even_b),
    "fermat-lucas-a": (("fermat_lucas",), _fermat_lucas_a),
    "fermat-lucas-b": (("fermat_lucas",), _fermat_lucas_b),
}

#: Families whose two triangle gcds always agree (pell_lucas_prime standing for Pell-Lucas).
EQUAL_GCD_FAMILIES = (
    "fibonacci",
    "lucas",
    "jacobsthal",
    "jacobsthal_lucas",
    "chebyshev1",
    "pell_lucas_prime",
    "morgan_voyce_B",
    "morgan_voyce_C",
)


def corollaries_for(family: Optional[str]) -> list[str]:
    return [name for name, (fams, _) in COROLLARIES.items() if family in fams]


def verify_corollaries(
    spec: GfpSpec,
    m_max: int = DEFAULT_GRID,
    n_max: int = DEFAULT_GRID,
    names: Optional[Iterable[str]] = None,
) -> list[VerificationReport]:
    """Assert gcd_a == gcd_b on every anchor meeting a corollary's hypotheses.

    Anchors failing the modular hypotheses are skipped and counted; the
    first skipped anchor whose gcds actually differ is kept in
    ``details["counterexample"]`` as an illustration.
    """
    applicable = corollaries_for(spec.family_name)
    if not applicable:
        raise FamilyNotCovered(f"no corollary covers {spec.family_name!r}")
    if names is not None:
        applicable = [n for n in applicable if n in set(names)]
    reports = []
    gcd_cache: dict[tuple[Orientation, int, int], tuple[IntPolynomial, IntPolynomial]] = {}
    for name in applicable:
        _, cond = COROLLARIES[name]
        report = VerificationReport(name, {"family": spec.family_name, "m_max": m_max, "n_max": n_max})
        report.details["counterexample"] = None
        for ori in (Orientation.A, Orientation.B):
            for m, n in anchors(ori, m_max, n_max):
                ok = cond(ori, m, n)
                if ok is None:
                    continue
                key = (ori, m, n)
                if key not in gcd_cache:
                    gcd_cache[key] = star_gcds(make_star(spec, ori, m, n))
                ga, gb = gcd_cache[key]
                if not ok:
                    report.skipped += 1
                    if ga != gb and report.details["counterexample"] is None:
                        report.details["counterexample"] = {
                            "orientation": ori.value,
                            "anchor": [m, n],
                            "gcd_a": format_poly(ga),
                            "gcd_b": format_poly(gb),
                        }
                    continue
                report.check(ga == gb, orientation=ori.value, anchor=[m, n], gcd_a=ga, gcd_b=gb)
        reports.append(report)
    return reports
