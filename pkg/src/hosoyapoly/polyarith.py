"""Dense univariate polynomials over the integers.

Coefficients are stored low degree first (``coeffs[i]`` multiplies ``x**i``)
with trailing zeros removed, so the zero polynomial is the empty tuple.
Every value is immutable; all operations return new polynomials.

Greatest common divisors are canonical: the integer gcd of the contents times
the primitive gcd, signed so that the leading coefficient is positive.
Integers are embedded as constant polynomials, which makes mixed gcds such as
``gcd(d(x), k1, k2)`` reduce to ``gcd(content(d), k1, k2)``.
"""

from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import (
    DivisionByZero,
    EmptyInput,
    NonIntegerIntegral,
    NotDivisible,
    PolynomialParseError,
)
from .report import Status, VerificationReport

#: Degree of the zero polynomial.
NEG_INF = float("-inf")


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPolynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def const(cls, k: int) -> "IntPolynomial":
        return cls((k,))

    @classmethod
    def monomial(cls, e: int, k: int = 1) -> "IntPolynomial":
        return cls([0] * e + [k])

    @property
    def degree(self) -> Union[int, float]:
        """``len(coeffs) - 1``, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.const(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def __add__(self, other):
        return add(self, as_poly(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, as_poly(other))

    def __rsub__(self, other):
        return sub(as_poly(other), self)

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        return mul(self, as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = mul(result, base)
            e >>= 1
            if e:
                base = mul(base, base)
        return result

    def __call__(self, x0: int) -> int:
        return eval_at(self, x0)


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


def as_poly(value) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial.const(value)
    raise TypeError(f"cannot convert {type(value).__name__} to IntPolynomial")


def add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    ac, bc = a.coeffs, b.coeffs
    if len(ac) < len(bc):
        ac, bc = bc, ac
    out = list(ac)
    for i, c in enumerate(bc):
        out[i] += c
    return IntPolynomial(out)


def sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    out = [0] * n
    for i, c in enumerate(a.coeffs):
        out[i] = c
    for i, c in enumerate(b.coeffs):
        out[i] -= c
    return IntPolynomial(out)


def mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return ZERO
    out = [0] * (len(ac) + len(bc) - 1)
    for i, ai in enumerate(ac):
        if ai:
            for j, bj in enumerate(bc):
                out[i + j] += ai * bj
    return IntPolynomial(out)


def scale(a: IntPolynomial, k: int) -> IntPolynomial:
    return IntPolynomial([k * c for c in a.coeffs])


def exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Return ``q`` with ``a == q * b``; raise if no such ``q`` exists in Z[x]."""
    if b.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    bc = b.coeffs
    db, lb = len(bc) - 1, bc[-1]
    r = list(a.coeffs)
    if len(r) - 1 < db:
        raise NotDivisible(f"{format_poly(a)} is not divisible by {format_poly(b)}")
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if not c:
            continue
        k, rem = divmod(c, lb)
        if rem:
            raise NotDivisible(
                f"{format_poly(a)} is not divisible by {format_poly(b)} over Z"
            )
        q[i - db] = k
        off = i - db
        for j, bj in enumerate(bc):
            r[off + j] -= k * bj
    if any(r[:db]):
        raise NotDivisible(f"{format_poly(a)} is not divisible by {format_poly(b)}")
    return IntPolynomial(q)


def divides(b: IntPolynomial, a: IntPolynomial) -> bool:
    try:
        exact_div(a, b)
    except (NotDivisible, DivisionByZero):
        return a.is_zero() and b.is_zero()
    return True


def content(a: IntPolynomial) -> int:
    """Nonnegative gcd of the coefficients; ``content(0) == 0``."""
    return math.gcd(*a.coeffs) if a.coeffs else 0


def canonical(a: IntPolynomial) -> IntPolynomial:
    """``a`` up to sign, with positive leading coefficient."""
    return -a if a.lc < 0 else a


def primitive_part(a: IntPolynomial) -> IntPolynomial:
    """``a / content(a)`` with positive leading coefficient."""
    c = content(a)
    if c == 0:
        return ZERO
    if a.lc < 0:
        c = -c
    return IntPolynomial([x // c for x in a.coeffs])


def _prem(a: list[int], b: tuple[int, ...]) -> list[int]:
    # pseudo-remainder; scaling by lc(b) is skipped on zero steps (gcd-safe)
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if not c:
            continue
        if lb != 1:
            for j in range(i):
                r[j] *= lb
        r[i] = 0
        off = i - db
        for j in range(db):
            r[off + j] -= c * b[j]
    n = min(len(r), db)
    while n and not r[n - 1]:
        n -= 1
    return r[:n]


def _primitive_list(r: list[int]) -> tuple[int, ...]:
    c = math.gcd(*r)
    if r[-1] < 0:
        c = -c
    if c == 1:
        return tuple(r)
    return tuple(x // c for x in r)


def _primitive_gcd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # a, b primitive with positive leading coefficients
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(list(a), b)
        if not r:
            return b
        a, b = b, _primitive_list(r)
    if b:
        return (1,)
    return a


def gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Canonical greatest common divisor in Z[x]."""
    a, b = as_poly(a), as_poly(b)
    if a.is_zero():
        return canonical(b)
    if b.is_zero():
        return canonical(a)
    ca, cb = content(a), content(b)
    c = math.gcd(ca, cb)
    if a.is_constant() or b.is_constant():
        return IntPolynomial.const(c)
    pa, pb = primitive_part(a), primitive_part(b)
    if pa == pb:
        g = pa.coeffs
    else:
        g = _primitive_gcd(pa.coeffs, pb.coeffs)
    if c == 1:
        return IntPolynomial(g)
    return IntPolynomial([c * x for x in g])


def gcd_many(polys: Iterable) -> IntPolynomial:
    """Left fold of :func:`gcd` over a nonempty sequence."""
    polys = [as_poly(p) for p in polys]
    if not polys:
        raise EmptyInput("gcd_many needs at least one polynomial")
    result = canonical(polys[0])
    for p in polys[1:]:
        if result == ONE:
            break
        result = gcd(result, p)
    return result


def eval_at(a: IntPolynomial, x0: int) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * x0 + c
    return acc


def derivative(a: IntPolynomial) -> IntPolynomial:
    return IntPolynomial([i * c for i, c in enumerate(a.coeffs)][1:])


def integrate(a: IntPolynomial, c: int = 0) -> IntPolynomial:
    """Antiderivative with constant term ``c``; every ``a_i`` must be divisible by ``i+1``."""
    out = [c]
    for i, ai in enumerate(a.coeffs):
        q, r = divmod(ai, i + 1)
        if r:
            raise NonIntegerIntegral(
                f"coefficient {ai} of x^{i} is not divisible by {i + 1}"
            )
        out.append(q)
    return IntPolynomial(out)


def poly_sum(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    return reduce(add, polys, ZERO)


def poly_prod(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    return reduce(mul, polys, ONE)


# ---------------------------------------------------------------------------
# text format


def format_poly(a: IntPolynomial) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for e in range(len(a.coeffs) - 1, -1, -1):
        k = a.coeffs[e]
        if not k:
            continue
        if e == 0:
            term = str(k)
        else:
            var = "x" if e == 1 else f"x^{e}"
            if k == 1:
                term = var
            elif k == -1:
                term = "-" + var
            else:
                term = f"{k}*{var}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts)


_TERM = re.compile(r"([+-]?)(\d+)?(\*?)(x(?:\^(\d+))?)?")


def parse_poly(text: str) -> IntPolynomial:
    """Inverse of :func:`format_poly`; whitespace is ignored."""
    s = "".join(text.split())
    if not s:
        raise PolynomialParseError("empty polynomial text")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise PolynomialParseError(f"malformed polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for term in terms:
        m = _TERM.fullmatch(term)
        if not m:
            raise PolynomialParseError(f"malformed term {term!r} in {text!r}")
        sign, digits, star, var, exp = m.groups()
        if digits is None and var is None:
            raise PolynomialParseError(f"malformed term {term!r} in {text!r}")
        if star and (digits is None or var is None):
            raise PolynomialParseError(f"malformed term {term!r} in {text!r}")
        k = int(digits) if digits is not None else 1
        if sign == "-":
            k = -k
        e = 0 if var is None else (int(exp) if exp is not None else 1)
        coeffs[e] = coeffs.get(e, 0) + k
    if not coeffs:
        return ZERO
    out = [0] * (max(coeffs) + 1)
    for e, k in coeffs.items():
        out[e] = k
    return IntPolynomial(out)


# ---------------------------------------------------------------------------


def verify_gcd_multiplicativity(p, q, r, s) -> VerificationReport:
    """Check both parts of the gcd product rule for one quadruple.

    Part 1 needs gcd(p,q) = gcd(r,s) = 1, part 2 needs gcd(p,r) = gcd(q,s) = 1.
    A part whose hypothesis fails is recorded as vacuous.
    """
    p, q, r, s = (as_poly(v) for v in (p, q, r, s))
    report = VerificationReport(
        "gcd-multiplicativity",
        {"p": str(p), "q": str(q), "r": str(r), "s": str(s)},
    )
    lhs = gcd(p * q, r * s)
    parts = {}
    if gcd(p, q) == ONE and gcd(r, s) == ONE:
        rhs = gcd(p, r) * gcd(p, s) * gcd(q, r) * gcd(q, s)
        parts["part1"] = _compare(report, "part1", lhs, rhs)
    else:
        parts["part1"] = Status.VACUOUS
    if gcd(p, r) == ONE and gcd(q, s) == ONE:
        rhs = gcd(p, s) * gcd(q, r)
        parts["part2"] = _compare(report, "part2", lhs, rhs)
    else:
        parts["part2"] = Status.VACUOUS
    report.details = {k: v.value for k, v in parts.items()}
    if Status.FAIL in parts.values():
        report.status = Status.FAIL
    elif all(v is Status.VACUOUS for v in parts.values()):
        report.status = Status.VACUOUS
    else:
        report.status = Status.PASS
    return report


def _compare(report, label, lhs, rhs) -> Status:
    report.checked += 1
    if canonical(lhs) == canonical(rhs):
        return Status.PASS
    report.add_witness(part=label, lhs=str(lhs), rhs=str(rhs))
    return Status.FAIL
