"""Integer triangles obtained by evaluating Hosoya triangles, and
coefficient-gcd exponent sequences."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import NotAPurePower, UnknownFamily
from .gfp import builtin_family, term
from .hosoya import build, initial_triangle
from .polyarith import content, eval_at


def numeric_triangle(
    family: str, rows: int, x0: int, initial_only: bool = False
) -> list[list[int]]:
    """Entrywise value at ``x0`` of rows ``0..rows-1`` of the triangle.

    With ``initial_only`` the zero edges of a Fibonacci-type triangle are
    dropped and ``rows`` nonzero rows are returned.
    """
    spec = builtin_family(family)
    if rows < 0:
        raise ValueError("row count must be nonnegative")
    if initial_only:
        polys = initial_triangle(build(spec, rows + 1), rows)
    else:
        polys = build(spec, rows - 1).rows() if rows else []
    return [[eval_at(p, x0) for p in row] for row in polys]


def _valuation(value: int, prime: int) -> int:
    if value <= 0:
        raise NotAPurePower(f"{value} is not a power of {prime}")
    e = 0
    while value % prime == 0:
        value //= prime
        e += 1
    if value != 1:
        raise NotAPurePower(f"coefficient gcd has a factor {value} besides {prime}")
    return e


# family -> (prime, index map n -> term index)
_GCD_FAMILIES = {
    "fermat": (3, lambda n: n),
    "fermat_lucas": (3, lambda n: n),
    "pell": (2, lambda n: 2 * n),
    "chebyshev2": (2, lambda n: n),
}


def coefficient_gcd_exponents(family: str, N: int) -> list[int]:
    """``[e_1, ..., e_N]`` with ``content(G_i(n)) == prime ** e_n``.

    For pell the terms are the even-index ``P_(2n)``.  Indices follow the
    catalog, so chebyshev2 term ``n`` is ``U_(n-1)``.
    """
    key = family.lower() if isinstance(family, str) else family
    if key not in _GCD_FAMILIES:
        raise UnknownFamily(f"no coefficient-gcd pattern for {family!r}")
    prime, index = _GCD_FAMILIES[key]
    spec = builtin_family(key)
    return [_valuation(content(term(spec, index(n))), prime) for n in range(1, N + 1)]


def flatten(rows: Iterable[Sequence[int]]) -> list[int]:
    return [v for row in rows for v in row]


def export_bfile(sequence: Iterable, offset: int = 1) -> str:
    """OEIS b-file text; nested rows are flattened row-major."""
    items = list(sequence)
    if items and isinstance(items[0], (list, tuple)):
        items = flatten(items)
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(items))
