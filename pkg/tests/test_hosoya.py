import csv
import io
import json

import pytest

from hosoyapoly.errors import NotFibonacciType, OutOfRange
from hosoyapoly.gfp import BUILTIN_FAMILIES, builtin_family, term
from hosoyapoly.hosoya import (
    backslash_diagonal,
    build,
    initial_triangle,
    rows_to_csv,
    rows_to_dict,
    slash_diagonal,
    to_diag,
    to_rect,
    verify_double_recursion,
)
from hosoyapoly.polyarith import X, eval_at, parse_poly
from hosoyapoly.report import Status

P = parse_poly

# nonzero part of the Fibonacci polynomial triangle, rows 2..6
TABLE5 = [
    [P("1")],
    [X, X],
    [P("x^2+1"), X * X, P("x^2+1")],
    [P("x^3+2*x"), P("x^3+x"), P("x^3+x"), P("x^3+2*x")],
    [P("x^4+3*x^2+1"), X * P("x^3+2*x"), P("x^2+1") ** 2, X * P("x^3+2*x"), P("x^4+3*x^2+1")],
]


@pytest.fixture(scope="module")
def fib_tri():
    return build(builtin_family("fibonacci"), 12)


def test_fibonacci_triangle_matches_table(fib_tri):
    assert initial_triangle(fib_tri, 5) == TABLE5
    assert fib_tri.entry(6, 2) == P("x^4+2*x^2")
    assert fib_tri.entry(6, 2) == X * P("x^3+2*x")
    assert fib_tri.entry(6, 3) == P("x^2+1") ** 2


def test_row4_and_edges(fib_tri):
    assert fib_tri.row(4)[1:4] == [P("x^2+1"), P("x^2"), P("x^2+1")]
    assert fib_tri.row(4)[0].is_zero() and fib_tri.row(4)[4].is_zero()


@pytest.mark.parametrize("name", BUILTIN_FAMILIES)
def test_initial_conditions_and_symmetry(name):
    s = builtin_family(name)
    t = build(s, 10)
    assert t.entry(0, 0) == s.p0 * s.p0
    assert t.entry(1, 0) == t.entry(1, 1) == s.p0 * s.p1
    assert t.entry(2, 1) == s.p1 * s.p1
    for r in range(11):
        for k in range(r + 1):
            assert t.entry(r, k) == t.entry(r, r - k)
            m, n = to_diag((r, k))
            assert t.point(r, k).value == term(s, m) * term(s, n)


def test_coordinates():
    assert to_diag((6, 3)) == (3, 3)
    assert to_diag((4, 1)) == (1, 3)
    assert to_rect((2, 5)) == (7, 2)
    for r in range(8):
        for k in range(r + 1):
            assert to_rect(to_diag((r, k))) == (r, k)
    with pytest.raises(OutOfRange):
        to_diag((2, 3))
    with pytest.raises(OutOfRange):
        to_rect((-1, 0))


def test_entry_out_of_range(fib_tri):
    with pytest.raises(OutOfRange):
        fib_tri.entry(13, 0)
    with pytest.raises(OutOfRange):
        fib_tri.row(-1)


@pytest.mark.parametrize("name", list(BUILTIN_FAMILIES) + ["pell_lucas_raw"])
def test_double_recursion(name):
    rep = verify_double_recursion(build(builtin_family(name), 12))
    assert rep.status is Status.PASS
    assert rep.details["failures_by_recursion"] == {"vertical": 0, "diagonal": 0}


def test_double_recursion_negative_control(fib_tri):
    s = fib_tri.spec
    rep = verify_double_recursion(fib_tri, delta=s.d + 1)
    assert rep.status is Status.FAIL
    first = rep.witnesses[0]
    assert (first["r"], first["k"]) == (3, 1)
    assert rep.details["failures_by_recursion"]["vertical"] > 0
    rep = verify_double_recursion(fib_tri, gamma=s.g + 1)
    assert rep.status is Status.FAIL


def test_diagonals(fib_tri):
    assert [p.value for p in slash_diagonal(fib_tri, 2, 3)] == [0, X, X * X]
    assert all(p.value.is_zero() for p in slash_diagonal(fib_tri, 0, 5))
    luc = build(builtin_family("lucas"), 4)
    assert [p.value for p in backslash_diagonal(luc, 0, 2)] == [4, P("2*x")]
    pts = backslash_diagonal(fib_tri, 3, 4)
    assert [p.diag for p in pts] == [(0, 3), (1, 3), (2, 3), (3, 3)]
    assert [p.rect for p in pts] == [(3, 0), (4, 1), (5, 2), (6, 3)]


def test_initial_triangle_needs_zero_edges():
    assert initial_triangle(build(builtin_family("fibonacci"), 4), 2) == [[1], [X, X]]
    with pytest.raises(NotFibonacciType):
        initial_triangle(build(builtin_family("lucas"), 4), 2)


def test_exports(fib_tri):
    rows = initial_triangle(fib_tri, 3)
    d = rows_to_dict("fibonacci", rows, eval_point=1)
    assert json.loads(json.dumps(d)) == {
        "family": "fibonacci",
        "rows": [["1"], ["x", "x"], ["x^2+1", "x^2", "x^2+1"]],
        "eval_point": 1,
        "values": [[1], [1, 1], [2, 1, 2]],
    }
    assert "eval_point" not in rows_to_dict("fibonacci", rows)
    parsed = list(csv.reader(io.StringIO(rows_to_csv(rows))))
    assert parsed == d["rows"]


def test_triangle_at_one_matches_integer_products():
    t = build(builtin_family("pell"), 10)
    pell = [0, 1]
    while len(pell) < 11:
        pell.append(2 * pell[-1] + pell[-2])
    for r in range(11):
        assert [eval_at(p, 1) for p in t.row(r)] == [pell[k] * pell[r - k] for k in range(r + 1)]
