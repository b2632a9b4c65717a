"""Acceptance gate: the fourteen criteria, exact comparisons throughout.

Each criterion records one ``criterion N: PASS|FAIL  detail`` line; the lines
are printed in the pytest terminal summary (see conftest.py) and when this
file is run as a script.
"""

import io
import json
import random
import sys

import pytest

from hosoyapoly.cli import main as cli_main
from hosoyapoly.gfp import (
    BUILTIN_FAMILIES,
    Kind,
    builtin_family,
    verify_binet_equivalence,
    verify_gcd_distance,
    verify_mod_d_squared,
)
from hosoyapoly.gibonomial import gibonomial_triangle, verify_gibonomial_grid
from hosoyapoly.identities import (
    verify_catalan_cassini,
    verify_closed_sums,
    verify_johnson,
    verify_sums_theorem,
)
from hosoyapoly.numtriangles import coefficient_gcd_exponents
from hosoyapoly.polyarith import (
    ONE,
    X,
    IntPolynomial,
    content,
    divides,
    eval_at,
    gcd,
    parse_poly,
)
from hosoyapoly.report import Status
from hosoyapoly.stardavid import EQUAL_GCD_FAMILIES, verify_corollaries, verify_star_grid

P = parse_poly
SEED = 20170601
RESULTS: dict[int, str] = {}


def record(n, ok, detail):
    RESULTS[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    assert ok, RESULTS[n]


# golden data -----------------------------------------------------------------

TABLE5 = [
    [P("1")],
    [X, X],
    [P("x^2+1"), X * X, P("x^2+1")],
    [P("x^3+2*x"), P("x^3+x"), P("x^3+x"), P("x^3+2*x")],
    [P("x^4+3*x^2+1"), X * P("x^3+2*x"), P("x^2+1") ** 2, X * P("x^3+2*x"), P("x^4+3*x^2+1")],
]

TABLE7 = [
    [ONE],
    [ONE, ONE],
    [ONE, X, ONE],
    [ONE, P("x^2+1"), P("x^2+1"), ONE],
    [ONE, X * P("x^2+2"), P("2+3*x^2+x^4"), X * P("x^2+2"), ONE],
    [ONE, P("x^4+3*x^2+1"), P("x^6+5*x^4+7*x^2+2"), P("x^6+5*x^4+7*x^2+2"), P("x^4+3*x^2+1"), ONE],
]


@pytest.fixture(scope="module")
def sweeps():
    return {name: verify_star_grid(builtin_family(name), "both", 12, 12) for name in BUILTIN_FAMILIES}


# criteria --------------------------------------------------------------------


def test_criterion_01_golden_hosoya_triangle():
    out = io.StringIO()
    code = cli_main(["triangle", "--family", "fibonacci", "--rows", "5", "--initial-only",
                     "--format", "json"], out=out)
    rows = [[P(s) for s in row] for row in json.loads(out.getvalue())["rows"]]
    record(1, code == 0 and rows == TABLE5, f"fibonacci initial rows 1-5, exit {code}")


def test_criterion_02_golden_gibonomial_triangle():
    got = gibonomial_triangle(5)
    record(2, got == TABLE7 and got[5][2] == P("x^6+5*x^4+7*x^2+2"), "rows 0-5")


def test_criterion_03_star_products(sweeps):
    bad = sum(
        1 for sw in sweeps.values() for sr in sw.stars if not sr.product_equal
    )
    total = sum(len(sw.stars) for sw in sweeps.values())
    record(3, bad == 0 and total > 0, f"{total} stars, 14 families, A and B, {bad} failures")


def test_criterion_04_star_gcds(sweeps):
    graded = [n for n in BUILTIN_FAMILIES if builtin_family(n).theorem_grade]
    checked = bad = 0
    for name in graded:
        sw = sweeps[name]
        assert sw.report.details["gcd_theorem_asserted"]
        for sr in sw.stars:
            checked += 1
            bad += not sr.gcd_claim_holds
    record(4, bad == 0 and checked > 0,
           f"{checked} stars over {len(graded)} theorem-grade families, {bad} failures")


def test_criterion_05_equality_corollary():
    bad = checked = 0
    for name in EQUAL_GCD_FAMILIES:
        (rep,) = verify_corollaries(builtin_family(name), 16, 16, names=["equal-gcd"])
        checked += rep.checked
        bad += rep.failures
    record(5, bad == 0, f"{checked} anchors m,n <= 16 over {len(EQUAL_GCD_FAMILIES)} families, {bad} failures")


def test_criterion_06_modular_corollaries():
    bad = checked = 0
    witnesses = []
    for name in ("pell", "chebyshev2", "fermat", "fermat_lucas"):
        for rep in verify_corollaries(builtin_family(name), 16, 16):
            checked += rep.checked
            bad += rep.failures
            ce = rep.details["counterexample"]
            if ce:
                witnesses.append(f"{rep.theorem}/{name} {ce['orientation']}{tuple(ce['anchor'])}")
    note = f"counterexamples e.g. {', '.join(witnesses[:3])}" if witnesses else "no counterexample <= 16"
    record(6, bad == 0, f"{checked} anchors, {bad} failures; {note}")


def test_criterion_07_gibonomial_star():
    rep = verify_gibonomial_grid(12)
    fib = [0, 1]
    while len(fib) < 6:
        fib.append(fib[-1] + fib[-2])

    def fibonomial(n, r):
        num = den = 1
        for i in range(1, r + 1):
            num *= fib[n - r + i]
            den *= fib[i]
        return num // den

    row4 = [eval_at(p, 1) for p in gibonomial_triangle(4)[4]]
    ok = rep.status is Status.PASS and row4 == [fibonomial(4, r) for r in range(5)] == [1, 3, 6, 3, 1]
    record(7, ok, f"{rep.checked} checks for 1 <= r < n <= 12, row 4 at x=1 {row4}")


def test_criterion_08_johnson_catalan_cassini():
    bad = checked = 0
    for name in BUILTIN_FAMILIES:
        spec = builtin_family(name)
        for rep in (verify_johnson(spec, 500, seed=SEED, max_index=30), verify_catalan_cassini(spec, 20)):
            checked += rep.checked
            bad += rep.status is Status.FAIL
    record(8, bad == 0, f"{checked} identity instances, {bad} failing reports")


def test_criterion_09_sums_and_closed_forms():
    fib_type = [n for n in BUILTIN_FAMILIES if builtin_family(n).kind is Kind.FIBONACCI]
    bad = checked = 0
    part2 = []
    for name in fib_type:
        spec = builtin_family(name)
        closed = verify_closed_sums(spec, 10)
        if 2 in closed.params["parts"]:
            part2.append(name)
        for rep in (verify_sums_theorem(spec, 10), closed):
            checked += rep.checked
            bad += rep.status is Status.FAIL
    record(9, bad == 0 and part2 == ["fibonacci", "pell"],
           f"{checked} checks over {len(fib_type)} families, part 2 on {part2}, {bad} failing reports")


def test_criterion_10_mod_d_squared():
    reps = [verify_mod_d_squared(builtin_family(n), 30) for n in BUILTIN_FAMILIES]
    bad = sum(r.status is Status.FAIL for r in reps)
    record(10, bad == 0, f"m <= 30 for 14 families, {bad} failing")


def test_criterion_11_gcd_distance():
    graded = [n for n in BUILTIN_FAMILIES if builtin_family(n).theorem_grade]
    reps = [verify_gcd_distance(builtin_family(n), 20) for n in graded]
    bad = sum(r.status is Status.FAIL for r in reps)
    record(11, bad == 0, f"indices <= 20 for {len(graded)} families, {sum(r.checked for r in reps)} checks, {bad} failing")


def test_criterion_12_binet():
    reps = [verify_binet_equivalence(builtin_family(n), 50) for n in BUILTIN_FAMILIES]
    bad = sum(r.status is Status.FAIL for r in reps)
    record(12, bad == 0, f"N = 50 for 14 families, {bad} failing")


def test_criterion_13_coefficient_gcd_powers():
    def v2(n):
        return (n & -n).bit_length() - 1

    seqs = {name: coefficient_gcd_exponents(name, 30)  # raises NotAPurePower on a miss
            for name in ("fermat", "fermat_lucas", "pell", "chebyshev2")}
    ruler = [v2(n) + 1 for n in range(1, 31)]
    record(13, seqs["pell"] == ruler, "pure prime powers for n <= 30; pell exponents equal v2(n)+1")


def _rand_poly(rng):
    return IntPolynomial([rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])


def test_criterion_14_polyarith_properties():
    rng = random.Random(SEED)
    bad = 0
    for _ in range(10_000):
        a, b, c = _rand_poly(rng), _rand_poly(rng), _rand_poly(rng)
        x0 = rng.randint(-6, 6)
        g = gcd(a, b)
        ok = (
            (g.is_zero() or (divides(g, a) and divides(g, b)))
            and g == gcd(b, a)
            and gcd(g, c) == gcd(a, gcd(b, c))
            and content(a * b) == content(a) * content(b)
            and eval_at(a + b, x0) == eval_at(a, x0) + eval_at(b, x0)
            and eval_at(a * b, x0) == eval_at(a, x0) * eval_at(b, x0)
        )
        bad += not ok
    record(14, bad == 0, f"10000 seeded cases, {bad} failures")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
