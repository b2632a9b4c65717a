import threading

import pytest

from hosoyapoly.errors import NotBinetEligible, NotTheoremGrade, UnknownFamily
from hosoyapoly.gfp import (
    BUILTIN_FAMILIES,
    GfpSpec,
    Kind,
    builtin_family,
    classify,
    family_names,
    reduce_mod_d_squared,
    term,
    verify_binet_equivalence,
    verify_gcd_distance,
    verify_mod_d_squared,
)
from hosoyapoly.polyarith import ONE, ZERO, X, exact_div, gcd, parse_poly
from hosoyapoly.report import Status

P = parse_poly

CATALOG = {
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

# a - b = c * sqrt(R) from the root table, as (c, R)
SURDS = {
    "fibonacci": (1, "x^2+4"),
    "pell": (2, "x^2+1"),
    "fermat": (1, "9*x^2-8"),
    "chebyshev2": (2, "x^2-1"),
    "jacobsthal": (1, "8*x+1"),
    "morgan_voyce_B": (1, "x^2+4*x"),
    "vieta": (1, "x^2-4"),
}
# Lucas-type partners share the same roots
PARTNER = {
    "lucas": "fibonacci",
    "pell_lucas_prime": "pell",
    "fermat_lucas": "fermat",
    "chebyshev1": "chebyshev2",
    "jacobsthal_lucas": "jacobsthal",
    "morgan_voyce_C": "morgan_voyce_B",
    "vieta_lucas": "vieta",
}


def test_catalog_contents():
    assert tuple(CATALOG) == BUILTIN_FAMILIES
    for name, params in CATALOG.items():
        s = builtin_family(name)
        assert (s.p0, s.p1, s.d, s.g) == tuple(P(t) for t in params)


def test_lookup_is_case_insensitive_and_checked():
    assert builtin_family("Morgan_Voyce_B").family_name == "morgan_voyce_B"
    with pytest.raises(UnknownFamily):
        builtin_family("bogus")
    assert "pell_lucas_raw" in family_names(include_extra=True)
    assert "pell_lucas_raw" not in family_names()


@pytest.mark.parametrize("name", list(SURDS) + list(PARTNER))
def test_root_table_radicands(name):
    s = builtin_family(name)
    c, radicand = SURDS[PARTNER.get(name, name)]
    assert s.d * s.d + 4 * s.g == c * c * P(radicand)


def test_lucas_type_condition():
    for name in PARTNER:
        s = builtin_family(name)
        assert 2 * s.p1 == s.p0 * s.d
        assert s.kind is Kind.LUCAS
    for name in SURDS:
        assert builtin_family(name).kind is Kind.FIBONACCI
    assert classify(GfpSpec(0, 2, X, 1)).kind is Kind.OTHER


def test_classification_fields():
    cls = classify(builtin_family("chebyshev1"))
    assert cls.alpha == (2, 1)
    assert cls.rho == X
    assert classify(builtin_family("fibonacci")).alpha is None


def test_theorem_grade_flags():
    flagged = {n for n in family_names(True) if not builtin_family(n).theorem_grade}
    assert flagged == {"fermat_lucas", "jacobsthal_lucas", "pell_lucas_raw"}


def test_spec_validation():
    with pytest.raises(ValueError):
        GfpSpec(X, 1, X, 1)  # p0 not constant
    with pytest.raises(ValueError):
        GfpSpec(0, 1, P("2*x"), 2)  # gcd(d, g) = 2
    with pytest.raises(ValueError):
        GfpSpec(0, 0, X, 1)


def test_terms():
    fib = builtin_family("fibonacci")
    assert term(fib, 5) == P("x^4+3*x^2+1")
    assert term(fib, 0) == ZERO
    assert term(builtin_family("fermat"), 3) == P("9*x^2-2")
    assert term(builtin_family("lucas"), 0) == P("2")
    with pytest.raises(IndexError):
        term(fib, -1)


@pytest.mark.parametrize("name", BUILTIN_FAMILIES)
def test_recurrence_recomputed_independently(name):
    s = builtin_family(name)
    a, b = s.p0, s.p1
    for n in range(2, 25):
        a, b = b, s.d * b + s.g * a
        assert term(s, n) == b


def test_memo_is_thread_safe():
    s = builtin_family("pell")
    results = [None] * 8

    def work(i):
        results[i] = term(s, 60 + i)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    fresh = builtin_family("pell")
    assert results == [term(fresh, 60 + i) for i in range(8)]


@pytest.mark.parametrize("name", BUILTIN_FAMILIES)
def test_binet(name):
    assert verify_binet_equivalence(builtin_family(name), 50).status is Status.PASS


def test_binet_rejects_other():
    with pytest.raises(NotBinetEligible):
        verify_binet_equivalence(GfpSpec(0, 2, X, 1), 5)


def test_mod_d_squared_examples():
    fib = builtin_family("fibonacci")
    assert reduce_mod_d_squared(fib, 1) == ONE
    assert reduce_mod_d_squared(fib, 4) == P("2*x")
    assert exact_div(term(fib, 4) - P("2*x"), X * X) == X
    assert reduce_mod_d_squared(builtin_family("jacobsthal"), 2) == ONE


@pytest.mark.parametrize("name", family_names(True))
def test_mod_d_squared_sweep(name):
    assert verify_mod_d_squared(builtin_family(name), 30).status is Status.PASS


def test_gcd_distance_examples():
    fib, luc = builtin_family("fibonacci"), builtin_family("lucas")
    assert gcd(term(fib, 2), term(fib, 4)) == X
    assert gcd(term(luc, 1), term(luc, 3)) == X
    assert gcd(X, term(fib, 3)) == ONE


@pytest.mark.parametrize(
    "name", [n for n in BUILTIN_FAMILIES if builtin_family(n).theorem_grade]
)
def test_gcd_distance_sweep(name):
    rep = verify_gcd_distance(builtin_family(name), 20)
    assert rep.status is Status.PASS and rep.checked > 0


def test_gcd_distance_requires_theorem_grade():
    with pytest.raises(NotTheoremGrade):
        verify_gcd_distance(builtin_family("fermat_lucas"), 10)
    with pytest.raises(NotTheoremGrade):
        verify_gcd_distance(GfpSpec(0, 2, X, 1), 10)
