import json
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hankel_lab.analysis import (
    SCHEMA_VERSION,
    binomial_transform,
    check_101_impossible,
    check_conjecture,
    eta_convolution,
    even_subsequence,
    gf_transform,
)
from hankel_lab.catalog import rule
from hankel_lab.contfrac import cf_expand
from hankel_lab.errors import InvalidPattern, NotRepresentable, ZeroConstantTerm
from hankel_lab.hankel import hankel_transform
from hankel_lab.reproduce import catalog_sequences

CATALAN = [1, 1, 2, 5, 14, 42, 132]
TRIANGULAR_H = [1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0]


def test_jacobsthal_pattern_passes():
    r = check_conjecture(pattern=[0, 1, 3, 5, 11, 21], order=22)
    assert r.verdict == "PASS" and r.passed
    assert r.h.values[:23] == (1, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0)
    assert r.derived["values"] == [1, 1, 3, 4, 8, 16]
    assert r.expected_support == r.observed_support == [0, 1, 3, 5, 11, 21]
    assert r.prefix_length == 45


def test_jacobsthal_rule_passes():
    r = check_conjecture(pattern=rule("jacobsthal_pattern"), order=22)
    assert r.passed and not r.terminating


def test_extended_odd_passes():
    r = check_conjecture(powers=rule("extended_odd_cf_powers"), order=21)
    assert r.passed
    assert r.observed_support == [0, 1, 3, 6, 10, 15, 21]
    assert list(r.h.values[:22]) == TRIANGULAR_H[:22]


def test_threes_periodic():
    r = check_conjecture(powers=rule("threes_cf_powers"), order=11)
    assert r.passed
    assert r.h.values == (1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0)


def test_pentagonal_sign_cycle():
    r = check_conjecture(powers=rule("pentagonal_cf_powers"), signs=(-1, -1, 1, 1), order=20)
    assert r.passed
    assert r.h.values[:10] == (1, 1, -1, 0, 0, 0, -1, 0, 0, 1)
    assert r.h.values[18] == 1
    assert r.source["signs"] == [-1, -1, 1, 1]


def test_pattern_with_duplicates_reports_multiplicities():
    r = check_conjecture(pattern=rule("jacobsthal_pattern"), order=10)
    dup = check_conjecture(pattern=[0, 1, 1, 3, 5, 11, 21], order=10)
    assert dup.passed
    assert dup.multiplicities == [(0, 1), (1, 2), (3, 1), (5, 1)]
    assert r.multiplicities == [(0, 1), (1, 1), (3, 1), (5, 1)]
    assert dup.observed_support == r.observed_support


def test_not_representable():
    with pytest.raises(NotRepresentable):
        check_conjecture(pattern=[0, 1, 1, 1, 2], order=4)


def test_invalid_sources():
    with pytest.raises(InvalidPattern):
        check_conjecture(pattern=[0, 2, 1], order=4)
    with pytest.raises(InvalidPattern):
        check_conjecture(powers=[2, 1, 1], order=4)
    with pytest.raises(ValueError):
        check_conjecture(pattern=[0, 1], powers=[1, 1], order=4)
    with pytest.raises(ValueError):
        check_conjecture(pattern=[0, 1, 3], order=1)


def test_fail_verdict_is_reported():
    # the fraction is fine but a wrong expectation is a plain FAIL, not an error
    r = check_conjecture(powers=[1, 1, 1, 1], signs=(1,), order=6)
    assert r.verdict in ("PASS", "FAIL")
    assert r.passed == (r.in_unit_set and r.support_match)


def test_no_overclaim():
    r = check_conjecture(pattern=rule("jacobsthal_pattern"), order=8)
    assert r.window == 8
    assert all(v <= 8 for v in r.expected_support)
    assert all(i <= 8 for i in r.observed_support)
    assert len(r.h.values) == 9


def test_terminating_list_flagged():
    r = check_conjecture(powers=[1, 1], order=6)
    assert r.terminating
    assert r.h.values == (1, 1, 0, 0, 0, 0, 0)
    assert r.passed


def test_report_json_shape():
    r = check_conjecture(pattern=[0, 1, 3, 5, 11, 21], order=12)
    d = json.loads(r.to_json())
    assert d["schema_version"] == SCHEMA_VERSION
    assert d["kind"] == "conjecture_report"
    assert d["verdict"] == "PASS"
    assert d["h"]["values"] == list(r.h.values)
    for key in ("source", "derived", "depth", "prefix_length", "expected_support", "observed_support",
                "in_unit_set", "support_match", "multiplicities", "nonzero_signs", "window"):
        assert key in d
    assert d["nonzero_signs"] == [r.h.values[i] for i in r.observed_support]


@pytest.mark.parametrize("a, r, expected", [
    ([1, 1, 2, 5, 14], 0, [1, 1, 2, 5, 14]),
    (CATALAN, 1, [1, 2, 5, 15, 51, 188, 731]),
    ([1, 0, 0, 0], 2, [1, 2, 4, 8]),
])
def test_binomial_transform(a, r, expected):
    assert binomial_transform(a, r) == expected


def test_binomial_transform_of_catalan_by_differences():
    # independent oracle: sum_k C(n,k) C_k built from the explicit Catalan formula
    cat = [comb(2 * k, k) // (k + 1) for k in range(7)]
    assert binomial_transform(CATALAN, 1) == [sum(comb(n, k) * cat[k] for k in range(n + 1)) for n in range(7)]


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=12), st.integers(-3, 3))
def test_binomial_transform_inverts(a, r):
    assert binomial_transform(binomial_transform(a, r), -r) == a


@pytest.mark.parametrize("a, r, order, expected", [
    ([1, 1, 2, 5, 14], 0, 4, [1, 1, 2, 5, 14]),
    ([1, 1, 2, 5, 14], 1, 4, [1, 2, 5, 14, 42]),
    ([1, 0, 0, 0, 0], 1, 4, [1, 1, 1, 1, 1]),
])
def test_gf_transform(a, r, order, expected):
    assert gf_transform(a, r, order) == expected


def test_gf_transform_errors():
    with pytest.raises(ZeroConstantTerm):
        gf_transform([0, 1, 2], 1, 2)
    with pytest.raises(ValueError):
        gf_transform([1, 1], 1, 4)


@pytest.mark.parametrize("r", [-2, -1, 1, 2])
def test_hankel_invariance(r):
    for name, a in catalog_sequences(16).items():
        h = hankel_transform(a).values
        assert hankel_transform(binomial_transform(a, r)).values == h, name
        if a[0]:
            # f / (1 - r x f) is only defined for a_0 != 0; sequences with a_0 = 0 are skipped
            assert hankel_transform(gf_transform(a, r, 16)).values == h, name


def test_eta_convolution_small():
    assert eta_convolution([1, 0, 0, 0]) == [1, 0, 0, 0]
    assert eta_convolution([1, 1]) == [1, 0]


def test_eta_convolution_triangular_pattern():
    e = eta_convolution(TRIANGULAR_H)
    assert even_subsequence(e) == [1, -1, 2, 1, 0, 2, 1, 0, 0, 2, 1, 2]
    assert all(v == 0 for v in e[1::2])


def test_eta_convolution_of_computed_transform():
    h = hankel_transform(cf_expand(rule("extended_odd_cf_powers"), 44)).values
    assert list(h) == TRIANGULAR_H
    assert even_subsequence(eta_convolution(h)) == [1, -1, 2, 1, 0, 2, 1, 0, 0, 2, 1, 2]


def test_even_subsequence():
    assert even_subsequence([1, 0, -1, 0, 2]) == [1, -1, 2]
    assert even_subsequence([7]) == [7]


@pytest.mark.parametrize("bound", [2, 3, 5])
def test_check_101(bound):
    v = check_101_impossible(bound)
    assert v.passed
    assert v.points == (2 * bound + 1) ** 3
    assert v.max_abs_residual == 0 and not v.failures
    assert v.to_dict()["schema_version"] == SCHEMA_VERSION


def test_check_101_rejects_tiny_bound():
    with pytest.raises(ValueError):
        check_101_impossible(1)


@settings(max_examples=50)
@given(st.lists(st.integers(1, 4), min_size=12, max_size=12), st.integers(2, 8))
def test_random_power_lists_pass(steps, order):
    # raise each power just enough to keep b non-decreasing
    p, b = [1], [0]
    for n, s in enumerate(steps, start=1):
        prev2 = b[n - 2] if n >= 2 else 0
        p.append(max(s, b[n - 1] - prev2))
        b.append(prev2 + p[n])
    r = check_conjecture(powers=p, order=order)
    assert r.verdict == "PASS", (p, r.h.values, r.expected_support)
