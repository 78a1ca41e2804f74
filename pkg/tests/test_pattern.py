import pytest
from hypothesis import given
from hypothesis import strategies as st

from hankel_lab.contfrac import cf_expand
from hankel_lab.errors import InvalidPattern, InvalidPowerSeq, NotRepresentable
from hankel_lab.hankel import hankel_transform
from hankel_lab.pattern import (
    b_to_p,
    gf_relation_check,
    multiplicities,
    p_to_b,
    support_of,
    validate_pattern,
)


def brute_b(p):
    """b_n as the literal sum, parity correction written out."""
    out = []
    for n in range(len(p)):
        total = 0
        k = n
        while k >= 0:
            total += p[k]
            k -= 2
        out.append(total - (1 if n % 2 == 0 else 0))
    return out


@pytest.mark.parametrize(
    "p, b",
    [
        ([1, 1, 3, 4, 8, 16], [0, 1, 3, 5, 11, 21]),
        ([1] * 7, [0, 1, 1, 2, 2, 3, 3]),
        ([1, 1, 2, 2, 2], [0, 1, 2, 3, 4]),
        ([1, 1, 3, 5, 7, 9], [0, 1, 3, 6, 10, 15]),
        ([1, 3, 5, 7, 9, 11, 13], [0, 3, 5, 10, 14, 21, 27]),
    ],
)
def test_p_to_b(p, b):
    assert p_to_b(p) == b


def test_p_to_b_rejects_bad_powers():
    with pytest.raises(InvalidPowerSeq):
        p_to_b([2, 1])
    with pytest.raises(InvalidPowerSeq):
        p_to_b([1, 0])
    with pytest.raises(InvalidPowerSeq):
        p_to_b([])


@pytest.mark.parametrize(
    "b, p",
    [
        ([0, 1, 3, 5, 11, 21], [1, 1, 3, 4, 8, 16]),
        ([0, 1, 1, 3, 5, 11], [1, 1, 1, 2, 4, 8]),
        ([0, 1], [1, 1]),
    ],
)
def test_b_to_p(b, p):
    assert b_to_p(b) == p


def test_b_to_p_not_representable():
    with pytest.raises(NotRepresentable) as exc:
        b_to_p([0, 1, 1, 1])
    assert exc.value.index == 3


def test_b_to_p_invalid():
    with pytest.raises(InvalidPattern):
        b_to_p([0, 2, 1])


def test_validate_pattern():
    assert validate_pattern([0, 1, 2, 6, 9, 18])
    assert str(validate_pattern([0, 1, 2, 6, 9, 18])) == "OK"
    v = validate_pattern([1, 2, 3])
    assert not v and any("b_0" in msg for msg in v.violations)
    v = validate_pattern([0, 2, 1])
    assert not v and any("non-decreasing" in msg for msg in v.violations)
    v = validate_pattern([0, 0, 1])
    assert any("b_1" in msg for msg in v.violations)
    v = validate_pattern([0, 1, 1, 1])
    assert v.first_unrepresentable == 3


def test_multiplicities():
    assert multiplicities([0, 1, 1, 2, 2, 3, 3]) == [(0, 1), (1, 2), (2, 2), (3, 2)]
    assert multiplicities([0, 1, 2, 3]) == [(0, 1), (1, 1), (2, 1), (3, 1)]
    assert multiplicities([0, 1, 1, 3, 3, 6, 6]) == [(0, 1), (1, 2), (3, 2), (6, 2)]


def test_gf_relation_check():
    assert gf_relation_check([1, 1, 3, 4, 8, 16], [0, 1, 3, 5, 11, 21], 5)
    assert gf_relation_check([1] * 9, [0, 1, 1, 2, 2, 3, 3, 4, 4], 8)
    assert not gf_relation_check([1, 1, 3, 4], [0, 1, 3, 6], 3)


def test_printed_inverse_relation_fails():
    # P = (1 - x^2) B - 1 (as misprinted) is off by 2 in the constant term
    from hankel_lab.pattern import ONE_MINUS_X2
    from hankel_lab.series import PowerSeries, ps_mul

    B = PowerSeries([0, 1, 3, 5, 11, 21], 5)
    assert list(ps_mul(ONE_MINUS_X2, B, 5) - 1) == [-1, 1, 3, 4, 8, 16]
    assert list(ps_mul(ONE_MINUS_X2, B, 5) + 1) == [1, 1, 3, 4, 8, 16]


def test_support_of():
    assert support_of([1, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, -1]) == [0, 1, 3, 5, 11]
    assert support_of([1, 0, 0, 0]) == [0]
    h = hankel_transform(cf_expand([1, 1, 3, 5, 7, 9, 11], 20))
    assert h.values == (1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 1)
    assert support_of(h) == [0, 1, 3, 6, 10]


powers_seqs = st.lists(st.integers(1, 6), min_size=0, max_size=19).map(lambda t: [1] + t)


@given(powers_seqs)
def test_p_to_b_matches_literal_sum(p):
    assert p_to_b(p) == brute_b(p)


@given(powers_seqs)
def test_round_trip_p_b_p(p):
    b = p_to_b(p)
    valid = all(b[i] >= b[i - 1] for i in range(1, len(b)))
    assert b_to_p(b, strict=valid) == p


@given(powers_seqs)
def test_gf_relation_holds_for_derived_pattern(p):
    assert gf_relation_check(p, p_to_b(p), len(p) - 1)


@given(st.lists(st.integers(1, 5), min_size=0, max_size=19))
def test_round_trip_b_p_b(steps):
    # raise each power just enough to keep b non-decreasing
    p, b = [1], [0]
    for n, s in enumerate(steps, start=1):
        prev2 = b[n - 2] if n >= 2 else 0
        p.append(max(s, b[n - 1] - prev2))
        b.append(prev2 + p[n])
    assert validate_pattern(b)
    assert p_to_b(b_to_p(b)) == b
    assert b_to_p(b) == p


@given(st.lists(st.integers(1, 6), min_size=1, max_size=19))
def test_valid_p_gives_valid_b_when_nondecreasing(tail):
    p = [1] + tail
    b = p_to_b(p)
    assert b[0] == 0 and b[1] == p[1] >= 1
    monotone = all(b[i] >= b[i - 1] for i in range(1, len(b)))
    assert bool(validate_pattern(b)) == monotone
