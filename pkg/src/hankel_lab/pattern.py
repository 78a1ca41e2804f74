"""Maps between CF power sequences p and Hankel pattern sequences b.

    b_n = p_n + p_{n-2} + p_{n-4} + ... - [n even]
    p_0 = 1, p_1 = b_1, p_2 = b_2, p_n = b_n - b_{n-2}  (n >= 3)

A value repeated r+1 times in b marks a nonzero Hankel entry of multiplicity
r+1. Since p_n >= 1 forces b_n > b_{n-2}, no value can repeat three times.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Sequence

from .errors import InvalidPattern, InvalidPowerSeq, NotRepresentable
from .series import Polynomial, PowerSeries, ps_mul, ps_rational

ONE_MINUS_X2 = Polynomial([1, 0, -1])


def check_power_seq(p: Sequence[int]) -> None:
    if not p:
        raise InvalidPowerSeq("empty power sequence")
    if p[0] != 1:
        raise InvalidPowerSeq(f"p_0 must be 1, got {p[0]}")
    for k, pk in enumerate(p):
        if pk < 1:
            raise InvalidPowerSeq(f"p_{k} = {pk} < 1")


def p_to_b(p: Sequence[int]) -> list[int]:
    check_power_seq(p)
    return [sum(p[n - 2 * k] for k in range(n // 2 + 1)) - (n % 2 == 0) for n in range(len(p))]


def _derived_powers(b: Sequence[int]):
    """(n, p_n) pairs straight from the closed form, no validation."""
    for n in range(len(b)):
        if n == 0:
            yield 0, 1
        elif n < 3:
            yield n, b[n]
        else:
            yield n, b[n] - b[n - 2]


@dataclass(frozen=True)
class PatternVerdict:
    violations: tuple[str, ...] = ()
    first_unrepresentable: int | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "OK" if self.ok else "; ".join(self.violations)


def validate_pattern(b: Sequence[int]) -> PatternVerdict:
    if len(b) == 0:
        return PatternVerdict(("empty pattern",))
    problems = []
    if b[0] != 0:
        problems.append("b_0 must be 0")
    if len(b) > 1 and b[1] < 1:
        problems.append("b_1 must be >= 1")
    drops = [i for i in range(1, len(b)) if b[i] < b[i - 1]]
    if drops:
        problems.append(f"not non-decreasing at n={drops[0]}")
    bad = None
    if not problems:
        bad = next((n for n, p in _derived_powers(b) if p < 1), None)
        if bad is not None:
            problems.append(f"derived power p_{bad} < 1 (multiplicity above 2)")
    return PatternVerdict(tuple(problems), bad)


def b_to_p(b: Sequence[int], strict: bool = True) -> list[int]:
    """Inverse of p_to_b. With ``strict=False`` the closed form is applied to
    any list, valid pattern or not."""
    if not strict:
        return [p for _, p in _derived_powers(b)]
    verdict = validate_pattern(b)
    if verdict.first_unrepresentable is not None:
        n = verdict.first_unrepresentable
        raise NotRepresentable(n, f"b_{n} - b_{n - 2} = {b[n] - b[n - 2]}: no positive power encodes it")
    if not verdict:
        raise InvalidPattern(str(verdict))
    return [p for _, p in _derived_powers(b)]


def multiplicities(b: Sequence[int]) -> list[tuple[int, int]]:
    return [(v, len(list(run))) for v, run in groupby(b)]


def gf_relation_check(p: Sequence[int], b: Sequence[int], order: int) -> bool:
    """B = (P - 1)/(1 - x^2) and P = (1 - x^2) B + 1, both mod x^(order+1)."""
    if len(p) <= order or len(b) <= order:
        raise ValueError(f"need more than {order} terms of p and b")
    P = PowerSeries(p[: order + 1], order)
    B = PowerSeries(b[: order + 1], order)
    forward = ps_rational(P - 1, ONE_MINUS_X2, order) == B
    backward = ps_mul(ONE_MINUS_X2, B, order) + 1 == P
    return forward and backward


def support_of(h) -> list[int]:
    values = getattr(h, "values", h)
    return [i for i, v in enumerate(values) if v]
