"""Conjecture checks, Hankel-invariant transforms and related utilities."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import product
from math import comb
from typing import Callable, Sequence, Union

from .contfrac import CFSpec, cf_expand, required_depth
from .errors import InvalidPattern, NotRepresentable, ZeroConstantTerm
from .hankel import HankelResult, det_exact, hankel_matrix, hankel_transform
from .pattern import b_to_p, multiplicities, p_to_b, validate_pattern
from .series import X, PowerSeries, ps_rational

SCHEMA_VERSION = 1

Source = Union[Sequence[int], Callable[[int], int]]


@dataclass
class ConjectureReport:
    source: dict
    derived: dict
    depth: int
    prefix_length: int
    h: HankelResult
    expected_support: list[int]
    observed_support: list[int]
    in_unit_set: bool
    support_match: bool
    multiplicities: list[tuple[int, int]]
    nonzero_signs: list[int]
    verdict: str
    window: int
    terminating: bool = False

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["h"] = self.h.to_dict()
        d["multiplicities"] = [list(vc) for vc in self.multiplicities]
        return {"schema_version": SCHEMA_VERSION, "kind": "conjecture_report", **d}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _materialize(source: Source, enough: Callable[[list[int]], bool], cap: int) -> tuple[list[int], bool]:
    """Prefix of a rule, grown until ``enough`` holds. Lists pass through."""
    if not callable(source):
        return list(source), True
    n = 8
    while True:
        prefix = [source(k) for k in range(n)]
        if enough(prefix):
            return prefix, True
        if n >= cap:
            return prefix, False
        n = min(2 * n, cap)


def _covers(order: int):
    """A (p, b) pair fixes a_0..a_{2N} and shows the pattern past N."""

    def ok(p, b):
        return sum(p) > 2 * order and b and b[-1] > order

    return ok


def check_conjecture(
    *,
    pattern: Source | None = None,
    powers: Source | None = None,
    signs: Sequence[int] = (-1,),
    order: int,
    cyclic: bool = True,
) -> ConjectureReport:
    """Expand the fraction for a pattern b or powers p, and compare the
    support of its Hankel transform h_0..h_order with the distinct values of b.

    Finite lists that end early are read as the terminating fraction; rules
    are sampled until they fix every coefficient and pass the window.
    """
    if (pattern is None) == (powers is None):
        raise ValueError("give exactly one of pattern= or powers=")
    if order < 2:
        raise ValueError("order must be at least 2")
    covers = _covers(order)
    cap = 8 * order + 64
    signs = tuple(signs)

    if pattern is not None:
        b, complete = _materialize(pattern, lambda b: _safe_cover(b, covers), cap)
        verdict = validate_pattern(b)
        if verdict.first_unrepresentable is not None:
            n = verdict.first_unrepresentable
            raise NotRepresentable(n, f"b_{n} - b_{n - 2} = {b[n] - b[n - 2]} < 1")
        if not verdict:
            raise InvalidPattern(str(verdict))
        p = b_to_p(b)
        source = {"kind": "pattern", "values": b, "signs": list(signs)}
        derived = {"kind": "powers", "values": p}
    else:
        p, complete = _materialize(powers, lambda p: _p_cover(p, covers), cap)
        if not p or p[0] != 1 or min(p) < 1:
            raise InvalidPattern("powers must start with 1 and stay >= 1")
        b = p_to_b(p)
        verdict = validate_pattern(b)
        if not verdict:
            raise InvalidPattern(f"derived pattern invalid: {verdict}")
        source = {"kind": "powers", "values": p, "signs": list(signs)}
        derived = {"kind": "pattern", "values": b}

    spec = CFSpec(p, signs, cyclic)
    depth = required_depth(p, 2 * order)
    terminating = sum(p) <= 2 * order
    a = cf_expand(spec, 2 * order)
    h = hankel_transform(a)

    expected = sorted(set(v for v in b if v <= order))
    observed = list(h.support)
    match = expected == observed
    window_b = [v for v in b if v <= order]
    if not complete:
        result = f"INCONCLUSIVE(rule did not cover the window within {cap} terms)"
    elif h.in_unit_set and match:
        result = "PASS"
    else:
        result = "FAIL"
    return ConjectureReport(
        source=source,
        derived=derived,
        depth=depth,
        prefix_length=len(a),
        h=h,
        expected_support=expected,
        observed_support=observed,
        in_unit_set=h.in_unit_set,
        support_match=match,
        multiplicities=multiplicities(window_b),
        nonzero_signs=[h.values[i] for i in observed],
        verdict=result,
        window=order,
        terminating=terminating,
    )


def _safe_cover(b, covers):
    try:
        return covers(b_to_p(b), b)
    except ValueError:
        # invalid prefixes are reported by the caller's validation
        return True


def _p_cover(p, covers):
    if not p or min(p) < 1 or p[0] != 1:
        return True
    return covers(p, p_to_b(p))


def binomial_transform(a: Sequence[int], r: int) -> list[int]:
    return [sum(comb(n, k) * r ** (n - k) * a[k] for k in range(n + 1)) for n in range(len(a))]


def gf_transform(a: Sequence[int], r: int, order: int) -> list[int]:
    """Coefficients of f / (1 - r x f), f the generating function of a."""
    if not a or a[0] == 0:
        raise ZeroConstantTerm("a_0 must be nonzero")
    if len(a) <= order:
        raise ValueError(f"need more than {order} terms")
    f = PowerSeries(a[: order + 1], order)
    return list(ps_rational(f, 1 - r * (X * f), order))


def eta_convolution(h: Sequence[int]) -> list[int]:
    """e_n = sum_k h_k (-1)^(n-k) h_(n-k)."""
    return [sum(h[k] * (-1) ** (n - k) * h[n - k] for k in range(n + 1)) for n in range(len(h))]


def even_subsequence(e: Sequence[int]) -> list[int]:
    return list(e[::2])


@dataclass
class OneZeroVerdict:
    passed: bool
    points: int
    sample_bound: int
    h1_residuals_nonzero: int = 0
    h2_residuals_nonzero: int = 0
    max_abs_residual: int = 0
    failures: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "kind": "one_zero_check", **asdict(self)}


def check_101_impossible(sample_bound: int) -> OneZeroVerdict:
    """Check that no sequence has Hankel transform 1, 0, 1, ...

    A transform starting 1, 0 forces a = 1, beta, beta^2, delta, eps; then
    h_2 = -(delta - beta^3)^2 <= 0 for every real choice, so h_2 = 1 is
    impossible. The identity is checked on the integer cube
    [-bound, bound]^3; both sides have degree <= 6 in each variable, so
    agreement on 7 or more points per axis (bound >= 3) makes it a
    polynomial identity.
    """
    if sample_bound < 2:
        raise ValueError("sample_bound must be at least 2")
    rng = range(-sample_bound, sample_bound + 1)
    v = OneZeroVerdict(passed=True, points=0, sample_bound=sample_bound)
    for beta, delta, eps in product(rng, rng, rng):
        a = [1, beta, beta * beta, delta, eps]
        h1 = det_exact(hankel_matrix(a, 1))
        h2 = det_exact(hankel_matrix(a, 2))
        r2 = h2 + (delta - beta**3) ** 2
        v.points += 1
        if h1:
            v.h1_residuals_nonzero += 1
        if r2:
            v.h2_residuals_nonzero += 1
        v.max_abs_residual = max(v.max_abs_residual, abs(h1), abs(r2))
        if (h1 or r2) and len(v.failures) < 10:
            v.failures.append({"beta": beta, "delta": delta, "eps": eps, "h1": h1, "h2": h2})
    v.passed = v.h1_residuals_nonzero == 0 and v.h2_residuals_nonzero == 0
    return v
