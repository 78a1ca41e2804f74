"""Registry of named integer sequences, CF power rules, patterns and sign cycles.

Everything is generated offline from closed forms, recurrences, rational
generating functions or fixed-point equations. OEIS numbers are kept for
reference only.

    >>> named_terms("jacobsthal", 7)
    [0, 1, 1, 3, 5, 11, 21, 43]
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .contfrac import cf_expand
from .errors import HankelLabError, InexactDivision, UnknownName
from .series import X, Polynomial, PowerSeries, ps_fixed_point, ps_rational, ps_substitute_monomial

TERMS = "closed-form term rule"
RATIONAL = "rational g.f."
FIXED_POINT = "fixed-point g.f."
CF_POWERS = "CF power rule"
SIGN_CYCLE = "sign cycle"


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivision(f"{num} / {den} is not an integer")
    return q


def kronecker0(n: int) -> int:
    """0**n with 0**0 = 1."""
    return 1 if n == 0 else 0


def _pointwise(f):
    def terms(n, **params):
        return [f(k, **params) for k in range(n + 1)]

    return terms


def _with_prefix(prefix, f):
    return _pointwise(lambda k, **kw: prefix[k] if k < len(prefix) else f(k, **kw))


def _cycle(head, period):
    return _with_prefix(head, lambda k: period[(k - len(head)) % len(period)])


def _rational(num, den):
    return lambda n: list(ps_rational(num, den, n))


@dataclass(frozen=True)
class NamedRule:
    name: str
    kind: str
    description: str
    context: str
    terms: Callable[..., list[int]] = field(repr=False, compare=False)
    oeis: str = ""
    gf: tuple[Polynomial, Polynomial] | None = field(default=None, repr=False, compare=False)
    defaults: tuple[tuple[str, int], ...] = ()


def jacobsthal(n: int) -> int:
    return exact_div(2**n - (-1) ** n, 3)


def fibonacci_list(n: int) -> list[int]:
    out = [0, 1]
    while len(out) < n + 1:
        out.append(out[-1] + out[-2])
    return out[: n + 1]


def motzkin_list(n: int) -> list[int]:
    m = [1]
    while len(m) < n + 1:
        k = len(m) - 1
        m.append(m[k] + sum(m[i] * m[k - 1 - i] for i in range(k)))
    return m[: n + 1]


def catalan_fixed_point(order: int) -> PowerSeries:
    """c = 1 + x c^2."""
    return ps_fixed_point(lambda c: 1 + X * c * c, order)


def motzkin_fixed_point(order: int) -> PowerSeries:
    """u = 1/(1 - x/(1 - x/(1 - x^2 u)))."""
    return ps_fixed_point(lambda u: (1 - X * (1 - X * (1 - X**2 * u).inverse()).inverse()).inverse(), order)


def pentagonal_power(n: int) -> int:
    return exact_div(6 * n * n + 6 * n + 1 - (2 * n + 1) * (-1) ** n, 16) + kronecker0(n)


def a028724(n: int) -> int:
    return exact_div(((n + 1) // 2) * ((n + 2) // 2) * ((n + 3) // 2), 2)


def doubled_odd_pattern(n: int) -> int:
    return exact_div(2 * n * n + 6 * n + 1 + (2 * n - 1) * (-1) ** n, 8)


def _a054391(n: int) -> list[int]:
    u = motzkin_fixed_point(n)
    return list((1 - X * (1 - X * u).inverse()).inverse())


_rules = [
    # plain sequences
    NamedRule("jacobsthal", TERMS, "J_n = (2^n - (-1)^n)/3", "Jacobsthal-indexed pattern",
              _pointwise(jacobsthal), "A001045", (Polynomial([0, 1]), Polynomial([1, -1, -2]))),
    NamedRule("catalan", TERMS, "C_n = binom(2n, n)/(n+1)", "all-ones transform, pattern 0,1,1,2,2,...",
              _pointwise(lambda n: exact_div(comb(2 * n, n), n + 1)), "A000108"),
    NamedRule("motzkin", TERMS, "M_{n+1} = M_n + sum_k M_k M_{n-1-k}", "all-ones transform, pattern 0,1,2,2,3,4,4,...",
              motzkin_list, "A001006"),
    NamedRule("fibonacci", TERMS, "F_n, F_0 = 0, F_1 = 1", "Fibonacci-distributed pattern",
              fibonacci_list, "A000045", (Polynomial([0, 1]), Polynomial([1, -1, -1]))),
    NamedRule("triangular", TERMS, "binom(n+1, 2)", "triangular-number pattern",
              _pointwise(lambda n: comb(n + 1, 2)), "A000217", (Polynomial([0, 1]), Polynomial([1, -1]) ** 3)),
    NamedRule("a054391", FIXED_POINT, "1/(1 - x/(1 - x u)), u = 1/(1 - x/(1 - x/(1 - x^2 u)))",
              "pattern-avoiding permutations", _a054391, "A054391"),

    # Hankel pattern sequences
    NamedRule("jacobsthal_pattern", TERMS, "0, J_2, J_3, J_4, ... (Jacobsthal without the repeated 1)",
              "Jacobsthal-indexed pattern, duplicate dropped",
              _with_prefix([0], lambda n: jacobsthal(n + 1))),
    NamedRule("a028724_pattern", TERMS, "floor((n+1)/2) floor((n+2)/2) floor((n+3)/2) / 2",
              "pattern of the pentagonal CF powers", _pointwise(a028724), "A028724"),
    NamedRule("doubled_odd_pattern", TERMS, "(2n^2 + 6n + 1 + (2n-1)(-1)^n)/8",
              "pattern of the CF powers 1,1,3,3,5,5,...", _pointwise(doubled_odd_pattern)),
    NamedRule("shifted_tripled_odd_pattern", RATIONAL, "x(2 + x - 2x^3 + x^4)/((1-x)^3 (1 + 2x + 2x^2 + x^3))",
              "pattern of the CF powers 1,2,3,3,3,5,5,5,...",
              _rational(Polynomial([0, 2, 1, 0, -2, 1]), Polynomial([1, -1]) ** 3 * Polynomial([1, 2, 2, 1])),
              gf=(Polynomial([0, 2, 1, 0, -2, 1]), Polynomial([1, -1]) ** 3 * Polynomial([1, 2, 2, 1]))),
    NamedRule("gap_pattern", TERMS, "0, r, r+1, r+2, ...", "gap transform pattern",
              _pointwise(lambda n, r: 0 if n == 0 else r + n - 1), defaults=(("r", 3),)),

    # CF power sequences
    NamedRule("catalan_cf_powers", CF_POWERS, "1, 1, 1, ...", "Catalan numbers",
              _pointwise(lambda n: 1)),
    NamedRule("jacobsthal_cf_powers", CF_POWERS, "1, 1, 3, 2^(n-1) for n >= 3",
              "Jacobsthal pattern, duplicate dropped", _with_prefix([1, 1, 3], lambda n: 2 ** (n - 1))),
    NamedRule("jacobsthal_dup_cf_powers", CF_POWERS, "1, 1, 1, 2^(n-2) for n >= 3",
              "Jacobsthal pattern with the repeated 1", _with_prefix([1, 1, 1], lambda n: 2 ** (n - 2))),
    NamedRule("twos_cf_powers", CF_POWERS, "1, 1, 2, 2, 2, ...", "g.f. 1/(1 - x/(1 - x c(x^2)))",
              _with_prefix([1, 1], lambda n: 2)),
    NamedRule("threes_cf_powers", CF_POWERS, "1, 1, 3, 3, 3, ...", "g.f. 1/(1 - x/(1 - x c(x^3)))",
              _with_prefix([1, 1], lambda n: 3)),
    NamedRule("extended_odd_cf_powers", CF_POWERS, "1, 1, 3, 5, 7, ...", "triangular-number pattern",
              _with_prefix([1], lambda n: 2 * n - 1)),
    NamedRule("half_floor_cf_powers", CF_POWERS, "floor((n+1)/2) + 0^n", "pattern 0,1,1,3,3,6,6,...",
              _pointwise(lambda n: (n + 1) // 2 + kronecker0(n))),
    NamedRule("odd_cf_powers", CF_POWERS, "1, 3, 5, 7, ...", "Dyck paths by area",
              _pointwise(lambda n: 2 * n + 1), "A143951"),
    NamedRule("doubled_odd_cf_powers", CF_POWERS, "1, 1, 3, 3, 5, 5, ...", "odd powers, each twice",
              _pointwise(lambda n: 2 * (n // 2) + 1)),
    NamedRule("tripled_odd_cf_powers", CF_POWERS, "1, 1, 1, 3, 3, 3, 5, 5, 5, ...", "odd powers, each three times",
              _pointwise(lambda n: 2 * (n // 3) + 1)),
    NamedRule("shifted_tripled_odd_cf_powers", CF_POWERS, "1, 2, 3, 3, 3, 5, 5, 5, 7, ...",
              "variant of the tripled odd powers", _with_prefix([1, 2], lambda n: 2 * ((n + 1) // 3) + 1)),
    NamedRule("a054391_cf_powers", CF_POWERS, "1, 1, 1, 1, then 2, 1, 1 repeating", "pattern-avoiding permutations",
              _cycle([1, 1, 1, 1], [2, 1, 1])),
    NamedRule("motzkin_cf_powers", CF_POWERS, "1, 1, 2 repeating", "Motzkin numbers",
              _cycle([], [1, 1, 2])),
    NamedRule("pentagonal_cf_powers", CF_POWERS, "(6n^2 + 6n + 1)/16 - (2n+1)(-1)^n/16 + 0^n",
              "Euler pentagonal numbers", _pointwise(pentagonal_power), "A001318"),
    NamedRule("fib_cf_powers", CF_POWERS, "1, 1, then F_{n-1}", "Fibonacci-distributed pattern",
              _with_prefix([1, 1], lambda n: fibonacci_list(n - 1)[-1])),
    NamedRule("gap_template", CF_POWERS, "1, r, r+1, 2, 2, 2, ...", "gap transform",
              _pointwise(lambda n, r: [1, r, r + 1][n] if n < 3 else 2), defaults=(("r", 3),)),

    # sign cycles, +1/-1 per level
    NamedRule("all_minus", SIGN_CYCLE, "-, -, -, ...", "default sign choice", _pointwise(lambda n: -1)),
    NamedRule("pentagonal_signs", SIGN_CYCLE, "-, -, +, + repeating", "alternative signs for the pentagonal powers",
              _cycle([], [-1, -1, 1, 1])),
]

REGISTRY: dict[str, NamedRule] = {}
for _r in _rules:
    assert _r.name not in REGISTRY, _r.name
    REGISTRY[_r.name] = _r
del _r


def get(name: str) -> NamedRule:
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownName(f"unknown catalog entry {name!r}") from None


def named_terms(name: str, n: int, **params) -> list[int]:
    """Terms 0..n of a registered entry."""
    entry = get(name)
    if n < 0:
        raise ValueError("n must be non-negative")
    merged = dict(entry.defaults)
    unknown = set(params) - set(merged)
    if unknown:
        raise HankelLabError(f"{name} takes no parameter(s) {sorted(unknown)}")
    merged.update(params)
    return list(entry.terms(n, **merged))


def rule(name: str, **params) -> Callable[[int], int]:
    """The entry as an unbounded k -> term function (cached, grown by doubling)."""
    get(name)
    cache: list[int] = []

    def term(k: int) -> int:
        if k >= len(cache):
            cache[:] = named_terms(name, max(2 * k, 16), **params)
        return cache[k]

    term.__name__ = name
    return term


# generating-function identities: CF power rule vs an independent expansion


def _catalan_ident(n):
    return list(catalan_fixed_point(n))


def _dilated_catalan_ident(m):
    def expand(n):
        cm = ps_substitute_monomial(catalan_fixed_point(n), m, n)
        return list((1 - X * (1 - X * cm).inverse()).inverse())

    return expand


# each identity lists every independent expansion the CF must agree with
IDENTITIES: dict[str, tuple[str, str, tuple[Callable[[int], list[int]], ...]]] = {
    "catalan": ("catalan_cf_powers", "c = 1 + x c^2; binom(2n, n)/(n+1)",
                (_catalan_ident, REGISTRY["catalan"].terms)),
    "twos": ("twos_cf_powers", "1/(1 - x/(1 - x c(x^2)))", (_dilated_catalan_ident(2),)),
    "threes": ("threes_cf_powers", "1/(1 - x/(1 - x c(x^3)))", (_dilated_catalan_ident(3),)),
    "motzkin": ("motzkin_cf_powers", "Motzkin recurrence; u = 1/(1 - x/(1 - x/(1 - x^2 u)))",
                (motzkin_list, lambda n: list(motzkin_fixed_point(n)))),
    "a054391": ("a054391_cf_powers", "1/(1 - x/(1 - x u)), u the Motzkin fixed point", (_a054391,)),
}


def gf_identity_check(name: str, n: int) -> bool:
    if name not in IDENTITIES:
        raise UnknownName(f"no generating-function identity named {name!r}")
    powers, _, expansions = IDENTITIES[name]
    cf = cf_expand(rule(powers), n)
    return all(cf == list(expand(n)) for expand in expansions)


@dataclass(frozen=True)
class Erratum:
    name: str
    printed: str
    finding: str


ERRATA = (
    Erratum("inverse_gf_relation", "P(x) = (1 - x^2) B(x) - 1",
            "contradicts B = (P - 1)/(1 - x^2); P = (1 - x^2) B + 1 is used"),
    Erratum("odd_powers_pattern_formula", "b_n = (n^2 + 3n + 1 + (-1)^n)/2",
            "does not give 0, 3, 5, 10, 14, ...; the pattern is derived from the power sum instead"),
    Erratum("tripled_odd_pattern_listing", "b = 0, 1, 1, 3, 3, 5, 6, 8, 9, 12, 13, 16 and g.f. x(1 + x^2 - x^3)/((1-x)^3 (1 + 2x + 2x^2 + x^3))",
            "the power sum gives 0, 1, 1, 4, 4, 7, 9, 12, 14, ..., which matches the listed transform's support"),
    Erratum("eta_convolution_display", "e_n = sum (-1)^(n-k) h_n h_(n-k)",
            "read as the convolution sum h_k (-1)^(n-k) h_(n-k); only that reproduces the e_2n values"),
    Erratum("one_zero_determinant", "h_2 = beta^6 + 2 beta^3 delta - delta^2",
            "the determinant is -(delta - beta^3)^2; the conclusion delta = beta^3 +- i is unaffected"),
)
