"""The published worked examples as executable criteria.

Each criterion returns a list of failure messages; an empty list is a pass.
Listed values are frozen here so the run is hermetic.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import permutations
from typing import Callable

from . import catalog
from .analysis import (
    binomial_transform,
    check_101_impossible,
    check_conjecture,
    eta_convolution,
    even_subsequence,
    gf_transform,
)
from .contfrac import CFSpec, cf_expand, required_depth
from .hankel import det_exact, hankel_transform, prepend
from .pattern import b_to_p, gf_relation_check, multiplicities, p_to_b

JACOBSTHAL_A = [1, 1, 2, 4, 8, 17, 36, 76, 161, 342, 726, 1541, 3272, 6948, 14753]
JACOBSTHAL_DUP_A = [1, 1, 2, 5, 13, 35, 95, 259, 707, 1932, 5281, 14438, 39475, 107933, 295115, 806922, 2206342]
JACOBSTHAL_H = [1, 1, 0, -1, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]
TWOS_A = [1, 1, 2, 4, 9, 20, 46, 105, 243, 560, 1299, 3006]
THREES_A = [1, 1, 2, 4, 8, 17, 36, 76, 162, 345, 734, 1565, 3336, 7109, 15158, 32318, 68898]
THREES_H = [1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0]
EXT_ODD_A = [1, 1, 2, 4, 8, 17, 36, 76, 161, 341, 723, 1533, 3250, 6891, 14611, 30980, 65688, 139281]
EXT_ODD_H = [1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0]
EXT_ODD_E2 = [1, -1, 2, 1, 0, 2, 1, 0, 0, 2, 1, 2]
HALF_FLOOR_A = [1, 1, 2, 5, 13, 35, 95, 260, 713, 1959, 5386, 14815, 40759, 112151, 308609, 849240, 2337009, 6431246]
HALF_FLOOR_H = [1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0]
HALF_FLOOR_B = [0, 1, 1, 3, 3, 6, 6, 10, 10, 15, 15]
ODD_H = [1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1]
ODD_B = [0, 3, 5, 10, 14, 21, 27, 36, 44, 55, 65]
DOUBLED_A = [1, 1, 2, 4, 8, 17, 36, 76, 162, 345, 734, 1564, 3332]
DOUBLED_H = [1, 1, 0, -1, -1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 1, 1, 0, 0]
DOUBLED_B = [0, 1, 3, 4, 8, 9, 15, 16, 24, 25, 35]
TRIPLED_A = [1, 1, 2, 5, 13, 34, 90, 239, 635, 1689, 4494, 11958, 31823, 84692, 225396]
TRIPLED_H = [1, 1, 0, 0, -1, 0, 0, 1, 0, -1, 0, 0, 1, 0, -1, 0]
TRIPLED_LISTED_B = [0, 1, 1, 3, 3, 5, 6, 8, 9, 12, 13, 16]
SHIFTED_TRIPLED_H = [1, 0, -1, -1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1]
SHIFTED_TRIPLED_B = [0, 2, 3, 5, 6, 10, 11, 15, 18, 22, 25, 31, 34, 40, 45]
A054391_A = [1, 1, 2, 5, 14, 41, 123, 374, 1147, 3538, 10958, 34042, 105997]
A054391_B = [0, 1, 1, 2, 3, 3, 4, 5, 5, 6, 7, 7, 8, 9, 9, 10, 11, 11, 12, 13, 13]
MOTZKIN_B = [0, 1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 10, 10, 11, 12, 12, 13, 14]
PENTAGONAL_P = [1, 1, 2, 5, 7, 12, 15, 22, 26, 35, 40]
PENTAGONAL_B = [0, 1, 2, 6, 9, 18, 24, 40, 50, 75, 90]
PENTAGONAL_A = [1, 1, 2, 4, 9, 20, 45, 101, 227, 511, 1150, 2589, 5828, 13120, 29536, 66492, 149690]
PENTAGONAL_H = [1, 1, 1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0]
PENTAGONAL_SIGNED_A = [1, 1, 2, 4, 7, 12, 21, 37, 65, 115, 204, 361, 638, 1128, 1994, 3524, 6230]
PENTAGONAL_SIGNED_H = [1, 1, -1, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]
FIB_P = [1, 1, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
FIB_B = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
FIB_A = [1, 1, 2, 5, 14, 41, 123, 373, 1137, 3475, 10634, 32562, 99738, 305546, 936108, 2868084]
FIB_H = [1, 1, 1, 1, 0, -1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0]
GAP_A = [1, 1, 1, 1, 2, 3, 4, 6, 10, 15, 23, 36, 58, 90, 145, 230, 377, 601, 1000]
GAP_SHIFT_H = {
    1: [1, 0, -1, 0, 1, 0, -1, 0, 1, 0],
    2: [1, 1, -1, -1, -2, -2, -3, -3, -4, -4],
    3: [1, -1, -1, 1, 4, -1, -9, 1, 16],
}
GAP_PREPEND_H = [1, 0, 0, 0, 0, 1, 1, 2, 2, 3, 3]


class _Check:
    """Collects failure messages."""

    def __init__(self):
        self.failures: list[str] = []

    def eq(self, label, got, want):
        got, want = list(got), list(want)
        if got != want:
            self.failures.append(f"{label}: got {got}, want {want}")

    def true(self, label, cond):
        if not cond:
            self.failures.append(label)


def _cf(name: str, n: int, signs=(-1,), **params) -> list[int]:
    return cf_expand(CFSpec(catalog.rule(name, **params), signs), n)


def _h(a) -> list[int]:
    return list(hankel_transform(a).values)


def c01_jacobsthal(c: _Check):
    c.eq("p from b", b_to_p([0, 1, 3, 5, 11, 21]), [1, 1, 3, 4, 8, 16])
    c.eq("rule p from rule b", b_to_p(catalog.named_terms("jacobsthal_pattern", 12)),
         catalog.named_terms("jacobsthal_cf_powers", 12))
    a = _cf("jacobsthal_cf_powers", 46)
    c.eq("a_0..a_14", a[:15], JACOBSTHAL_A)
    c.eq("h_0..h_22", _h(a)[:23], JACOBSTHAL_H)


def c02_jacobsthal_dup(c: _Check):
    c.eq("p from b", b_to_p([0, 1, 1, 3, 5, 11]), [1, 1, 1, 2, 4, 8])
    a = _cf("jacobsthal_dup_cf_powers", 46)
    c.eq("a_0..a_16", a[:17], JACOBSTHAL_DUP_A)
    c.eq("h_0..h_22", _h(a)[:23], JACOBSTHAL_H)
    report = check_conjecture(pattern=catalog.rule("jacobsthal"), order=22)
    c.true(f"conjecture check {report.verdict}", report.passed)
    c.true("multiplicity 2 at value 1", (1, 2) in report.multiplicities)


def c03_catalan(c: _Check):
    a = _cf("catalan_cf_powers", 28)
    c.eq("Catalan terms", a, catalog.named_terms("catalan", 28))
    c.eq("h_0..h_14", _h(a), [1] * 15)
    c.eq("pattern", p_to_b([1] * 11), [(n + 1) // 2 for n in range(11)])


def c04_twos(c: _Check):
    a = _cf("twos_cf_powers", 28)
    c.eq("a_0..a_11", a[:12], TWOS_A)
    c.eq("h_0..h_14", _h(a), [1] * 15)
    c.eq("pattern", p_to_b(catalog.named_terms("twos_cf_powers", 10)), range(11))
    c.true("g.f. identity", catalog.gf_identity_check("twos", 28))


def c05_threes(c: _Check):
    a = _cf("threes_cf_powers", 23)
    c.eq("a_0..a_16", a[:17], THREES_A)
    c.eq("h_0..h_11", _h(a), THREES_H)
    c.true("g.f. identity", catalog.gf_identity_check("threes", 23))


def c06_extended_odd(c: _Check):
    a = _cf("extended_odd_cf_powers", 44)
    c.eq("a_0..a_17", a[:18], EXT_ODD_A)
    h = _h(a)
    c.eq("h_0..h_22", h, EXT_ODD_H)
    c.eq("pattern", p_to_b(catalog.named_terms("extended_odd_cf_powers", 12)), catalog.named_terms("triangular", 12))
    c.eq("e_2n", even_subsequence(eta_convolution(h)), EXT_ODD_E2)


def c07_half_floor(c: _Check):
    a = _cf("half_floor_cf_powers", 36)
    c.eq("a_0..a_17", a[:18], HALF_FLOOR_A)
    h = hankel_transform(a)
    c.eq("h_0..h_18", h.values, HALF_FLOOR_H)
    b = p_to_b(catalog.named_terms("half_floor_cf_powers", 10))
    c.eq("pattern", b, HALF_FLOOR_B)
    c.eq("support", h.support, [0, 1, 3, 6, 10, 15])
    window = [v for v in p_to_b(catalog.named_terms("half_floor_cf_powers", 40)) if v <= 18]
    c.eq("multiplicities", multiplicities(window), [(0, 1), (1, 2), (3, 2), (6, 2), (10, 2), (15, 2)])


def c08_odd_variations(c: _Check):
    a = _cf("odd_cf_powers", 42)
    c.eq("(a) h_0..h_21", _h(a)[:22], ODD_H)
    c.eq("(a) pattern", p_to_b(catalog.named_terms("odd_cf_powers", 10)), ODD_B)

    a = _cf("doubled_odd_cf_powers", 36)
    c.eq("(b) a_0..a_12", a[:13], DOUBLED_A)
    c.eq("(b) h_0..h_18", _h(a), DOUBLED_H)
    b = p_to_b(catalog.named_terms("doubled_odd_cf_powers", 10))
    c.eq("(b) pattern", b, DOUBLED_B)
    c.eq("(b) closed form", catalog.named_terms("doubled_odd_pattern", 10), b)

    a = _cf("tripled_odd_cf_powers", 30)
    c.eq("(c) a_0..a_14", a[:15], TRIPLED_A)
    h = hankel_transform(a)
    c.eq("(c) h_0..h_15", h.values, TRIPLED_H)
    derived = p_to_b(catalog.named_terms("tripled_odd_cf_powers", 20))
    c.eq("(c) support vs derived pattern", h.support, sorted({v for v in derived if v <= 15}))
    c.eq("(c) support", h.support, [0, 1, 4, 7, 9, 12, 14])
    c.true("(c) listed pattern differs from the derived one", derived[:12] != TRIPLED_LISTED_B)

    a = _cf("shifted_tripled_odd_cf_powers", 30)
    c.eq("(d) h_0..h_15", _h(a), SHIFTED_TRIPLED_H)
    c.eq("(d) rational g.f.", catalog.named_terms("shifted_tripled_odd_pattern", 14), SHIFTED_TRIPLED_B)
    c.eq("(d) pattern", p_to_b(catalog.named_terms("shifted_tripled_odd_cf_powers", 14)), SHIFTED_TRIPLED_B)


def c09_a054391(c: _Check):
    a = _cf("a054391_cf_powers", 28)
    c.eq("a_0..a_12", a[:13], A054391_A)
    c.eq("h_0..h_14", _h(a), [1] * 15)
    b = p_to_b(catalog.named_terms("a054391_cf_powers", 20))
    c.eq("pattern", b, A054391_B)
    c.eq("multiplicities", [m for _, m in multiplicities(b)][:8], [1, 2, 1, 2, 1, 2, 1, 2])
    c.true("fixed-point identity", catalog.gf_identity_check("a054391", 28))


def c10_motzkin(c: _Check):
    a = _cf("motzkin_cf_powers", 28)
    c.eq("Motzkin terms", a, catalog.motzkin_list(28))
    c.eq("h_0..h_14", _h(a), [1] * 15)
    c.eq("pattern", p_to_b(catalog.named_terms("motzkin_cf_powers", 20)), MOTZKIN_B)
    c.true("g.f. identity", catalog.gf_identity_check("motzkin", 28))


def c11_pentagonal(c: _Check):
    c.eq("powers", catalog.named_terms("pentagonal_cf_powers", 10), PENTAGONAL_P)
    c.eq("pattern", p_to_b(PENTAGONAL_P), PENTAGONAL_B)
    c.eq("A028724", catalog.named_terms("a028724_pattern", 10), PENTAGONAL_B)
    a = _cf("pentagonal_cf_powers", 40)
    c.eq("a_0..a_16", a[:17], PENTAGONAL_A)
    c.eq("h_0..h_20", _h(a), PENTAGONAL_H)
    a = _cf("pentagonal_cf_powers", 40, signs=(-1, -1, 1, 1))
    c.eq("signed a_0..a_16", a[:17], PENTAGONAL_SIGNED_A)
    c.eq("signed h_0..h_20", _h(a), PENTAGONAL_SIGNED_H)


def c12_fibonacci(c: _Check):
    c.eq("powers", catalog.named_terms("fib_cf_powers", 12), FIB_P)
    c.eq("pattern", p_to_b(FIB_P)[:12], FIB_B)
    a = _cf("fib_cf_powers", 34)
    c.eq("a_0..a_15", a[:16], FIB_A)
    c.eq("h_0..h_17", _h(a), FIB_H)


def c13_gap(c: _Check):
    a = _cf("gap_template", 40)
    c.eq("a_0..a_18", a[:19], GAP_A)
    c.eq("h_0..h_20", _h(a), [1, 0, 0] + [-1] * 18)
    long = _cf("gap_template", 24)
    for shift, want in GAP_SHIFT_H.items():
        c.eq(f"shift {shift}", hankel_transform(long, shift).values[: len(want)], want)
    c.eq("prepend 1,1", hankel_transform(prepend(GAP_A[:19], [1, 1]), 0).values, GAP_PREPEND_H)
    for r in range(2, 7):
        c.eq(f"template r={r}", p_to_b(catalog.named_terms("gap_template", 12, r=r)),
             catalog.named_terms("gap_pattern", 12, r=r))


def c14_one_zero(c: _Check):
    v = check_101_impossible(5)
    c.true(f"identity failed at {v.failures}", v.passed)
    c.true("grid size", v.points == 11**3)


# property suites


def cofactor_det(m) -> int:
    """Leibniz expansion; independent oracle for small matrices."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
            if not term:
                break
        total += term
    return total


def catalog_sequences(n: int = 16) -> dict[str, list[int]]:
    """Every sequence the catalog defines, CF power rules expanded."""
    out = {}
    for name, entry in catalog.REGISTRY.items():
        if entry.kind == catalog.SIGN_CYCLE:
            continue
        if entry.kind == catalog.CF_POWERS:
            out[name + ":cf"] = _cf(name, n)
            if name == "pentagonal_cf_powers":
                out[name + ":cf:signed"] = _cf(name, n, signs=(-1, -1, 1, 1))
        else:
            out[name] = catalog.named_terms(name, n)
    return out


def c15_properties(c: _Check, seed: int = 20240601):
    rng = random.Random(seed)

    for _ in range(1000):
        p = [1] + [rng.randint(1, 6) for _ in range(rng.randint(0, 19))]
        b = p_to_b(p)
        # random p often give a decreasing b, which strict b_to_p rejects
        valid = all(b[i] >= b[i - 1] for i in range(1, len(b)))
        c.eq(f"p->b->p {p}", b_to_p(b, strict=valid), p)
        c.true(f"gf relation {p}", gf_relation_check(p, b, len(p) - 1))

    for _ in range(10_000):
        n = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        if det_exact(m) != cofactor_det(m):
            c.failures.append(f"det mismatch on {m}")

    for name, a in catalog_sequences(16).items():
        base = hankel_transform(a).values
        for r in (-2, -1, 1, 2):
            c.eq(f"{name} binomial r={r}", hankel_transform(binomial_transform(a, r)).values, base)
            if a[0]:
                c.eq(f"{name} g.f. r={r}", hankel_transform(gf_transform(a, r, 16)).values, base)

    for name, entry in catalog.REGISTRY.items():
        if entry.kind == catalog.CF_POWERS:
            powers = catalog.rule(name)
            L = required_depth(powers, 24)
            c.eq(f"depth stability {name}", cf_expand(powers, 24, depth=L + 2), cf_expand(powers, 24, depth=L))
    for _ in range(200):
        p = [rng.randint(1, 4) for _ in range(30)]
        signs = tuple(rng.choice((-1, 1)) for _ in range(rng.randint(1, 4)))
        n = rng.randint(0, 24)
        spec = CFSpec(p, signs)
        L = required_depth(p, n)
        c.eq(f"depth stability {p} {signs}", cf_expand(spec, n, depth=L + 2), cf_expand(spec, n, depth=L))


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    run: Callable[[_Check], None]


CRITERIA = [
    Criterion(1, "Jacobsthal pattern, duplicate dropped", c01_jacobsthal),
    Criterion(2, "Jacobsthal pattern with duplicate", c02_jacobsthal_dup),
    Criterion(3, "Catalan numbers", c03_catalan),
    Criterion(4, "powers 1,1,2,2,2,...", c04_twos),
    Criterion(5, "powers 1,1,3,3,3,...", c05_threes),
    Criterion(6, "triangular pattern and e_2n", c06_extended_odd),
    Criterion(7, "powers floor((n+1)/2) + 0^n", c07_half_floor),
    Criterion(8, "variations on 1,3,5,...", c08_odd_variations),
    Criterion(9, "A054391", c09_a054391),
    Criterion(10, "Motzkin numbers", c10_motzkin),
    Criterion(11, "pentagonal powers, both sign patterns", c11_pentagonal),
    Criterion(12, "Fibonacci pattern", c12_fibonacci),
    Criterion(13, "gap transform, shifts, prepend, template", c13_gap),
    Criterion(14, "1,0,1,0,... is not a Hankel transform", c14_one_zero),
    Criterion(15, "property suites", c15_properties),
]


@dataclass
class Outcome:
    criterion: Criterion
    failures: list[str]
    seconds: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.criterion.number:2d}. {self.criterion.title} ({self.seconds:.2f}s)"


def run_criterion(crit: Criterion) -> Outcome:
    check = _Check()
    t0 = time.perf_counter()
    try:
        crit.run(check)
    except Exception as exc:  # a crash is a failed criterion, not a crashed run
        check.failures.append(f"{type(exc).__name__}: {exc}")
    return Outcome(crit, check.failures, time.perf_counter() - t0)


def run_all(only: set[int] | None = None) -> list[Outcome]:
    return [run_criterion(c) for c in CRITERIA if only is None or c.number in only]
