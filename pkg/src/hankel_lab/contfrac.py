"""Continued fractions with monomial numerators.

The fraction described by powers ``p_0, p_1, ...`` and signs ``s_0, s_1, ...`` is

    1 / (1 + s_0 x^p_0 / (1 + s_1 x^p_1 / (1 + ...)))

so level k has denominator ``1 + s_k x^{p_k} u_{k+1}``. A sign of -1 gives the
familiar ``1 - x^p / ...`` shape and is the default everywhere.

Powers are either a finite list or a rule ``k -> p_k``. A finite list that
runs out before the truncation depth is read as the terminating fraction
whose innermost tail is 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Callable, Sequence, Union

from .errors import InvalidPower
from .series import PowerSeries

PowerRule = Union[Sequence[int], Callable[[int], int]]


def power_at(powers: PowerRule, k: int) -> int | None:
    """p_k, or None when a finite list has no entry k."""
    if callable(powers):
        return powers(k)
    return powers[k] if k < len(powers) else None


def take(powers: PowerRule, n: int) -> list[int]:
    out = []
    for k in range(n):
        p = power_at(powers, k)
        if p is None:
            break
        out.append(p)
    return out


def parse_signs(text: str) -> tuple[int, ...]:
    """'-' -> (-1,), '--++' -> (-1, -1, 1, 1)."""
    table = {"-": -1, "+": 1}
    text = text.strip()
    if not text or any(ch not in table for ch in text):
        raise ValueError(f"sign pattern must be made of '+' and '-', got {text!r}")
    return tuple(table[ch] for ch in text)


@dataclass(frozen=True)
class CFSpec:
    """Powers plus signs; ``signs`` repeats as a cycle unless ``cyclic`` is off,
    in which case levels past the end of ``signs`` use -1."""

    powers: PowerRule
    signs: tuple[int, ...] = (-1,)
    cyclic: bool = True

    def __post_init__(self):
        if not self.signs:
            object.__setattr__(self, "signs", (-1,))
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1 or -1, got {self.signs}")
        if not callable(self.powers):
            object.__setattr__(self, "powers", tuple(int(p) for p in self.powers))

    def power(self, k: int) -> int | None:
        return power_at(self.powers, k)

    def sign(self, k: int) -> int:
        if self.cyclic:
            return self.signs[k % len(self.signs)]
        return self.signs[k] if k < len(self.signs) else -1


def required_depth(powers: PowerRule, order: int) -> int:
    """Smallest L with p_0 + ... + p_{L-1} > order.

    Anything hung below level L shifts the expansion only from degree
    p_0 + ... + p_{L-1} on, so a_0..a_order is already fixed. For a finite
    list that is too short the whole list is the depth.
    """
    total = 0
    for k in count():
        if total > order:
            return k
        p = power_at(powers, k)
        if p is None:
            return k
        if p < 1:
            raise InvalidPower(f"p_{k} = {p} < 1")
        total += p


def cf_expand(spec: CFSpec | PowerRule, order: int, depth: int | None = None) -> list[int]:
    """a_0..a_order of the continued fraction, built bottom-up from tail 1.

    ``depth`` overrides the number of levels (used to check that extra levels
    change nothing); it is clipped to the length of a finite power list.
    """
    if not isinstance(spec, CFSpec):
        spec = CFSpec(spec)
    if order < 0:
        raise ValueError("order must be non-negative")
    if depth is None:
        depth = required_depth(spec.powers, order)
    levels = []
    for k in range(depth):
        p = spec.power(k)
        if p is None:
            break
        if p < 1:
            raise InvalidPower(f"p_{k} = {p} < 1")
        levels.append((p, spec.sign(k)))

    u = [1] + [0] * order
    for p, s in reversed(levels):
        # invert 1 + s x^p u; only coefficients at degree >= p contribute
        g = [1] + [0] * order
        tail = [s * c for c in u]
        nz = [j for j in range(order + 1 - p) if tail[j]]
        for n in range(p, order + 1):
            acc = 0
            for j in nz:
                if j > n - p:
                    break
                acc += tail[j] * g[n - p - j]
            g[n] = -acc
        u = g
    return u


def cf_series(spec: CFSpec | PowerRule, order: int) -> PowerSeries:
    return PowerSeries(cf_expand(spec, order), order)
