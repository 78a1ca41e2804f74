"""Truncated formal power series over the integers.

A :class:`PowerSeries` knows its coefficients up to and including ``x**order``.
A :class:`Polynomial` is exact (known to every order) and can be mixed freely
with series; the result then carries the series' order.

Only series whose constant term is a unit (+1 or -1) are ever inverted, so
every coefficient stays an exact integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

from .errors import NoConvergence, NonUnitConstantTerm, TruncationError


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def coeff(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        d = max(self.degree, other.degree)
        return all(self.coeff(i) == other.coeff(i) for i in range(d + 1))

    def __hash__(self):
        return hash(self.coeffs[: self.degree + 1])

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial([other])
        if isinstance(other, PowerSeries):
            return other + self
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        if isinstance(other, PowerSeries):
            return other * self
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def to_series(self, order: int) -> PowerSeries:
        return PowerSeries([self.coeff(i) for i in range(order + 1)], order)


X = Polynomial([0, 1])


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[int, ...]
    order: int

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        coeffs = tuple(int(c) for c in coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        elif len(coeffs) < order + 1:
            coeffs = coeffs + (0,) * (order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls([], order)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries(_coeffs(self, order), order)

    @property
    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None if zero to this order."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __add__(self, other):
        return ps_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        return ps_add(self, -_lift(other))

    def __rsub__(self, other):
        return ps_add(-self, other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PowerSeries((c * other for c in self.coeffs), self.order)
        if not isinstance(other, (PowerSeries, Polynomial)):
            return NotImplemented
        return ps_mul(self, other, _common_order(self, other))

    __rmul__ = __mul__

    def inverse(self) -> PowerSeries:
        return ps_inverse(self, self.order)

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)}, order={self.order})"


SeriesLike = Union[PowerSeries, Polynomial, int]


def _lift(f: SeriesLike):
    return Polynomial([f]) if isinstance(f, int) else f


def _coeffs(f: SeriesLike, order: int) -> list[int]:
    """Coefficients 0..order of f; refuses to read past a series' known order."""
    f = _lift(f)
    if isinstance(f, Polynomial):
        return [f.coeff(i) for i in range(order + 1)]
    if f.order < order:
        raise TruncationError(f"series known to x^{f.order}, needed x^{order}")
    return list(f.coeffs[: order + 1])


def _common_order(*fs: SeriesLike) -> int:
    orders = [f.order for f in fs if isinstance(f, PowerSeries)]
    if not orders:
        raise TruncationError("no truncation order: give an explicit order")
    return min(orders)


def ps_add(f: SeriesLike, g: SeriesLike) -> PowerSeries:
    n = _common_order(_lift(f), _lift(g))
    return PowerSeries((a + b for a, b in zip(_coeffs(f, n), _coeffs(g, n))), n)


def ps_mul(f: SeriesLike, g: SeriesLike, order: int) -> PowerSeries:
    fc = _coeffs(f, order)
    gc = _coeffs(g, order)
    out = [0] * (order + 1)
    for i, a in enumerate(fc):
        if a:
            for j in range(order + 1 - i):
                out[i + j] += a * gc[j]
    return PowerSeries(out, order)


def ps_inverse(f: SeriesLike, order: int) -> PowerSeries:
    fc = _coeffs(f, order)
    f0 = fc[0]
    if f0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {f0} is not +1 or -1")
    # f0 is its own inverse
    g = [f0] + [0] * order
    nz = [k for k in range(1, order + 1) if fc[k]]
    for n in range(1, order + 1):
        s = 0
        for k in nz:
            if k > n:
                break
            s += fc[k] * g[n - k]
        g[n] = -f0 * s
    return PowerSeries(g, order)


def ps_substitute_monomial(f: SeriesLike, m: int, order: int) -> PowerSeries:
    """f(x**m) mod x**(order+1)."""
    if m < 1:
        raise ValueError("substitution exponent must be >= 1")
    fc = _coeffs(f, order // m)
    out = [0] * (order + 1)
    for k, c in enumerate(fc):
        out[k * m] = c
    return PowerSeries(out, order)


def ps_rational(num: SeriesLike, den: SeriesLike, order: int) -> PowerSeries:
    dc = _coeffs(den, order)
    if dc[0] not in (1, -1):
        raise NonUnitConstantTerm(f"denominator constant term {dc[0]} is not +1 or -1")
    return ps_mul(num, ps_inverse(den, order), order)


def ps_fixed_point(phi: Callable[[PowerSeries], SeriesLike], order: int) -> PowerSeries:
    """Solve u = phi(u) mod x**(order+1) by iteration from u = 1.

    ``phi`` must be a valuation contraction, so each pass fixes at least one
    more coefficient. The returned series satisfies ``phi(u) == u`` to the
    requested order; that check is what ends the loop.
    """
    u = PowerSeries.one(order)
    # N+1 passes pin every coefficient, one more confirms the residual is zero
    for _ in range(order + 2):
        nxt = phi(u)
        nxt = nxt.truncate(order) if isinstance(nxt, PowerSeries) else _lift(nxt).to_series(order)
        if nxt == u:
            return u
        u = nxt
    raise NoConvergence(f"iterate not stable mod x^{order + 1}; phi is not a contraction")


def series_from_terms(terms: Sequence[int], order: int | None = None) -> PowerSeries:
    if order is None:
        order = len(terms) - 1
    if len(terms) < order + 1:
        raise TruncationError(f"{len(terms)} terms cannot define a series to x^{order}")
    return PowerSeries(terms[: order + 1], order)
