"""Hankel matrices, exact determinants and Hankel transforms."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InsufficientTerms, InternalExactnessViolation

SquareMatrix = list[list[int]]


@dataclass(frozen=True)
class HankelResult:
    shift: int
    values: tuple[int, ...]
    support: tuple[int, ...] = field(init=False)
    in_unit_set: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "support", tuple(i for i, h in enumerate(self.values) if h))
        object.__setattr__(self, "in_unit_set", all(h in (-1, 0, 1) for h in self.values))

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def to_dict(self) -> dict:
        return {
            "shift": self.shift,
            "values": list(self.values),
            "support": list(self.support),
            "in_unit_set": self.in_unit_set,
        }


def hankel_matrix(a: Sequence[int], n: int, shift: int = 0) -> SquareMatrix:
    """(n+1)x(n+1) matrix with entry (i, j) = a[i + j + shift]."""
    if n < 0 or shift < 0:
        raise ValueError("n and shift must be non-negative")
    if len(a) < 2 * n + 1 + shift:
        raise InsufficientTerms(
            f"order-{n} Hankel matrix at shift {shift} needs {2 * n + 1 + shift} terms, got {len(a)}"
        )
    return [[a[i + j + shift] for j in range(n + 1)] for i in range(n + 1)]


def det_exact(m: SquareMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination with row swaps."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    m = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                q, r = divmod(row_i[j] * pivot - lead * row_k[j], prev)
                if r:
                    raise InternalExactnessViolation(f"inexact division at step {k}")
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def hankel_transform(a: Sequence[int], shift: int = 0) -> HankelResult:
    """h_n = det(a_{i+j+shift}) for every n the prefix supports."""
    top = (len(a) - 1 - shift) // 2
    if len(a) - 1 - shift < 0:
        raise InsufficientTerms(f"{len(a)} terms leave nothing at shift {shift}")
    values = [det_exact(hankel_matrix(a, n, shift)) for n in range(top + 1)]
    return HankelResult(shift, tuple(values))


def prepend(a: Sequence[int], prefix: Sequence[int]) -> list[int]:
    return list(prefix) + list(a)
