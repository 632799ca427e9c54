"""Exact-arithmetic helpers and the small value types shared across the package.

Every count is a plain Python ``int``: arbitrary precision, immutable, and
exact under ``+``, ``*`` and ``divmod``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

BigCount = int


class InexactDivisionError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def exact_div(a: BigCount, b: int) -> BigCount:
    q, r = divmod(a, b)
    if r:
        raise InexactDivisionError(f"{a} is not divisible by {b}")
    return q


def multiset_coefficient(base: BigCount, p: int) -> BigCount:
    """Number of size-``p`` multisets drawn from ``base`` kinds, C(base+p-1, p).

    >>> multiset_coefficient(3, 2)
    6
    >>> multiset_coefficient(0, 0), multiset_coefficient(0, 4)
    (1, 0)
    """
    if base < 0 or p < 0:
        raise ValueError("base and p must be non-negative")
    if p == 0:
        return 1
    # falling product, divided once at the end; independent of the step form below
    num = 1
    den = 1
    for t in range(1, p + 1):
        num *= base + t - 1
        den *= t
    return exact_div(num, den)


def multiset_coefficient_step(f_prev: BigCount, base: BigCount, p: int) -> BigCount:
    """Advance ``multiset_coefficient(base, p - 1)`` to ``multiset_coefficient(base, p)``.

    The product is formed before dividing; the division must be exact.
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    return exact_div(f_prev * (base + p - 1), p)


class Mode(enum.Enum):
    """Which of the three bounds (w, u, v) are equalities.

    Only these four families exist; e.g. (<=, =, =) is not representable.
    """

    LLL = "LLL"
    ELL = "ELL"
    EEL = "EEL"
    EEE = "EEE"

    @property
    def equalities(self) -> tuple[bool, bool, bool]:
        return tuple(c == "E" for c in self.value)  # type: ignore[return-value]


@dataclass(frozen=True)
class QueryParams:
    n: int
    delta: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.delta < 0:
            raise ValueError(f"n and delta must be non-negative, got n={self.n}, delta={self.delta}")


@dataclass(frozen=True)
class FamilyKey:
    """Address of one DP cell: ``i`` vertices, ``j`` extra edges, bounds ``(w, u, v)``."""

    i: int
    j: int
    w: int
    u: int
    v: int
    mode: Mode = Mode.LLL

    def __post_init__(self) -> None:
        if not isinstance(self.mode, Mode):
            raise TypeError(f"mode must be a Mode, got {self.mode!r}")
        if self.i < 1 or self.j < 0:
            raise ValueError(f"illegal key {self}")
        if not (0 <= self.w <= self.i - 1 and 0 <= self.u <= self.j and 0 <= self.v <= self.j):
            raise ValueError(f"bounds out of range in {self}")


class StatsTriple(NamedTuple):
    max_v: int
    max_m: int
    max_l: int


def satisfies(stats: StatsTriple, w: int, u: int, v: int, mode: Mode) -> bool:
    """Does a rooted multigraph with ``stats`` belong to family ``(w, u, v, mode)``?"""
    eq = mode.equalities
    for value, bound, is_eq in zip(stats, (w, u, v), eq):
        if is_eq:
            if value != bound:
                return False
        elif value > bound:
            return False
    return True
