"""Free (unrooted) counts from rooted ones, by rooting every multigraph at its centroid.

A tree on ``n`` vertices has either one centroid vertex, whose removal leaves
parts of at most ``(n - 1) // 2`` vertices, or (``n`` even only) one centroid
edge splitting it into two halves of ``n / 2`` vertices.

* unicentroid: rooted classes with every child subtree of ``<= (n - 1) // 2``
  vertices.
* bicentroid: unordered pairs ``{X, Y}`` of rooted ``n / 2``-vertex halves,
  plus ``l`` extra edges on the centroid edge itself.  Two halves with the
  same edge count come from the same family, so they pair as a multiset
  (``C(m + 1, 2)``) rather than as an ordered product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

from mgcount.core import BigCount, multiset_coefficient
from mgcount.dp import RootedCounts, fill_rooted


class RootedSource(Protocol):
    n_cap: int
    delta_cap: int

    def rooted(self, i: int, j: int, w: int) -> BigCount: ...


@dataclass(frozen=True)
class FreeCountResult:
    n: int
    delta: int
    unicentroid_part: BigCount
    bicentroid_part: BigCount

    @property
    def total(self) -> BigCount:
        return self.unicentroid_part + self.bicentroid_part


def _check_size(tables: RootedSource, n: int, delta: int) -> None:
    if tables.n_cap < n or tables.delta_cap < delta:
        raise ValueError(
            f"tables sized ({tables.n_cap}, {tables.delta_cap}) cannot answer ({n}, {delta})"
        )


def count_unicentroid(n: int, delta: int, tables: RootedSource) -> BigCount:
    if n < 1 or delta < 0:
        raise ValueError(f"need n >= 1 and delta >= 0, got n={n}, delta={delta}")
    if n == 1:
        return 1 if delta == 0 else 0
    _check_size(tables, n, delta)
    half = (n - 1) // 2
    if half == 0:
        return 0
    return tables.rooted(n, delta, half)


def count_bicentroid(n: int, delta: int, tables: RootedSource) -> BigCount:
    if n < 2 or n % 2:
        raise ValueError(f"a centroid edge needs an even n >= 2, got {n}")
    h = n // 2
    _check_size(tables, h, delta)
    half = [tables.rooted(h, e, h - 1) for e in range(delta + 1)]
    total = 0
    for ell in range(delta + 1):
        rest = delta - ell
        for a in range(rest // 2 + 1):
            b = rest - a
            if a == b:
                total += multiset_coefficient(half[a], 2)
            else:
                total += half[a] * half[b]
    return total


def count_bicentroid_published_formula(n: int, delta: int, tables: RootedSource) -> BigCount:
    """Bicentroid count as the closed formula is printed, symmetric pairs and all.

    The unordered-pair correction is applied only at ``l = 0, i = delta / 2``;
    for ``l >= 1`` with ``delta - l`` even the two equal-edge halves are
    multiplied as an ordered pair.  Kept to reproduce the published table;
    :func:`count_bicentroid` is the correct count.
    """
    if n < 2 or n % 2:
        raise ValueError(f"a centroid edge needs an even n >= 2, got {n}")
    h = n // 2
    _check_size(tables, h, delta)
    half = [tables.rooted(h, e, h - 1) for e in range(delta + 1)]
    total = 0
    if delta % 2:
        for ell in range(delta + 1):
            for a in range((delta - ell) // 2 + 1):
                total += half[a] * half[delta - a - ell]
        return total
    for a in range((delta - 1) // 2 + 1):
        total += half[a] * half[delta - a]
    for ell in range(1, delta + 1):
        for a in range((delta - ell) // 2 + 1):
            total += half[a] * half[delta - a - ell]
    return total + multiset_coefficient(half[delta // 2], 2)


def rooted_counts_for(n: int, delta: int) -> RootedCounts:
    """Smallest :class:`RootedCounts` that answers every ``count_free(n', delta')`` with n' <= n, delta' <= delta."""
    return fill_rooted(max(n, 1), delta, max(0, (n - 1) // 2))


def count_free(
    n: int,
    delta: int,
    tables: RootedSource | None = None,
    *,
    published_formula: bool = False,
) -> FreeCountResult:
    """Number of non-isomorphic tree-like multigraphs with ``n`` vertices and ``delta`` extra edges."""
    if n < 0 or delta < 0:
        raise ValueError(f"need n >= 0 and delta >= 0, got n={n}, delta={delta}")
    if n <= 1:
        return FreeCountResult(n, delta, int(n == 1 and delta == 0), 0)
    if tables is None:
        tables = rooted_counts_for(n, delta)
    uni = count_unicentroid(n, delta, tables)
    bi = 0
    if n % 2 == 0:
        bicentroid = count_bicentroid_published_formula if published_formula else count_bicentroid
        bi = bicentroid(n, delta, tables)
    return FreeCountResult(n, delta, uni, bi)
