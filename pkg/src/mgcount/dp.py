"""Dynamic program over bounded families of rooted tree-like multigraphs.

Notation used throughout: a rooted multigraph has ``i`` vertices and ``j``
extra (parallel) edges.  Over the root's children it has three statistics:

* ``max_v``  the largest child-subtree vertex count,
* ``max_m``  the largest extra-edge count among subtrees of that size,
* ``max_l``  the largest root-edge multiplicity among subtrees attaining both.

``m(i, j, w, u, v)`` in one of four modes counts the rooted classes whose
statistics are bounded by ``w``, ``u``, ``v`` (``<=``) or pinned to them
(``=``), following :class:`~mgcount.core.Mode`.

Two engines live here.

:class:`DpTables` keeps all four 5-D tables and fills them in the natural
``i, j, w, u, v, p`` loop nest.  It answers any bounded query and is what the
cell-level checks run against, but its memory grows as ``n^2 * delta^3``.

:func:`fill_rooted` reorders the same recurrences so that ``(w, u, v)`` are the
outer loops and every ``(i, j)`` plane is updated with whole-array shifts.
Only ``m(i, j, w<=, j<=, j<=)`` is kept, which is all the free-count assembly
needs, and large instances fit comfortably.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from mgcount.core import BigCount, FamilyKey, Mode, multiset_coefficient_step

log = logging.getLogger(__name__)

_MODES = (Mode.LLL, Mode.ELL, Mode.EEL, Mode.EEE)


class TableAllocationError(MemoryError):
    """Raised when the requested table dimensions cannot be allocated."""


@dataclass
class DpTables:
    """Four dense tables ``t_lll``, ``t_ell``, ``t_eel``, ``t_eee``.

    Each is one flat list indexed row-major by ``(i, j, w, u, v)`` with
    ``1 <= i <= n_cap``, ``0 <= j <= delta_cap``, ``0 <= w < n_cap`` and
    ``0 <= u, v <= delta_cap``.  Cells outside the legal region
    (``w >= i`` or ``u > j`` or ``v > j``) hold 0.
    """

    n_cap: int
    delta_cap: int
    t_lll: list[BigCount] = field(repr=False)
    t_ell: list[BigCount] = field(repr=False)
    t_eel: list[BigCount] = field(repr=False)
    t_eee: list[BigCount] = field(repr=False)
    filled: bool = False

    @property
    def shape(self) -> tuple[int, int, int, int, int]:
        d1 = self.delta_cap + 1
        return (self.n_cap, d1, self.n_cap, d1, d1)

    def index(self, i: int, j: int, w: int, u: int, v: int) -> int:
        n, d = self.n_cap, self.delta_cap
        assert 1 <= i <= n and 0 <= j <= d and 0 <= w < n and 0 <= u <= d and 0 <= v <= d, (
            f"cell ({i}, {j}, {w}, {u}, {v}) outside tables of n_cap={n}, delta_cap={d}"
        )
        d1 = d + 1
        return (((((i - 1) * d1 + j) * n + w) * d1 + u) * d1) + v

    def table(self, mode: Mode) -> list[BigCount]:
        return {
            Mode.LLL: self.t_lll,
            Mode.ELL: self.t_ell,
            Mode.EEL: self.t_eel,
            Mode.EEE: self.t_eee,
        }[mode]

    def cell(self, key: FamilyKey) -> BigCount:
        return self.table(key.mode)[self.index(key.i, key.j, key.w, key.u, key.v)]

    def get(self, mode: Mode, i: int, j: int, w: int, u: int, v: int) -> BigCount:
        return self.table(mode)[self.index(i, j, w, u, v)]

    def legal_keys(self, mode: Mode = Mode.LLL):
        """Yield every legal :class:`FamilyKey` of the tables in ascending order."""
        for i in range(1, self.n_cap + 1):
            for j in range(self.delta_cap + 1):
                for w in range(i):
                    for u in range(j + 1):
                        for v in range(j + 1):
                            yield FamilyKey(i, j, w, u, v, mode)

    def rooted(self, i: int, j: int, w: int) -> BigCount:
        """``m(i, j, w<=, j<=, j<=)``, with ``w`` clamped to ``i - 1``."""
        if w < 0:
            return 0
        return self.t_lll[self.index(i, j, min(w, i - 1), j, j)]


def init_tables(n_cap: int, delta_cap: int) -> DpTables:
    """Allocate the four tables and write the base cells for ``i = 1`` and ``i = 2``.

    Everything else starts at zero, which already covers the families that
    are empty by definition (``w = 0`` with ``i >= 2``, ``w >= i``, and so on).
    """
    if n_cap < 1 or delta_cap < 0:
        raise ValueError(f"need n_cap >= 1 and delta_cap >= 0, got {n_cap}, {delta_cap}")
    d1 = delta_cap + 1
    size = n_cap * d1 * n_cap * d1 * d1
    try:
        bufs = [[0] * size for _ in range(4)]
    except MemoryError as exc:
        raise TableAllocationError(
            f"cannot allocate 4 tables of shape ({n_cap}, {d1}, {n_cap}, {d1}, {d1})"
        ) from exc
    t = DpTables(n_cap, delta_cap, *bufs)

    # a lone vertex has no extra edges and all statistics zero
    for buf in bufs:
        buf[t.index(1, 0, 0, 0, 0)] = 1

    # two vertices: one leaf child carrying all j extra edges on the root edge
    if n_cap >= 2:
        for j in range(d1):
            t.t_eee[t.index(2, j, 1, 0, j)] = 1
            t.t_eel[t.index(2, j, 1, 0, j)] = 1
            for u in range(j + 1):
                t.t_ell[t.index(2, j, 1, u, j)] = 1
                t.t_lll[t.index(2, j, 1, u, j)] = 1
    return t


def _eee_cell(t: DpTables, i: int, j: int, w: int, u: int, v: int) -> BigCount:
    """Count rooted classes with statistics exactly ``(w, u, v)``.

    Split off the ``p >= 1`` children that are ``w``-vertex, ``u``-edge
    subtrees joined by ``v`` extra root edges.  They form a multiset over
    ``m(w, u, (w-1)<=, u<=, u<=)`` shapes; what remains (the residual) is
    counted from strictly smaller cells.
    """
    s = u + v
    if s > j:
        return 0
    lll, ell, eel = t.t_lll, t.t_ell, t.t_eel
    idx = t.index
    base = lll[idx(w, u, w - 1, u, u)]
    zmax = (i - 1) // w
    if s:
        zmax = min(zmax, j // s)
    total = 0
    h = 1
    for p in range(1, zmax + 1):
        h = multiset_coefficient_step(h, base, p)
        if not h:
            break
        ri = i - p * w
        rj = j - p * s
        assert ri >= 1
        # residual's remaining children are all smaller than w
        acc = lll[idx(ri, rj, min(ri - 1, w - 1), rj, rj)]
        if u >= 1:
            # ... or w-vertex with fewer than u extra edges
            acc += ell[idx(ri, rj, w, min(rj, u - 1), rj)] if w < ri else 0
        if v >= 1:
            # ... or w-vertex, u-edge, joined by fewer than v extra root edges
            if w < ri and u <= rj:
                acc += eel[idx(ri, rj, w, u, min(rj, v - 1))]
        total += h * acc
    return total


def fill(t: DpTables) -> DpTables:
    """Fill every cell with ``i >= 3`` in place and return the tables."""
    if t.filled:
        return t
    idx = t.index
    lll, ell, eel, eee = t.t_lll, t.t_ell, t.t_eel, t.t_eee
    for i in range(3, t.n_cap + 1):
        for j in range(t.delta_cap + 1):
            for w in range(1, i):
                for u in range(j + 1):
                    for v in range(j + 1):
                        c = idx(i, j, w, u, v)
                        e = _eee_cell(t, i, j, w, u, v)
                        eee[c] = e
                        eel[c] = (eel[idx(i, j, w, u, v - 1)] if v else 0) + e
                        ell[c] = (ell[idx(i, j, w, u - 1, v)] if u else 0) + eel[c]
                        lll[c] = lll[idx(i, j, w - 1, u, v)] + ell[c]
    t.filled = True
    return t


def build_tables(n_cap: int, delta_cap: int) -> DpTables:
    return fill(init_tables(n_cap, delta_cap))


def count_bounded(
    n: int, delta: int, k: int, d: int, l: int, tables: DpTables | None = None
) -> BigCount:
    """``m(n, delta, k<=, d<=, l<=)``; ``count_bounded(n, delta, n-1, delta, delta)`` is the rooted total."""
    if min(n, delta, k, d, l) < 0:
        raise ValueError("arguments must be non-negative")
    if n == 0:
        return 0
    k = min(k, n - 1)
    d = min(d, delta)
    l = min(l, delta)
    if n >= 2 and k == 0:
        return 0
    if tables is None:
        tables = build_tables(n, delta)
    elif tables.n_cap < n or tables.delta_cap < delta:
        raise ValueError(f"tables ({tables.n_cap}, {tables.delta_cap}) too small for ({n}, {delta})")
    elif not tables.filled:
        fill(tables)
    return tables.get(Mode.LLL, n, delta, k, d, l)


class RootedCounts:
    """``m(i, j, w<=, j<=, j<=)`` for ``i <= n_cap``, ``j <= delta_cap``, ``w <= w_cap``.

    Produced by :func:`fill_rooted`.  Values for ``w >= i - 1`` are saturated,
    so any ``w`` at or beyond ``i - 1`` reads the unrestricted rooted count.
    """

    def __init__(self, n_cap: int, delta_cap: int, w_cap: int, planes: list[np.ndarray]):
        self.n_cap = n_cap
        self.delta_cap = delta_cap
        self.w_cap = w_cap
        self._planes = planes

    def rooted(self, i: int, j: int, w: int) -> BigCount:
        if not (1 <= i <= self.n_cap and 0 <= j <= self.delta_cap):
            raise IndexError(f"({i}, {j}) outside n_cap={self.n_cap}, delta_cap={self.delta_cap}")
        if w < 0:
            return 0
        w = min(w, i - 1)
        if w > self.w_cap:
            raise IndexError(f"bound w={w} exceeds w_cap={self.w_cap}")
        return int(self._planes[w][i, j])

    def total(self, i: int, j: int) -> BigCount:
        return self.rooted(i, j, i - 1)


def fill_rooted(n_cap: int, delta_cap: int, w_cap: int | None = None) -> RootedCounts:
    """Compute ``m(i, j, w<=, j<=, j<=)`` for all ``i, j`` and ``w <= w_cap``.

    Same recurrences as :func:`fill`, reordered.  For fixed ``(w, u, v)`` the
    exact-statistics counts of every ``(i, j)`` depend only on

    * ``m(., ., (w-1)<=, full, full)``  finished in earlier ``w`` passes,
    * ``m(., ., w=, (u-1)<=, full)``    finished in earlier ``u`` passes,
    * ``m(., ., w=, u=, (v-1)<=)``      finished in earlier ``v`` passes,

    so one multiplicity ``p`` becomes a single shifted add over the whole
    ``(i, j)`` plane.  Bounds above ``j`` saturate, which is what makes the
    ``min(., .)`` clamps of the cell-wise recurrence disappear here.
    """
    if n_cap < 1 or delta_cap < 0:
        raise ValueError(f"need n_cap >= 1 and delta_cap >= 0, got {n_cap}, {delta_cap}")
    if w_cap is None:
        w_cap = n_cap - 1
    w_cap = max(0, min(w_cap, n_cap - 1))
    N, D = n_cap, delta_cap
    shape = (N + 1, D + 1)

    lw = np.zeros(shape, dtype=object)
    lw[1, 0] = 1
    planes = [lw]
    for w in range(1, w_cap + 1):
        prev = planes[-1]
        ell_acc = np.zeros(shape, dtype=object)  # m(., ., w=, (u-1)<=, full)
        pmax_w = (N - 1) // w
        for u in range(D + 1):
            base = int(prev[w, u])  # m(w, u, (w-1)<=, u<=, u<=)
            eel_acc = np.zeros(shape, dtype=object)  # m(., ., w=, u=, (v-1)<=)
            if base:
                for v in range(D + 1 - u):
                    s = u + v
                    resid = prev + ell_acc if u else prev
                    if v:
                        resid = resid + eel_acc
                    pmax = min(pmax_w, D // s) if s else pmax_w
                    eee = np.zeros(shape, dtype=object)
                    h = 1
                    for p in range(1, pmax + 1):
                        h = multiset_coefficient_step(h, base, p)
                        di, dj = p * w, p * s
                        eee[di + 1 :, dj:] += h * resid[1 : N + 1 - di, : D + 1 - dj]
                    eel_acc += eee
            ell_acc += eel_acc
        planes.append(prev + ell_acc)
        log.debug("fill_rooted: finished w=%d of %d", w, w_cap)
    return RootedCounts(N, D, w_cap, planes)
