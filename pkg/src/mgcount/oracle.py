"""Brute-force ground truth: explicit enumeration of small tree-like multigraphs.

Nothing here shares code with the dynamic program.  Rooted classes are built
bottom-up as canonical codes, and free classes are counted two independent
ways that must agree.

Canonical code
--------------
A rooted multigraph's code is the tuple of its children's entries, sorted in
non-increasing order.  A child entry is ``(vertices, extra_edges, root_mult,
child_code)``: ordered by size first, then extra edges, then root-edge
multiplicity, and finally by the child's own code so that the order is total.
Two rooted multigraphs are isomorphic exactly when their codes are equal.

Text form
---------
``"(" + "".join(f"{mult}{child}") + ")"``, children in canonical order.  A
lone vertex is ``()``; a root with one leaf on a triple edge (two extra edges)
is ``(2())``.  :func:`parse_code` reads it back.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal

from mgcount.core import Mode, StatsTriple, satisfies

Code = tuple  # tuple of (v, e, mult, Code) entries

DEFAULT_BUDGET = 10**7


class EnumerationBudgetError(RuntimeError):
    """Raised when an enumeration would exceed the configured class budget."""


@dataclass(frozen=True)
class RootedMultigraph:
    children: tuple[tuple["RootedMultigraph", int], ...] = ()
    v_count: int = field(init=False, compare=False)
    e_count: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        children = tuple((c, int(m)) for c, m in self.children)
        for _, m in children:
            if m < 0:
                raise ValueError("extra multiplicity must be >= 0")
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "v_count", 1 + sum(c.v_count for c, _ in children))
        object.__setattr__(self, "e_count", sum(c.e_count + m for c, m in children))

    @classmethod
    def from_code(cls, code: Code) -> "RootedMultigraph":
        return cls(tuple((cls.from_code(sub), m) for _, _, m, sub in code))


def canonical_code(g: RootedMultigraph) -> Code:
    entries = [(c.v_count, c.e_count, m, canonical_code(c)) for c, m in g.children]
    entries.sort(reverse=True)
    return tuple(entries)


def code_text(code: Code) -> str:
    return "(" + "".join(f"{m}{code_text(sub)}" for _, _, m, sub in code) + ")"


def parse_code(text: str) -> Code:
    """Inverse of :func:`code_text`; the result is re-canonicalized."""
    pos = 0

    def node() -> RootedMultigraph:
        nonlocal pos
        if text[pos] != "(":
            raise ValueError(f"expected '(' at {pos} in {text!r}")
        pos += 1
        kids = []
        while text[pos] != ")":
            start = pos
            while text[pos].isdigit():
                pos += 1
            if start == pos:
                raise ValueError(f"expected a multiplicity at {pos} in {text!r}")
            mult = int(text[start:pos])
            kids.append((node(), mult))
        pos += 1
        return RootedMultigraph(tuple(kids))

    g = node()
    if pos != len(text):
        raise ValueError(f"trailing characters in {text!r}")
    return canonical_code(g)


def code_size(code: Code) -> tuple[int, int]:
    """(vertices, extra edges) of a code."""
    return 1 + sum(v for v, _, _, _ in code), sum(e + m for _, e, m, _ in code)


def stats(g: RootedMultigraph | Code) -> StatsTriple:
    code = g if isinstance(g, tuple) else canonical_code(g)
    if not code:
        return StatsTriple(0, 0, 0)
    # canonical order puts the maximal entry first, and that entry carries all three
    v, e, m, _ = code[0]
    return StatsTriple(v, e, m)


class RootedClasses:
    """Memoized canonical codes of rooted classes, keyed by (vertices, extra edges)."""

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.budget = budget
        self._classes: dict[tuple[int, int], list[Code]] = {(1, 0): [()]}

    def get(self, n: int, delta: int) -> list[Code]:
        if n < 1 or delta < 0:
            raise ValueError(f"need n >= 1 and delta >= 0, got n={n}, delta={delta}")
        key = (n, delta)
        if key not in self._classes:
            if n == 1:
                self._classes[key] = []
            else:
                self._classes[key] = self._build(n, delta)
        return self._classes[key]

    def _build(self, n: int, delta: int) -> list[Code]:
        items = []
        for cv in range(1, n):
            for ce in range(delta + 1):
                subs = self.get(cv, ce)
                for mult in range(delta - ce + 1):
                    items.extend((cv, ce, mult, sub) for sub in subs)
        items.sort(reverse=True)

        out: list[Code] = []

        def extend(start: int, rem_v: int, rem_e: int, chosen: list) -> None:
            if rem_v == 0:
                if rem_e == 0:
                    out.append(tuple(chosen))
                    if len(out) > self.budget:
                        raise EnumerationBudgetError(
                            f"more than {self.budget} rooted classes for (n={n}, delta={delta})"
                        )
                return
            for idx in range(start, len(items)):
                item = items[idx]
                cv, ce, mult, _ = item
                if cv > rem_v or ce + mult > rem_e:
                    continue
                chosen.append(item)
                extend(idx, rem_v - cv, rem_e - ce - mult, chosen)
                chosen.pop()

        extend(0, n - 1, delta, [])
        return out


_shared = RootedClasses()


def enumerate_rooted(n: int, delta: int, budget: int | None = None) -> list[RootedMultigraph]:
    """One representative per rooted-isomorphism class, deduplication asserted."""
    classes = _shared if budget is None else RootedClasses(budget)
    codes = classes.get(n, delta)
    graphs = [RootedMultigraph.from_code(c) for c in codes]
    recoded = {canonical_code(g) for g in graphs}
    assert len(recoded) == len(codes), "generator produced isomorphic duplicates"
    assert recoded == set(codes)
    return graphs


def rooted_codes(n: int, delta: int) -> list[Code]:
    return _shared.get(n, delta)


def enumerate_rooted_bounded(n: int, delta: int, k: int, d: int, l: int, mode: Mode) -> int:
    return sum(1 for c in rooted_codes(n, delta) if satisfies(stats(c), k, d, l, mode))


def bounded_histogram(n: int, delta: int) -> dict[StatsTriple, int]:
    """Number of rooted classes per exact statistics triple."""
    hist: dict[StatsTriple, int] = defaultdict(int)
    for c in rooted_codes(n, delta):
        hist[stats(c)] += 1
    return dict(hist)


CentroidType = Literal["unicentroid-at-root", "bicentroid", "centroid-elsewhere"]


def centroid_type(g: RootedMultigraph | Code) -> CentroidType:
    code = g if isinstance(g, tuple) else canonical_code(g)
    n, _ = code_size(code)
    if n % 2 == 0 and any(v == n // 2 for v, _, _, _ in code):
        return "bicentroid"
    if all(v <= (n - 1) // 2 for v, _, _, _ in code):
        return "unicentroid-at-root"
    return "centroid-elsewhere"


# free counting, method 2: explicit graphs re-rooted at their centroid


def _to_adjacency(code: Code) -> tuple[list[dict[int, int]], int]:
    adj: list[dict[int, int]] = [{}]

    def walk(node: int, c: Code) -> None:
        for _, _, m, sub in c:
            child = len(adj)
            adj.append({})
            adj[node][child] = m
            adj[child][node] = m
            walk(child, sub)

    walk(0, code)
    return adj, len(adj)


def _rooted_code_at(adj: list[dict[int, int]], root: int, banned: int = -1) -> Code:
    def rec(node: int, parent: int) -> Code:
        entries = []
        for nb, m in adj[node].items():
            if nb == parent or nb == banned:
                continue
            sub = rec(nb, node)
            v, e = code_size(sub)
            entries.append((v, e, m, sub))
        entries.sort(reverse=True)
        return tuple(entries)

    return rec(root, banned)


def _centroids(adj: list[dict[int, int]]) -> list[int]:
    n = len(adj)
    sizes = [0] * n
    order, parent = [], [-1] * n
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        x = stack.pop()
        order.append(x)
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)
    for x in reversed(order):
        sizes[x] = 1 + sum(sizes[y] for y in adj[x] if y != parent[x])
    best, out = n, []
    for x in range(n):
        worst = n - sizes[x]
        for y in adj[x]:
            if y != parent[x]:
                worst = max(worst, sizes[y])
        if worst < best:
            best, out = worst, [x]
        elif worst == best:
            out.append(x)
    return out


def free_code(code: Code) -> tuple:
    """Isomorphism-invariant code of the free multigraph underlying a rooted one."""
    adj, _ = _to_adjacency(code)
    cents = _centroids(adj)
    if len(cents) == 1:
        return ("uni", _rooted_code_at(adj, cents[0]))
    a, b = cents
    halves = sorted([_rooted_code_at(adj, a, banned=b), _rooted_code_at(adj, b, banned=a)])
    return ("bi", adj[a][b], tuple(halves))


def _free_by_rerooting(n: int, delta: int) -> int:
    return len({free_code(c) for c in rooted_codes(n, delta)})


def _free_by_centroid(n: int, delta: int) -> int:
    uni = sum(1 for c in rooted_codes(n, delta) if centroid_type(c) == "unicentroid-at-root")
    if n % 2:
        return uni
    h = n // 2
    bi = 0
    for ell in range(delta + 1):
        rest = delta - ell
        for a in range(rest // 2 + 1):
            xs, ys = rooted_codes(h, a), rooted_codes(h, rest - a)
            if a == rest - a:
                bi += sum(1 for x in xs for y in ys if x <= y)
            else:
                bi += len(xs) * len(ys)
    return uni + bi


def enumerate_free(n: int, delta: int) -> int:
    """Free isomorphism classes, counted by centroid rooting and by explicit re-rooting."""
    if n < 1 or delta < 0:
        raise ValueError(f"need n >= 1 and delta >= 0, got n={n}, delta={delta}")
    by_centroid = _free_by_centroid(n, delta)
    by_rerooting = _free_by_rerooting(n, delta)
    assert by_centroid == by_rerooting, (
        f"oracle disagreement at ({n}, {delta}): {by_centroid} vs {by_rerooting}"
    )
    return by_centroid


def dump_codes(codes: Iterable[Code]) -> Iterator[str]:
    """Newline-delimited text codes, one class per line."""
    for c in codes:
        yield code_text(c) + "\n"
