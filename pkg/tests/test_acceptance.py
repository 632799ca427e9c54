"""Exit criteria, one test each.

Each test records a PASS/FAIL line that is echoed in the terminal summary.
"""

import itertools
import time

from mgcount.cli import TABLE1, sci3, sci_matches
from mgcount.core import Mode, multiset_coefficient, multiset_coefficient_step, satisfies
from mgcount.dp import build_tables, fill_rooted
from mgcount.free import count_free
from mgcount.oracle import bounded_histogram, enumerate_free, enumerate_rooted_bounded


def test_1_free_counts_match_oracle(acceptance_report):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 9):
        for d in range(5):
            got, expect = count_free(n, d).total, enumerate_free(n, d)
            if got != expect:
                bad.append((n, d, got, expect))
    dt = time.perf_counter() - t0
    acceptance_report(1, not bad and dt < 300, f"free counts == oracle for n<=8, delta<=4 ({dt:.1f}s) {bad[:3]}")
    assert not bad
    assert dt < 300


def test_2_every_rooted_cell_matches_oracle(acceptance_report):
    t = build_tables(7, 3)
    checked, bad = 0, []
    for i in range(1, 8):
        for j in range(4):
            hist = bounded_histogram(i, j)
            for w, u, v in itertools.product(range(i), range(j + 1), range(j + 1)):
                for mode in Mode:
                    expect = sum(c for s, c in hist.items() if satisfies(s, w, u, v, mode))
                    checked += 1
                    if t.get(mode, i, j, w, u, v) != expect:
                        bad.append((i, j, w, u, v, mode))
    # spot-check the histogram route against the direct filter
    for i, j, w, u, v, mode in [(5, 2, 2, 1, 1, Mode.EEE), (7, 3, 3, 2, 0, Mode.EEL), (6, 3, 4, 0, 3, Mode.ELL)]:
        assert t.get(mode, i, j, w, u, v) == enumerate_rooted_bounded(i, j, w, u, v, mode)
    acceptance_report(2, not bad, f"{checked} rooted cells == oracle for i<=7, j<=3 {bad[:3]}")
    assert not bad


def test_3_published_table(acceptance_report):
    lines, mismatched = [], []
    total_time = 0.0
    for (n, d), published in TABLE1.items():
        t0 = time.perf_counter()
        value = count_free(n, d).total
        dt = time.perf_counter() - t0
        total_time += dt
        ok = sci_matches(value, published)
        lines.append(f"({n}, {d}) got {sci3(value)} published {published} {'ok' if ok else 'MISMATCH'} {dt:.2f}s")
        if not ok:
            mismatched.append((n, d, sci3(value), published))
    print("\n".join(lines))
    print(f"total {total_time:.1f}s")
    acceptance_report(
        3,
        not mismatched,
        f"{21 - len(mismatched)}/21 rows reproduce at 3 s.f. in {total_time:.0f}s; mismatches {mismatched}",
    )
    assert not mismatched, mismatched


def test_4_closed_form_edge_cases(acceptance_report):
    ok = (
        all(count_free(1, d).total == 0 for d in range(1, 20))
        and all(count_free(2, d).total == 1 for d in range(20))
        and all(count_free(0, d).total == 0 for d in range(20))
    )
    acceptance_report(4, ok, "m(0, d) = 0, m(1, d>=1) = 0, m(2, d) = 1")
    assert ok


def test_5_trees_column(acceptance_report):
    oracle = [enumerate_free(n, 0) for n in range(1, 11)]
    dp = [count_free(n, 0).total for n in range(1, 11)]
    expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    ok = dp == oracle == expected
    acceptance_report(5, ok, f"delta = 0 column {dp}")
    assert ok


def test_6_partition_identities(acceptance_report):
    t = build_tables(8, 4)
    g = t.get
    failures = 0
    for i in range(1, 9):
        for j in range(5):
            for w, u, v in itertools.product(range(i), range(j + 1), range(j + 1)):
                if w and g(Mode.LLL, i, j, w, u, v) != g(Mode.LLL, i, j, w - 1, u, v) + g(Mode.ELL, i, j, w, u, v):
                    failures += 1
                if u and g(Mode.ELL, i, j, w, u, v) != g(Mode.ELL, i, j, w, u - 1, v) + g(Mode.EEL, i, j, w, u, v):
                    failures += 1
                if v and g(Mode.EEL, i, j, w, u, v) != g(Mode.EEL, i, j, w, u, v - 1) + g(Mode.EEE, i, j, w, u, v):
                    failures += 1
                if g(Mode.LLL, i, j, w, u, v) != sum(g(Mode.ELL, i, j, x, u, v) for x in range(w + 1)):
                    failures += 1
                if g(Mode.ELL, i, j, w, u, v) != sum(g(Mode.EEL, i, j, w, x, v) for x in range(u + 1)):
                    failures += 1
                if g(Mode.EEL, i, j, w, u, v) != sum(g(Mode.EEE, i, j, w, u, x) for x in range(v + 1)):
                    failures += 1
                if w == 1 and u >= 1 and g(Mode.EEE, i, j, w, u, v):
                    failures += 1
                if u + v > j and g(Mode.EEE, i, j, w, u, v):
                    failures += 1
            for w in range(i, 8):
                for u, v in itertools.product(range(5), repeat=2):
                    failures += sum(1 for mode in Mode if g(mode, i, j, w, u, v))
    acceptance_report(6, failures == 0, f"partition, telescoping and zero-row identities at (8, 4): {failures} failures")
    assert failures == 0


def test_7_incremental_coefficient(acceptance_report):
    bad = []
    for base in range(51):
        f = 1
        for p in range(1, 51):
            q, r = divmod(f * (base + p - 1), p)
            if r:
                bad.append((base, p))
            f = multiset_coefficient_step(f, base, p)
            if f != multiset_coefficient(base, p):
                bad.append((base, p))
    acceptance_report(7, not bad, f"chained steps == direct for base, p <= 50 {bad[:3]}")
    assert not bad


def test_8_polynomial_growth(acceptance_report):
    times = {}
    for n in (40, 80, 160):
        t0 = time.perf_counter()
        fill_rooted(n, 10)
        times[n] = time.perf_counter() - t0
    ratios = [times[80] / times[40], times[160] / times[80]]
    ok = all(r <= 50 for r in ratios)
    acceptance_report(
        8, ok, "fill times " + ", ".join(f"n={n}: {s:.2f}s" for n, s in times.items()) + f"; ratios {ratios[0]:.1f}, {ratios[1]:.1f}"
    )
    assert ok
