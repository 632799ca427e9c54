"""Exact counts of non-isomorphic tree-like multigraphs."""

from mgcount.core import BigCount, FamilyKey, Mode, StatsTriple, multiset_coefficient, multiset_coefficient_step
from mgcount.dp import DpTables, RootedCounts, build_tables, count_bounded, fill, fill_rooted, init_tables
from mgcount.free import FreeCountResult, count_bicentroid, count_free, count_unicentroid

__all__ = [
    "BigCount",
    "DpTables",
    "FamilyKey",
    "FreeCountResult",
    "Mode",
    "RootedCounts",
    "StatsTriple",
    "build_tables",
    "count_bicentroid",
    "count_bounded",
    "count_free",
    "count_unicentroid",
    "fill",
    "fill_rooted",
    "init_tables",
    "multiset_coefficient",
    "multiset_coefficient_step",
]
