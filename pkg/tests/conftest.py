"""Shared fixtures: frozen reference tables and a deterministic matroid pool.

The three reference matroids (a rank-3 graphical matroid on 13 bases, the
rank-3 Catalan matroid, and U(4,2)) come with published sweep tables; the
rows below are frozen as (characteristic vector, restriction set) pairs plus
the witness functionals, and the unit/acceptance tests check the code
reproduces them exactly.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from matroidsweep import Functional, Matroid, from_bases, catalan, graphic, uniform

GRAPHIC13_BASES = [
    [0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 1, 5], [1, 2, 3], [0, 2, 5], [1, 2, 4],
    [0, 3, 5], [0, 4, 5], [1, 3, 5], [1, 4, 5], [2, 3, 5], [2, 4, 5],
]

# line shelling of the 13-basis graphical matroid under (1,2,3,4,5,6)
GRAPHIC13_LINE_TABLE = [
    ((1, 1, 1, 0, 0, 0), []),
    ((1, 1, 0, 1, 0, 0), [3]),
    ((1, 1, 0, 0, 1, 0), [4]),
    ((1, 1, 0, 0, 0, 1), [5]),
    ((0, 1, 1, 1, 0, 0), [2, 3]),
    ((1, 0, 1, 0, 0, 1), [2, 5]),
    ((0, 1, 1, 0, 1, 0), [2, 4]),
    ((1, 0, 0, 1, 0, 1), [3, 5]),
    ((1, 0, 0, 0, 1, 1), [4, 5]),
    ((0, 1, 0, 1, 0, 1), [1, 3, 5]),
    ((0, 1, 0, 0, 1, 1), [1, 4, 5]),
    ((0, 0, 1, 1, 0, 1), [2, 3, 5]),
    ((0, 0, 1, 0, 1, 1), [2, 4, 5]),
]

# broken-line shelling of the same matroid: pivots after positions 1 and 2
GRAPHIC13_BROKEN_WITNESSES = [
    (1, ["1", "2", "3", "4", "5", "6"]),
    (2, ["-6.54", "4.96", "4.39", "6.94", "6.53", "5.05"]),
    (3, ["-7.78", "5.30", "4.18", "7.94", "8.00", "5.91"]),
]
GRAPHIC13_BROKEN_TABLE = [
    ((1, 1, 1, 0, 0, 0), []),
    ((1, 0, 1, 0, 0, 1), [5]),
    ((1, 1, 0, 0, 0, 1), [1, 5]),
    ((1, 1, 0, 1, 0, 0), [3]),
    ((1, 1, 0, 0, 1, 0), [4]),
    ((1, 0, 0, 1, 0, 1), [3, 5]),
    ((1, 0, 0, 0, 1, 1), [4, 5]),
    ((0, 1, 1, 1, 0, 0), [2, 3]),
    ((0, 1, 1, 0, 1, 0), [2, 4]),
    ((0, 0, 1, 1, 0, 1), [2, 3, 5]),
    ((0, 0, 1, 0, 1, 1), [2, 4, 5]),
    ((0, 1, 0, 1, 0, 1), [1, 3, 5]),
    ((0, 1, 0, 0, 1, 1), [1, 4, 5]),
]

# a second broken-line shelling of the graphical matroid whose poset is
# isomorphic to the line-shelling poset
GRAPHIC13_BAD_BROKEN_WITNESSES = [
    (1, ["1", "2", "3", "4", "5", "6"]),
    (2, ["-0.243", "2.63", "5.57", "11.7", "11.6", "6.10"]),
    (3, ["1.86", "-7.10", "3.30", "12.7", "9.05", "4.34"]),
]
GRAPHIC13_BAD_BROKEN_TABLE = [
    ((1, 1, 1, 0, 0, 0), []),
    ((1, 1, 0, 0, 0, 1), [5]),
    ((1, 1, 0, 0, 1, 0), [4]),
    ((0, 1, 1, 0, 1, 0), [2, 4]),
    ((0, 1, 0, 0, 1, 1), [4, 5]),
    ((1, 1, 0, 1, 0, 0), [3]),
    ((0, 1, 1, 1, 0, 0), [2, 3]),
    ((1, 0, 1, 0, 0, 1), [2, 5]),
    ((0, 1, 0, 1, 0, 1), [3, 5]),
    ((1, 0, 0, 0, 1, 1), [0, 4, 5]),
    ((0, 0, 1, 0, 1, 1), [2, 4, 5]),
    ((1, 0, 0, 1, 0, 1), [0, 3, 5]),
    ((0, 0, 1, 1, 0, 1), [2, 3, 5]),
]

# line shelling of the rank-3 Catalan matroid under (1,2,3,4,5,6)
CATALAN3_LINE_TABLE = [
    ((1, 1, 1, 0, 0, 0), []),
    ((1, 1, 0, 1, 0, 0), [3]),
    ((1, 1, 0, 0, 1, 0), [4]),
    ((1, 0, 1, 1, 0, 0), [2, 3]),
    ((1, 1, 0, 0, 0, 1), [5]),
    ((1, 0, 1, 0, 1, 0), [2, 4]),
    ((0, 1, 1, 1, 0, 0), [1, 2, 3]),
    ((1, 0, 1, 0, 0, 1), [2, 5]),
    ((1, 0, 0, 1, 1, 0), [3, 4]),
    ((0, 1, 1, 0, 1, 0), [1, 2, 4]),
    ((1, 0, 0, 1, 0, 1), [3, 5]),
    ((0, 1, 1, 0, 0, 1), [1, 2, 5]),
    ((0, 1, 0, 1, 1, 0), [1, 3, 4]),
    ((0, 1, 0, 1, 0, 1), [1, 3, 5]),
]

# broken-line shelling of the Catalan matroid: pivots after positions 1..4
CATALAN3_BROKEN_WITNESSES = [
    (1, ["1", "2", "3", "4", "5", "6"]),
    (2, ["-10.7", "-5.84", "-14.9", "2.67", "18.9", "17.5"]),
    (3, ["0.573", "3.24", "-8.68", "6.11", "10.6", "12.3"]),
    (4, ["1.32", "1.56", "-0.157", "4.38", "11.0", "6.36"]),
    (5, ["1.81", "0.880", "-0.449", "4.08", "10.9", "6.87"]),
]
CATALAN3_BROKEN_TABLE = [
    ((1, 1, 1, 0, 0, 0), []),
    ((1, 0, 1, 1, 0, 0), [3]),
    ((0, 1, 1, 1, 0, 0), [1, 3]),
    ((1, 1, 0, 1, 0, 0), [0, 1, 3]),
    ((0, 1, 1, 0, 0, 1), [5]),
    ((1, 0, 1, 0, 0, 1), [0, 5]),
    ((1, 1, 0, 0, 0, 1), [0, 1, 5]),
    ((0, 1, 1, 0, 1, 0), [4]),
    ((0, 1, 0, 1, 0, 1), [3, 5]),
    ((1, 0, 1, 0, 1, 0), [0, 4]),
    ((1, 0, 0, 1, 0, 1), [0, 3, 5]),
    ((1, 1, 0, 0, 1, 0), [0, 1, 4]),
    ((0, 1, 0, 1, 1, 0), [3, 4]),
    ((1, 0, 0, 1, 1, 0), [0, 3, 4]),
]

# U(4,2), vertices numbered 0..3: shelling of the complex that does not shell
# the dual cube
U42_NONPOLYTOPAL_ORDER = [{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}]
U42_NONPOLYTOPAL_RSETS = [[], [2], [3], [0, 3], [0, 2], [1, 3]]

# U(4,2) broken-line order with two witnesses whose minima differ (not pinned)
U42_UNPINNED_WITNESSES = [
    (1, ["1", "2", "3", "8"]),
    (4, ["3", "2", "1", "8"]),
]
U42_UNPINNED_ORDER = [{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {0, 3}]
U42_UNPINNED_RSETS = [[], [2], [1, 2], [3], [1, 3], [0, 3]]


def functional_of(strings) -> Functional:
    return Functional.of([Fraction(s) for s in strings])


def witness_segments(spec) -> list[tuple[int, Functional]]:
    return [(pos, functional_of(coords)) for pos, coords in spec]


def chi_to_basis(chi) -> frozenset[int]:
    return frozenset(i for i, c in enumerate(chi) if c)


@pytest.fixture(scope="session")
def graphic13() -> Matroid:
    return from_bases(6, GRAPHIC13_BASES)


@pytest.fixture(scope="session")
def u42() -> Matroid:
    return uniform(4, 2)


@pytest.fixture(scope="session")
def catalan3() -> Matroid:
    return catalan(3)


def build_pool() -> list[Matroid]:
    """Deterministic pool of small matroids used by the randomized suites."""
    pool = [
        uniform(2, 1), uniform(3, 1), uniform(3, 2), uniform(4, 2), uniform(4, 3),
        uniform(5, 2), uniform(5, 3), uniform(6, 2), uniform(6, 3), uniform(7, 3),
        uniform(7, 4),
        graphic(3, [(0, 1), (1, 2), (2, 0)]),                      # triangle
        graphic(4, [(0, 1), (1, 2), (2, 0), (2, 3)]),              # triangle + pendant
        graphic(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),      # 4-cycle + chord
        graphic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),  # K4
        graphic(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),  # two triangles
        graphic(3, [(0, 1), (0, 1), (1, 2)]),                      # parallel edges
        graphic(3, [(0, 0), (0, 1), (1, 2)]),                      # with a loop
        catalan(2),
        catalan(3),
        from_bases(6, GRAPHIC13_BASES),
    ]
    return pool


@pytest.fixture(scope="session")
def pool() -> list[Matroid]:
    return build_pool()
