"""Restriction-set posets and their structural analysis.

Bases of a shelled complex are ordered by containment of their restriction
sets.  For weight orders this is the classical internal-activity poset: it
is ranked by restriction-set size, its passive sets form a greedoid, and it
becomes a lattice once an artificial maximum is attached.  Sweeps with
pivots produce new posets for which each property must be checked, which is
what this module does.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from random import Random
from typing import Sequence

from .errors import BadParameters, CyclicOrientation, DuplicateRestrictionSets, TooLarge
from .matroid import Matroid
from .polytope import Functional, PolytopeGraph, vertices_and_graph
from .shelling import RestrictionSets, internally_passive_set, is_shelling, line_shelling_order

MAX_ISO_ELEMENTS = 30


@dataclass(frozen=True)
class RestrictionPoset:
    """Bases ordered by inclusion of their restriction sets.

    ``labels[i]`` is the sweep position of element i (the "order swept"
    label used in displays); the bottom element is position 0.
    """

    n: int
    bases: tuple[frozenset[int], ...]
    rsets: tuple[frozenset[int], ...]
    labels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.rsets)

    @cached_property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(
            tuple(self.rsets[i] <= self.rsets[j] for j in range(len(self.rsets)))
            for i in range(len(self.rsets))
        )

    @cached_property
    def covers(self) -> tuple[tuple[int, ...], ...]:
        """covers[i] = indices of elements covering i."""
        n = len(self.rsets)
        out: list[list[int]] = [[] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j or not self.leq[i][j]:
                    continue
                if not any(
                    k != i and k != j and self.leq[i][k] and self.leq[k][j] for k in range(n)
                ):
                    out[i].append(j)
        return tuple(tuple(sorted(c)) for c in out)

    def rank(self, i: int) -> int:
        return len(self.rsets[i])

    @cached_property
    def bottom(self) -> int:
        roots = [i for i in range(len(self.rsets)) if not self.rsets[i]]
        assert len(roots) == 1, "restriction poset must have a unique empty bottom"
        return roots[0]

    def maximal_elements(self) -> list[int]:
        return [i for i in range(len(self.rsets)) if not self.covers[i]]

    def atoms(self) -> list[int]:
        return list(self.covers[self.bottom])

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nodes": [
                {
                    "label": self.labels[i],
                    "basis": sorted(self.bases[i]),
                    "restriction_set": sorted(self.rsets[i]),
                    "rank": self.rank(i),
                }
                for i in range(len(self.rsets))
            ],
            "cover_edges": [
                [i, j] for i in range(len(self.rsets)) for j in self.covers[i]
            ],
        }


def build_poset(rs: RestrictionSets) -> RestrictionPoset:
    """Containment order on the restriction sets of a verified shelling."""
    seen: dict[frozenset[int], int] = {}
    for pos, s in enumerate(rs.rsets):
        if s in seen:
            raise DuplicateRestrictionSets(
                f"positions {seen[s]} and {pos} share the restriction set {sorted(s)}"
            )
        seen[s] = pos
    return RestrictionPoset(
        n=rs.n,
        bases=rs.order,
        rsets=rs.rsets,
        labels=tuple(range(len(rs.rsets))),
    )


@dataclass(frozen=True)
class StructureReport:
    graded: bool
    greedoid: bool
    lattice_after_top: bool
    atoms_ok: bool
    maximal_ranks: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "graded": self.graded,
            "greedoid": self.greedoid,
            "lattice_after_top": self.lattice_after_top,
            "atoms_ok": self.atoms_ok,
            "maximal_ranks": list(self.maximal_ranks),
        }


def check_structure(p: RestrictionPoset) -> StructureReport:
    """Gradedness, greedoid augmentation, lattice-after-top, atom pattern.

    graded: every cover step raises the restriction-set size by exactly one.
    greedoid: whenever |R| < |R'| there is b in R' - R with R + b again a
    restriction set.  lattice_after_top: with an artificial maximum adjoined,
    every pair has a join and a meet.  atoms_ok: the atoms are exactly the
    bases whose restriction set is a singleton {v} with v neither a loop nor
    in the first basis, one atom per such v.
    """
    n = len(p)
    graded = all(p.rank(j) == p.rank(i) + 1 for i in range(n) for j in p.covers[i])

    family = set(p.rsets)
    greedoid = True
    for i in range(n):
        for j in range(n):
            if len(p.rsets[i]) < len(p.rsets[j]):
                if not any(p.rsets[i] | {b} in family for b in p.rsets[j] - p.rsets[i]):
                    greedoid = False
                    break
        if not greedoid:
            break

    # lattice after adjoining an artificial maximum (index n)
    TOP = n

    def ext_leq(a: int, b: int) -> bool:
        if b == TOP:
            return True
        if a == TOP:
            return False
        return p.leq[a][b]

    lattice = True
    for i in range(n):
        if not lattice:
            break
        for j in range(i + 1, n):
            common_up = [u for u in range(n + 1) if ext_leq(i, u) and ext_leq(j, u)]
            minimal_up = [
                u for u in common_up if not any(v != u and ext_leq(v, u) for v in common_up)
            ]
            common_low = [l for l in range(n) if ext_leq(l, i) and ext_leq(l, j)]
            maximal_low = [
                l for l in common_low if not any(v != l and ext_leq(l, v) for v in common_low)
            ]
            if len(minimal_up) != 1 or len(maximal_low) != 1:
                lattice = False
                break

    first_basis = p.bases[p.bottom]
    used = frozenset().union(*p.bases) if p.bases else frozenset()
    loops = frozenset(range(p.n)) - used
    expected_atoms = frozenset(range(p.n)) - first_basis - loops
    atom_sets = [p.rsets[i] for i in p.atoms()]
    atoms_ok = (
        all(len(s) == 1 for s in atom_sets)
        and len(atom_sets) == len(expected_atoms)
        and frozenset().union(*atom_sets) == expected_atoms
        if atom_sets
        else not expected_atoms
    )

    maximal_ranks = tuple(sorted(p.rank(i) for i in p.maximal_elements()))
    return StructureReport(
        graded=graded,
        greedoid=greedoid,
        lattice_after_top=lattice,
        atoms_ok=atoms_ok,
        maximal_ranks=maximal_ranks,
    )


@dataclass(frozen=True)
class GaleOrientation:
    """Acyclic orientation of the polytope graph induced by a basis order."""

    graph: PolytopeGraph
    arcs: tuple[tuple[int, int], ...]  # (earlier, later)

    @cached_property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        """Reachability matrix (the induced poset as a relation)."""
        nb = self.graph.node_count
        adj: list[set[int]] = [set() for _ in range(nb)]
        for a, b in self.arcs:
            adj[a].add(b)
        rows = []
        for s in range(nb):
            row = [False] * nb
            row[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not row[y]:
                        row[y] = True
                        stack.append(y)
            rows.append(tuple(row))
        return tuple(rows)

    def source_indices(self) -> list[int]:
        heads = {b for _, b in self.arcs}
        return [i for i in range(self.graph.node_count) if i not in heads]

    def sink_indices(self) -> list[int]:
        tails = {a for a, _ in self.arcs}
        return [i for i in range(self.graph.node_count) if i not in tails]


def gale_order(m: Matroid, order) -> GaleOrientation:
    """Orient each polytope edge from the earlier to the later basis.

    Accepts a complete basis order, a sweep, or a generic functional (whose
    weight order is used).  The inducing order is a linear extension of the
    resulting poset by construction; ``CyclicOrientation`` guards against
    corrupted input.
    """
    if isinstance(order, Functional):
        order = line_shelling_order(m, order)
    elif hasattr(order, "order"):
        order = order.order
    if sorted(order) != list(range(len(m.bases))):
        raise BadParameters("gale orientation needs a complete basis order")
    pos = {b: k for k, b in enumerate(order)}
    _, graph = vertices_and_graph(m)
    oriented = tuple((i, j) if pos[i] < pos[j] else (j, i) for i, j in graph.edges)
    for a, b in oriented:
        if not pos[a] < pos[b]:
            raise CyclicOrientation("orientation disagrees with the inducing order")
    return GaleOrientation(graph=graph, arcs=oriented)


def internal_poset(m: Matroid, ground_order: Sequence[int]) -> RestrictionPoset:
    """Internal-activity poset of a ground order, via the induced weight order."""
    ips = {i: internally_passive_set(m, ground_order, m.bases[i]) for i in range(len(m.bases))}
    order = sorted(range(len(m.bases)), key=lambda i: (len(ips[i]), sorted(m.bases[i])))
    return RestrictionPoset(
        n=m.n,
        bases=tuple(m.bases[i] for i in order),
        rsets=tuple(ips[i] for i in order),
        labels=tuple(range(len(order))),
    )


def random_linear_extension(p: RestrictionPoset, rng: Random) -> list[int]:
    """Uniformly pick a minimal available element at every step."""
    n = len(p)
    placed: list[int] = []
    remaining = set(range(n))
    while remaining:
        available = [
            i for i in remaining if all(j not in remaining for j in range(n) if j != i and p.leq[j][i])
        ]
        placed.append(rng.choice(sorted(available)))
        remaining.discard(placed[-1])
    return placed


def linear_extension_shelling_check(
    m: Matroid, ground_order: Sequence[int], trials: int, seed: int
) -> tuple[bool, list[frozenset[int]] | None]:
    """Sample linear extensions of the internal-activity poset; all must shell.

    Returns (True, None) when every sampled extension passes the direct
    shelling check, else (False, the offending facet order).
    """
    p = internal_poset(m, ground_order)
    rng = Random(seed)
    for _ in range(trials):
        ext = random_linear_extension(p, rng)
        order = [p.bases[i] for i in ext]
        ok, _ = is_shelling(m, order)
        if not ok:
            return False, order
    return True, None


def poset_isomorphic(p: RestrictionPoset, q: RestrictionPoset) -> bool:
    """Exact isomorphism test by rank-partitioned backtracking."""
    if len(p) > MAX_ISO_ELEMENTS or len(q) > MAX_ISO_ELEMENTS:
        raise TooLarge(f"isomorphism test bounded to {MAX_ISO_ELEMENTS} elements")
    n = len(p)
    if n != len(q):
        return False

    def signature(poset: RestrictionPoset, i: int) -> tuple:
        up = [poset.rank(j) for j in range(len(poset)) if poset.leq[i][j] and j != i]
        down = [poset.rank(j) for j in range(len(poset)) if poset.leq[j][i] and j != i]
        return (poset.rank(i), tuple(sorted(up)), tuple(sorted(down)))

    sig_p = [signature(p, i) for i in range(n)]
    sig_q = [signature(q, i) for i in range(n)]
    if sorted(sig_p) != sorted(sig_q):
        return False

    order = sorted(range(n), key=lambda i: (sig_p[i], i))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if j in used or sig_q[j] != sig_p[i]:
                continue
            ok = True
            for i2, j2 in mapping.items():
                if p.leq[i][i2] != q.leq[j][j2] or p.leq[i2][i] != q.leq[j2][j]:
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used.add(j)
                if backtrack(k + 1):
                    return True
                del mapping[i]
                used.discard(j)
        return False

    return backtrack(0)
