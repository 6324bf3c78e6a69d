"""Matroids given by explicit basis lists.

A matroid is stored as its ground-set size ``n`` (elements ``0..n-1``) and
the set of bases.  Bases are kept in a canonical order (lexicographic on the
sorted element tuples) together with bitmask companions, so subset and
exchange tests are single machine-word operations.  Independence is decided
as "subset of some basis", which is equivalent to the usual definition for
matroids.  Ground sets are capped at 64 elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    BadParameters,
    DependentContraction,
    EmptyBases,
    NotAMatroid,
    OverlappingSets,
    RankMismatch,
)

MAX_GROUND = 64


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class Matroid:
    """Immutable matroid with canonical basis order.

    ``bases`` is sorted lexicographically by sorted element tuple; all
    indices used elsewhere in the package (facet orders, polytope vertices)
    refer to positions in this tuple.
    """

    n: int
    bases: tuple[frozenset[int], ...]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(b) for b in self.bases)

    @cached_property
    def mask_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    @cached_property
    def basis_index(self) -> dict[frozenset[int], int]:
        return {b: i for i, b in enumerate(self.bases)}

    @property
    def r(self) -> int:
        return len(self.bases[0])

    @cached_property
    def loops(self) -> frozenset[int]:
        used = 0
        for m in self.masks:
            used |= m
        return frozenset(e for e in range(self.n) if not used >> e & 1)

    def is_basis(self, s: Iterable[int]) -> bool:
        return frozenset(s) in self.basis_index

    def independent(self, s: Iterable[int]) -> bool:
        m = mask_of(s)
        return any(m & bm == m for bm in self.masks)

    def independent_sets(self) -> list[frozenset[int]]:
        """All independent sets, by brute-force subset enumeration."""
        out = {frozenset()}
        for b in self.bases:
            for k in range(1, len(b) + 1):
                out.update(map(frozenset, combinations(sorted(b), k)))
        return sorted(out, key=lambda s: (len(s), sorted(s)))

    def to_json(self) -> dict:
        return {"n": self.n, "bases": [sorted(b) for b in self.bases]}

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, r={self.r}, bases={len(self.bases)})"


def _check_exchange(bases: Sequence[frozenset[int]], masks: Sequence[int]) -> tuple[frozenset, frozenset] | None:
    """Return a violating pair of bases, or None if the exchange axiom holds."""
    mask_set = set(masks)
    for i, bi in enumerate(masks):
        for j, bj in enumerate(masks):
            if i == j:
                continue
            diff = bi & ~bj
            e = diff
            while e:
                b = e & -e
                e ^= b
                stripped = bi ^ b
                cand = bj & ~bi
                found = False
                f = cand
                while f:
                    c = f & -f
                    f ^= c
                    if stripped | c in mask_set:
                        found = True
                        break
                if not found:
                    return bases[i], bases[j]
    return None


def from_bases(n: int, bases: Iterable[Iterable[int]]) -> Matroid:
    """Validate a basis list and build a :class:`Matroid`.

    Raises ``EmptyBases``, ``RankMismatch``, ``BadParameters`` (out-of-range
    elements or oversized ground set) or ``NotAMatroid`` (exchange axiom
    fails).
    """
    if n < 1 or n > MAX_GROUND:
        raise BadParameters(f"ground-set size must be in 1..{MAX_GROUND}, got {n}")
    blist = sorted({frozenset(b) for b in bases}, key=lambda b: sorted(b))
    if not blist:
        raise EmptyBases("a matroid needs at least one basis")
    sizes = {len(b) for b in blist}
    if len(sizes) != 1:
        raise RankMismatch(f"bases of unequal cardinality: sizes {sorted(sizes)}")
    for b in blist:
        for e in b:
            if not 0 <= e < n:
                raise BadParameters(f"element {e} outside ground set 0..{n - 1}")
    masks = [mask_of(b) for b in blist]
    bad = _check_exchange(blist, masks)
    if bad is not None:
        raise NotAMatroid(f"exchange axiom fails for bases {sorted(bad[0])} and {sorted(bad[1])}")
    return Matroid(n=n, bases=tuple(blist))


def from_json(data: dict) -> Matroid:
    return from_bases(int(data["n"]), data["bases"])


def uniform(n: int, k: int) -> Matroid:
    """Uniform matroid: every k-subset of 0..n-1 is a basis."""
    if not 0 < k <= n or n > MAX_GROUND:
        raise BadParameters(f"need 0 < k <= n <= {MAX_GROUND}, got n={n}, k={k}")
    return Matroid(n=n, bases=tuple(frozenset(c) for c in combinations(range(n), k)))


def graphic(vertex_count: int, edges: Sequence[tuple[int, int]]) -> Matroid:
    """Graphic matroid of a multigraph; edge i becomes ground element i.

    Bases are the maximal spanning forests.  Self-loops become matroid loops.
    """
    if vertex_count < 1 or not 0 < len(edges) <= MAX_GROUND:
        raise BadParameters("need at least one vertex and 1..64 edges")
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise BadParameters(f"edge ({u},{v}) outside vertex range")
    m = len(edges)

    def forest_rank(subset: Iterable[int]) -> int:
        parent = list(range(vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        rank = 0
        for i in subset:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                rank += 1
        return rank

    full_rank = forest_rank(range(m))
    bases = [
        frozenset(c)
        for c in combinations(range(m), full_rank)
        if forest_rank(c) == full_rank
    ]
    return Matroid(n=m, bases=tuple(sorted(bases, key=sorted)))


def catalan(rank: int) -> Matroid:
    """Catalan matroid of the given rank on 2*rank elements.

    Bases are the sets {b_1 < ... < b_rank} with b_i <= 2i - 1 (elements
    0-indexed, positions 1-indexed); equivalently the up-step sets of ballot
    paths.
    """
    if rank < 1 or 2 * rank > MAX_GROUND:
        raise BadParameters(f"rank must be in 1..{MAX_GROUND // 2}, got {rank}")
    n = 2 * rank
    bases = [
        frozenset(c)
        for c in combinations(range(n), rank)
        if all(c[i] <= 2 * i + 1 for i in range(rank))
    ]
    return Matroid(n=n, bases=tuple(sorted(bases, key=sorted)))


def minor(m: Matroid, contract: Iterable[int], restrict_to: Iterable[int]) -> tuple[Matroid, tuple[int, ...]]:
    """Contract an independent set, then restrict to a disjoint element set.

    Returns the minor on relabelled ground set 0..len(restrict_to)-1 together
    with the element map (new index -> original element), so callers can
    translate results back to the original labels.
    """
    cset = frozenset(contract)
    rset = frozenset(restrict_to)
    if cset & rset:
        raise OverlappingSets(f"contract and restriction sets overlap: {sorted(cset & rset)}")
    if not rset <= frozenset(range(m.n)) or not cset <= frozenset(range(m.n)):
        raise BadParameters("contract/restrict elements outside ground set")
    if not m.independent(cset):
        raise DependentContraction(f"{sorted(cset)} is dependent, cannot contract")
    elem_map = tuple(sorted(rset))
    cmask = mask_of(cset)

    def minor_independent(subset_mask: int) -> bool:
        full = subset_mask | cmask
        return any(full & bm == full for bm in m.masks)

    # maximal independent sets of the minor, found by rank-descending scan
    elems = list(elem_map)
    for k in range(len(elems), -1, -1):
        bases = []
        for combo in combinations(range(len(elems)), k):
            if minor_independent(mask_of(elems[i] for i in combo)):
                bases.append(frozenset(combo))
        if bases:
            return Matroid(n=len(elems), bases=tuple(sorted(bases, key=sorted))), elem_map
    raise AssertionError("unreachable: empty set is always independent")


def f_vector(m: Matroid) -> tuple[int, ...]:
    """(f_-1, f_0, ..., f_{r-1}): face counts of the independence complex."""
    counts = [0] * (m.r + 1)
    for s in m.independent_sets():
        counts[len(s)] += 1
    return tuple(counts)


@dataclass(frozen=True)
class HVector:
    coefficients: tuple[int, ...]

    def polynomial(self) -> tuple[int, ...]:
        return self.coefficients

    def __iter__(self):
        return iter(self.coefficients)

    def total(self) -> int:
        return sum(self.coefficients)


def h_vector(m: Matroid) -> HVector:
    """h-vector of the independence complex.

    Computed from the f-vector via sum_j f_{j-1} x^j (1-x)^{d+1-j} with
    d = r - 1, using exact integer arithmetic.
    """
    f = f_vector(m)
    d1 = m.r  # dim + 1
    h = [0] * (d1 + 1)
    for j, fj in enumerate(f):
        # expand f_{j-1} x^j (1-x)^{d1-j}
        coeff = 1
        for i in range(d1 - j + 1):
            h[j + i] += fj * coeff
            coeff = -coeff * (d1 - j - i) // (i + 1)
    assert all(c >= 0 for c in h), "h-vector of a matroid must be nonnegative"
    return HVector(tuple(h))
