"""Shelling verification, restriction sets and internal activity.

A facet order F_1 < ... < F_k of the independence complex is a shelling when
every facet meets the union of its predecessors in a pure codimension-one
complex; the faces added at step j then form the interval [R(F_j), F_j] for a
unique minimal new face R(F_j), the restriction set.  For matroids the
restriction sets of weight-induced orders coincide with internally passive
sets, which is what makes such orders computable without storing faces.

The polytopal checker decides whether a basis order, read as a facet order of
the dual matroid polytope, shells the dual polytope boundary in the recursive
sense: each intersection with the earlier facets must be a nonempty pure
union of facets orderable as the start of a shelling of the facet's boundary,
with polygons reducing to contiguous arcs.  It runs on the exact face lattice
with exhaustive backtracking, so it is only offered at small ground sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadParameters,
    NonGenericFunctional,
    NotABasis,
    NotAnIdeal,
    NotAPartialShelling,
    NotAShellingStep,
)
from .matroid import Matroid
from .polytope import FaceLattice, Functional, basis_weights, face_lattice_oracle, sign_vector

FacetOrder = tuple[int, ...]  # basis indices into Matroid.bases


def resolve_order(m: Matroid, order: Sequence) -> FacetOrder:
    """Accept an order given as basis indices or explicit element collections."""
    out = []
    for item in order:
        if isinstance(item, int):
            if not 0 <= item < len(m.bases):
                raise BadParameters(f"basis index {item} out of range")
            out.append(item)
        else:
            b = frozenset(item)
            if b not in m.basis_index:
                raise NotABasis(f"{sorted(b)} is not a basis")
            out.append(m.basis_index[b])
    if len(set(out)) != len(out):
        raise BadParameters("facet order repeats a basis")
    return tuple(out)


def is_shelling(m: Matroid, order: Sequence) -> tuple[bool, int | None]:
    """Verdict plus the first failing step (1-indexed), None when valid.

    A strict prefix of the bases is accepted and validated as a partial
    shelling.  Step j is valid iff every earlier intersection F_i * F_j is
    contained in some F_k * F_j (k < j) of size r - 1.
    """
    idx = resolve_order(m, order)
    masks = [m.masks[i] for i in idx]
    r = m.r
    for j in range(1, len(masks)):
        fj = masks[j]
        ridges = [masks[k] & fj for k in range(j) if bin(masks[k] & fj).count("1") == r - 1]
        for i in range(j):
            inter = masks[i] & fj
            if not any(inter & rd == inter for rd in ridges):
                return False, j + 1
    return True, None


@dataclass(frozen=True)
class RestrictionSets:
    """Restriction sets of a verified (partial) shelling, in order."""

    n: int
    order: tuple[frozenset[int], ...]
    rsets: tuple[frozenset[int], ...]

    def by_basis(self) -> dict[frozenset[int], frozenset[int]]:
        return dict(zip(self.order, self.rsets))

    def size_histogram(self, length: int | None = None) -> tuple[int, ...]:
        """Counts by restriction-set size, zero-padded to ``length`` entries
        (coloops make the top h-coefficients vanish)."""
        top = max((len(s) for s in self.rsets), default=0)
        out = [0] * max(top + 1, length or 0)
        for s in self.rsets:
            out[len(s)] += 1
        return tuple(out)


def restriction_sets(m: Matroid, order: Sequence, verify: bool = True) -> RestrictionSets:
    """R(F_j) = {x in F_j : F_j - x lies in an earlier facet}.

    With ``verify`` (the default) the interval property of every step is
    checked first and ``NotAShellingStep`` raised on the first failure.
    """
    idx = resolve_order(m, order)
    if verify:
        ok, step = is_shelling(m, idx)
        if not ok:
            raise NotAShellingStep(step)
    rsets = []
    for j, bi in enumerate(idx):
        earlier = [m.masks[k] for k in idx[:j]]
        rs = set()
        for x in m.bases[bi]:
            stripped = m.masks[bi] & ~(1 << x)
            if any(stripped & e == stripped for e in earlier):
                rs.add(x)
        rsets.append(frozenset(rs))
    return RestrictionSets(
        n=m.n,
        order=tuple(m.bases[i] for i in idx),
        rsets=tuple(rsets),
    )


def internally_passive_set(m: Matroid, ground_order: Sequence[int], basis: Iterable[int]) -> frozenset[int]:
    """Elements of the basis replaceable by a smaller element outside it.

    ``ground_order`` lists the elements from smallest to largest.
    """
    b = frozenset(basis)
    if b not in m.basis_index:
        raise NotABasis(f"{sorted(b)} is not a basis")
    if sorted(ground_order) != list(range(m.n)):
        raise BadParameters("ground_order must be a permutation of the ground set")
    pos = {e: i for i, e in enumerate(ground_order)}
    bmask = m.masks[m.basis_index[b]]
    passive = set()
    for x in b:
        stripped = bmask & ~(1 << x)
        for y in range(m.n):
            if y in b or pos[y] >= pos[x]:
                continue
            if stripped | (1 << y) in m.mask_set:
                passive.add(x)
                break
    return frozenset(passive)


def line_shelling_order(m: Matroid, f: Functional) -> FacetOrder:
    """Bases sorted by increasing weight under a generic functional.

    Ties are rejected (``NonGenericFunctional`` naming the first tied pair in
    the fixed pair enumeration); the sweep machinery offers the deterministic
    tie-broken weight order for non-generic functionals.
    """
    sv = sign_vector(m, f)
    if not sv.generic:
        raise NonGenericFunctional(pair=sv.first_zero_pair(m))
    w = basis_weights(m, f)
    return tuple(sorted(range(len(m.bases)), key=lambda i: w[i]))


def weight_order(m: Matroid, f: Functional) -> FacetOrder:
    """Bases sorted by (weight, lexicographic basis) — always a shelling.

    Sorting by weight alone linearly extends the internal-activity poset of
    the element order induced by ``f`` whenever basis weights are distinct;
    on a weight tie, comparable bases would have componentwise equal
    coordinate values, so breaking ties by the sorted element tuples still
    produces a linear extension.  Hence this order shells the complex and its
    restriction sets are the internally passive sets for ``f``'s element
    order, whether or not ``f`` is generic.
    """
    w = basis_weights(m, f)
    return tuple(sorted(range(len(m.bases)), key=lambda i: (w[i], sorted(m.bases[i]))))


def extend_partial_shelling(m: Matroid, prefix: Sequence, ground_order: Sequence[int]) -> FacetOrder:
    """Complete a partial shelling whose prefix set is an order ideal.

    If the prefix set is downward closed in the internal-activity poset of
    ``ground_order``, appending the remaining bases by (passive-set size,
    lexicographic basis) — a linear extension of passive-set containment —
    yields a full shelling.  Raises ``NotAPartialShelling`` if the prefix is
    not a partial shelling, ``NotAnIdeal`` if the sufficient condition fails
    (in which case nothing is claimed about extendability).
    """
    idx = resolve_order(m, prefix)
    ok, step = is_shelling(m, idx)
    if not ok:
        raise NotAPartialShelling(f"prefix fails the shelling condition at step {step}")
    ips = {i: internally_passive_set(m, ground_order, m.bases[i]) for i in range(len(m.bases))}
    chosen = set(idx)
    for p in idx:
        for b in range(len(m.bases)):
            if b not in chosen and ips[b] <= ips[p]:
                raise NotAnIdeal(
                    f"basis {sorted(m.bases[b])} lies below {sorted(m.bases[p])} but is missing from the prefix"
                )
    rest = sorted(
        (b for b in range(len(m.bases)) if b not in chosen),
        key=lambda b: (len(ips[b]), sorted(m.bases[b])),
    )
    full = idx + tuple(rest)
    ok, step = is_shelling(m, full)
    assert ok, f"ideal completion must shell, failed at step {step}"
    return full


# ---------------------------------------------------------------------------
# Polytopal shellings of the dual polytope
# ---------------------------------------------------------------------------


class PolytopalChecker:
    """Shelling oracle for the boundary of the dual matroid polytope.

    Facets of the dual polytope correspond to vertices of the matroid
    polytope, and more generally the faces of the dual polytope contained in
    the dual facet of a vertex correspond, order-reversed, to the faces of
    the primal lattice containing that vertex.  A dual face is therefore
    represented here by its primal face (a frozenset of vertex indices).
    Extendability states are memoised per dual face, so repeated queries
    against one matroid share almost all of the search.
    """

    def __init__(self, m: Matroid, lattice: FaceLattice | None = None):
        self.m = m
        self.lattice = lattice if lattice is not None else face_lattice_oracle(m)
        self.top = frozenset(range(len(m.bases)))
        self._join_cache: dict[tuple[frozenset, frozenset], frozenset] = {}
        self._extend_memo: dict[tuple[frozenset, frozenset], bool] = {}
        self._segment_memo: dict[tuple[frozenset, frozenset], bool] = {}

    # -- primal-lattice helpers -------------------------------------------

    def _rank(self, face: frozenset[int]) -> int:
        return self.lattice.ranks[self.lattice.index[face]]

    def _join(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        key = (a, b) if (len(a), sorted(a)) <= (len(b), sorted(b)) else (b, a)
        j = self._join_cache.get(key)
        if j is None:
            j = self.lattice.join(a, b)
            self._join_cache[key] = j
        return j

    def _dual_dim(self, face: frozenset[int]) -> int:
        # dual(face) has dimension dim(P) - 1 - dim(face) = dim(P) - rank(face)
        return self.lattice.dim - self._rank(face)

    def _dual_facet_reps(self, face: frozenset[int]) -> list[frozenset[int]]:
        """Primal faces representing the facets of dual(face): proper covers."""
        return [g for g in self.lattice.covers[face] if g != self.top]

    def _adjacent(self, a: frozenset[int], b: frozenset[int]) -> bool:
        """Facets dual(a), dual(b) of a common dual face meet in a ridge iff
        the primal join sits exactly one rank above them."""
        j = self._join(a, b)
        return j != self.top and self._rank(j) == self._rank(a) + 1

    # -- recursive shelling search on dual boundaries ----------------------

    def _ok_to_add(self, placed: frozenset[frozenset[int]], new: frozenset[int]) -> bool:
        """Shelling step: may dual(new) follow the facet set dual(placed)?"""
        if not placed:
            return True
        shared = [g for g in self._dual_facet_reps(new) if any(p < g for p in placed)]
        if not shared:
            return False
        # purity: every dual face in dual(new)'s intersection with the placed
        # union (primal faces above `new` meeting a placed face) must lie in
        # one of the shared codimension-one faces
        for h in self.lattice.faces:
            if h == self.top or not new < h:
                continue
            if any(p <= h for p in placed) and not any(g <= h for g in shared):
                return False
        return self._is_initial_segment(new, frozenset(shared))

    def _is_initial_segment(self, face: frozenset[int], segment: frozenset[frozenset[int]]) -> bool:
        """Can dual(segment) be ordered as the start of a shelling of the
        boundary of dual(face)?"""
        d = self._dual_dim(face)
        if d <= 1:
            # boundary is at most two points; any nonempty start extends
            return bool(segment)
        facets = self._dual_facet_reps(face)
        if d == 2:
            # polygon: contiguous arc (or the full cycle)
            if not segment:
                return False
            if len(segment) == len(facets):
                return True
            seg = list(segment)
            reached = {seg[0]}
            frontier = [seg[0]]
            while frontier:
                x = frontier.pop()
                for y in seg:
                    if y not in reached and self._adjacent(x, y):
                        reached.add(y)
                        frontier.append(y)
            return len(reached) == len(seg)
        key = (face, segment)
        hit = self._segment_memo.get(key)
        if hit is None:
            hit = self._reach(face, frozenset(), segment, frozenset(facets), set())
            self._segment_memo[key] = hit
        return hit

    def _reach(
        self,
        face: frozenset[int],
        placed: frozenset[frozenset[int]],
        remaining: frozenset[frozenset[int]],
        all_facets: frozenset[frozenset[int]],
        dead: set[frozenset[frozenset[int]]],
    ) -> bool:
        """Place exactly `remaining` (in some shellable order), then extend."""
        if not remaining:
            return self._extendable(face, placed, all_facets)
        if placed in dead:
            return False
        for nxt in sorted(remaining, key=sorted):
            if self._ok_to_add(placed, nxt):
                if self._reach(face, placed | {nxt}, remaining - {nxt}, all_facets, dead):
                    return True
        dead.add(placed)
        return False

    def _extendable(
        self,
        face: frozenset[int],
        placed: frozenset[frozenset[int]],
        all_facets: frozenset[frozenset[int]],
    ) -> bool:
        """Can the placed facet set be completed to a full boundary shelling?"""
        if placed == all_facets:
            return True
        key = (face, placed)
        hit = self._extend_memo.get(key)
        if hit is not None:
            return hit
        result = False
        for nxt in sorted(all_facets - placed, key=sorted):
            if self._ok_to_add(placed, nxt) and self._extendable(face, placed | {nxt}, all_facets):
                result = True
                break
        self._extend_memo[key] = result
        return result

    # -- top level ---------------------------------------------------------

    def check(self, order: Sequence[int]) -> tuple[bool, int | None]:
        """Is the complete basis order a shelling order of the dual polytope?

        Returns the verdict and the first failing step (1-indexed).
        """
        if sorted(order) != list(range(len(self.m.bases))):
            raise BadParameters("polytopal check needs a complete facet order")
        if self.lattice.dim <= 1:
            return True, None
        adjacency = self._vertex_adjacency()
        for j in range(1, len(order)):
            vj = order[j]
            vertex = frozenset([vj])
            shared = [
                self._join(vertex, frozenset([order[i]]))
                for i in range(j)
                if order[i] in adjacency[vj]
            ]
            if not shared:
                return False, j + 1
            earlier = set(order[:j])
            for h in self.lattice.faces:
                if h == self.top or vj not in h or len(h) < 2:
                    continue
                if earlier & h and not any(g <= h for g in shared):
                    return False, j + 1
            if not self._is_initial_segment(vertex, frozenset(shared)):
                return False, j + 1
        return True, None

    def _vertex_adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.m.bases))}
        for f, r in zip(self.lattice.faces, self.lattice.ranks):
            if r == 2:
                a, b = sorted(f)
                adj[a].add(b)
                adj[b].add(a)
        return adj


_checker_cache: dict[Matroid, PolytopalChecker] = {}


def polytopal_checker(m: Matroid) -> PolytopalChecker:
    chk = _checker_cache.get(m)
    if chk is None:
        chk = PolytopalChecker(m)
        _checker_cache[m] = chk
    return chk


def is_polytopal_shelling(m: Matroid, order: Sequence) -> bool:
    """Ziegler-style recursive check on the dual polytope (small n only)."""
    idx = resolve_order(m, order)
    ok, _ = polytopal_checker(m).check(idx)
    return ok
