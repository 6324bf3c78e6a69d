"""Matroid polytope geometry with exact rational arithmetic.

The polytope of a matroid is the convex hull of the 0/1 characteristic
vectors of its bases; its edges join bases differing by a single exchange.
Linear functionals are vectors of exact rationals, so every comparison of
vertex weights (and hence every genericity or cut decision) is exact.
Decimal strings such as "-6.54" are ingested as exact fractions (-654/100).

All vertices satisfy sum_e x_e = r, so adding a constant to every
coordinate of a functional never changes any weight difference; functionals
are therefore used unprojected and unnormalised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BadParameters, TooLarge
from .matroid import Matroid

RationalLike = Fraction | int | str


def _frac(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Functional:
    """Exact rational weight vector on the ground set."""

    coords: tuple[Fraction, ...]

    @staticmethod
    def of(values: Iterable[RationalLike]) -> "Functional":
        return Functional(tuple(_frac(v) for v in values))

    def __len__(self) -> int:
        return len(self.coords)

    def weight(self, elements: Iterable[int]) -> Fraction:
        return sum((self.coords[e] for e in elements), Fraction(0))

    def element_order(self) -> tuple[int, ...]:
        """Ground order induced by the functional (value, then index)."""
        return tuple(sorted(range(len(self.coords)), key=lambda e: (self.coords[e], e)))

    def scaled(self, c: RationalLike) -> "Functional":
        c = _frac(c)
        return Functional(tuple(c * x for x in self.coords))

    def plus(self, other: "Functional") -> "Functional":
        return Functional(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def negated(self) -> "Functional":
        return Functional(tuple(-x for x in self.coords))

    def to_json(self) -> list[dict]:
        return [{"num": c.numerator, "den": c.denominator} for c in self.coords]

    @staticmethod
    def from_json(data: Sequence) -> "Functional":
        coords = []
        for item in data:
            if isinstance(item, dict):
                coords.append(Fraction(int(item["num"]), int(item["den"])))
            else:
                coords.append(Fraction(str(item)))
        return Functional(tuple(coords))


def lex_binary_functional(n: int) -> Functional:
    """Weights 2^n - 2^(n-i) for element i; sorting basis weights gives the
    lexicographic basis order, and the negated functional gives its reverse."""
    return Functional.of([2**n - 2 ** (n - i) for i in range(n)])


def basis_weights(m: Matroid, f: Functional) -> tuple[Fraction, ...]:
    if len(f) != m.n:
        raise BadParameters(f"functional has {len(f)} coordinates, matroid has {m.n}")
    return tuple(f.weight(b) for b in m.bases)


@dataclass(frozen=True)
class PolytopeGraph:
    """Exchange graph: nodes are basis indices, edges the |B ^ B'| = 2 pairs."""

    node_count: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.node_count)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return tuple(frozenset(a) for a in adj)


def vertices_and_graph(m: Matroid) -> tuple[list[tuple[int, ...]], PolytopeGraph]:
    """Characteristic vectors (in canonical basis order) and the exchange graph."""
    verts = [tuple(1 if e in b else 0 for e in range(m.n)) for b in m.bases]
    edges = []
    for i, j in combinations(range(len(m.bases)), 2):
        if bin(m.masks[i] ^ m.masks[j]).count("1") == 2:
            edges.append((i, j))
    return verts, PolytopeGraph(node_count=len(m.bases), edges=tuple(edges))


def pair_enumeration(m: Matroid) -> list[tuple[int, int]]:
    """Fixed global order of basis pairs used by all sign vectors."""
    return list(combinations(range(len(m.bases)), 2))


@dataclass(frozen=True)
class SignVector:
    """Signs of all pairwise weight differences under the fixed pair order.

    ``signs[k]`` is '+', '-' or '0' for the k-th pair (i, j): the sign of
    weight(B_i) - weight(B_j).  Generic means no zero entry.
    """

    signs: str

    @property
    def generic(self) -> bool:
        return "0" not in self.signs

    def first_zero_pair(self, m: Matroid) -> tuple[frozenset, frozenset] | None:
        k = self.signs.find("0")
        if k < 0:
            return None
        i, j = pair_enumeration(m)[k]
        return m.bases[i], m.bases[j]


def sign_vector(m: Matroid, f: Functional) -> SignVector:
    w = basis_weights(m, f)
    chars = []
    for i, j in pair_enumeration(m):
        d = w[i] - w[j]
        chars.append("+" if d > 0 else "-" if d < 0 else "0")
    return SignVector("".join(chars))


MAX_ORACLE_GROUND = 8


def _ordered_partitions(elements: list[int]):
    """Yield all ordered set partitions as lists of blocks."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in _ordered_partitions(rest):
        # new singleton block in every gap, or join an existing block
        for pos in range(len(part) + 1):
            yield part[:pos] + [[first]] + part[pos:]
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


@dataclass(frozen=True)
class FaceLattice:
    """Face poset of the matroid polytope, faces as frozensets of vertex indices.

    Includes the empty face and the full polytope; graded by longest-chain
    rank, so ``dim(face) = rank - 1`` (the empty face has rank 0).
    """

    faces: tuple[frozenset[int], ...]

    @cached_property
    def index(self) -> dict[frozenset[int], int]:
        return {f: i for i, f in enumerate(self.faces)}

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        # faces are stored sorted by size, so one ascending pass suffices
        ranks = [0] * len(self.faces)
        for i, f in enumerate(self.faces):
            if not f:
                continue
            best = 0
            for j, g in enumerate(self.faces):
                if len(g) < len(f) and g < f:
                    best = max(best, ranks[j])
            ranks[i] = best + 1
        return tuple(ranks)

    @property
    def dim(self) -> int:
        return max(self.ranks) - 1

    def faces_by_dim(self) -> dict[int, list[frozenset[int]]]:
        out: dict[int, list[frozenset[int]]] = {}
        for f, r in zip(self.faces, self.ranks):
            out.setdefault(r - 1, []).append(f)
        return out

    @cached_property
    def covers(self) -> dict[frozenset[int], list[frozenset[int]]]:
        """face -> faces covering it (one rank up, containing it)."""
        out: dict[frozenset[int], list[frozenset[int]]] = {f: [] for f in self.faces}
        for f, rf in zip(self.faces, self.ranks):
            for g, rg in zip(self.faces, self.ranks):
                if rg == rf + 1 and f < g:
                    out[f].append(g)
        return out

    def join(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        """Smallest face containing both (the full polytope if none smaller)."""
        target = a | b
        best = None
        for f in self.faces:
            if target <= f and (best is None or len(f) < len(best)):
                best = f
        assert best is not None
        return best

    def to_json(self) -> dict:
        return {
            "faces": [sorted(f) for f in self.faces],
            "covers": [
                [self.index[g] for g in self.covers[f]] for f in self.faces
            ],
        }


def face_lattice_oracle(m: Matroid) -> FaceLattice:
    """Complete face poset of the polytope by braid-cone enumeration.

    Every normal cone of a matroid polytope is a union of braid cones, so
    scanning one representative functional per ordered partition of the
    ground set hits every face as an argmax vertex set.  Bounded to small
    ground sets (ordered Bell growth).
    """
    if m.n > MAX_ORACLE_GROUND:
        raise TooLarge(f"face enumeration bounded to n <= {MAX_ORACLE_GROUND}, got n={m.n}")
    nb = len(m.bases)
    found: set[frozenset[int]] = {frozenset(), frozenset(range(nb))}
    values = [0] * m.n
    for part in _ordered_partitions(list(range(m.n))):
        for level, block in enumerate(part):
            for e in block:
                values[e] = level
        weights = [sum(values[e] for e in b) for b in m.bases]
        top = max(weights)
        found.add(frozenset(i for i, w in enumerate(weights) if w == top))
    faces = sorted(found, key=lambda f: (len(f), sorted(f)))
    return FaceLattice(faces=tuple(faces))
