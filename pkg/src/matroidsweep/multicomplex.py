"""Pure-multicomplex divisibility labelings and the h-vector decomposition.

A multicomplex is a set of monomials closed under divisibility; it is pure
when all maximal monomials share one degree.  Deciding whether a
restriction-set poset is the divisibility poset of a pure multicomplex comes
down to assigning an injective monomial to every element with degree equal
to its rank so that comparability coincides with divisibility.

Closure under division forces every variable to occur as a degree-one
label, so the variable set can be fixed to the atoms; and in a rank-graded
poset the degree-(k-1) divisors of an element's monomial must be exactly
the labels of its lower covers.  Conversely, this local condition plus
injectivity already implies the global equivalence of divisibility and
comparability (walk divisor chains one degree at a time), which keeps the
backtracking small.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import NotABasis, TooLarge
from .matroid import Matroid, h_vector, minor
from .poset import RestrictionPoset

MAX_LABELING_ELEMENTS = 30

Monomial = tuple[int, ...]  # exponents over the atom variables


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def codim_one_divisors(m: Monomial) -> list[Monomial]:
    out = []
    for i, e in enumerate(m):
        if e > 0:
            out.append(m[:i] + (e - 1,) + m[i + 1 :])
    return out


def all_divisors(m: Monomial) -> set[Monomial]:
    out = {m}
    frontier = [m]
    while frontier:
        x = frontier.pop()
        for d in codim_one_divisors(x):
            if d not in out:
                out.add(d)
                frontier.append(d)
    return out


def monomial_string(m: Monomial, names: list[str]) -> str:
    if degree(m) == 0:
        return "1"
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


@dataclass(frozen=True)
class MonomialLabeling:
    """Injective rank-to-degree monomial labels witnessing a pure multicomplex."""

    atom_elements: tuple[int, ...]  # ground element of each atom variable, in order
    labels: tuple[Monomial, ...]  # indexed like the poset elements

    def variable_names(self) -> list[str]:
        return [f"x{e}" for e in self.atom_elements]

    def to_json(self, p: RestrictionPoset) -> dict:
        return {
            "variables": [f"x{e}" for e in self.atom_elements],
            "atom_elements": list(self.atom_elements),
            "labels": {
                str(p.labels[i]): list(self.labels[i]) for i in range(len(self.labels))
            },
            "monomials": {
                str(p.labels[i]): monomial_string(self.labels[i], self.variable_names())
                for i in range(len(self.labels))
            },
        }


@dataclass(frozen=True)
class NoLabeling:
    """Certificate that no pure divisibility labeling exists."""

    reason: str
    element: int | None  # "order swept" label of the first blocked element
    rank: int | None
    blocked: tuple[int, ...]  # all labels at that rank with no candidates

    def to_json(self) -> dict:
        return {
            "reason": self.reason,
            "element": self.element,
            "rank": self.rank,
            "blocked": list(self.blocked),
        }


def find_pure_labeling(p: RestrictionPoset) -> MonomialLabeling | NoLabeling:
    """Backtracking search for a pure divisibility labeling, by rank.

    Atoms get one variable each; a rank-k element may take any degree-k
    monomial whose degree-(k-1) divisor set equals its lower covers' labels
    (such monomials are variable multiples of any one cover label).  Fails
    fast when the poset is not graded by restriction-set size or has a
    maximal element below the top rank, both of which rule out purity.
    """
    n = len(p)
    if n > MAX_LABELING_ELEMENTS:
        raise TooLarge(f"labeling search bounded to {MAX_LABELING_ELEMENTS} elements")
    top_rank = max(p.rank(i) for i in range(n))
    if any(p.rank(j) != p.rank(i) + 1 for i in range(n) for j in p.covers[i]):
        return NoLabeling(
            reason="poset is not graded by restriction-set size",
            element=None,
            rank=None,
            blocked=(),
        )
    bad_max = [i for i in p.maximal_elements() if p.rank(i) != top_rank]
    if bad_max:
        worst = min(bad_max, key=lambda i: (p.rank(i), p.labels[i]))
        return NoLabeling(
            reason="maximal element below the top rank, purity impossible",
            element=p.labels[worst],
            rank=p.rank(worst),
            blocked=tuple(sorted(p.labels[i] for i in bad_max)),
        )

    atoms = sorted(p.atoms(), key=lambda i: sorted(p.rsets[i]))
    nvars = len(atoms)
    var_of: dict[int, int] = {a: v for v, a in enumerate(atoms)}
    by_rank: dict[int, list[int]] = {}
    for i in range(n):
        by_rank.setdefault(p.rank(i), []).append(i)
    for r in by_rank:
        by_rank[r].sort(key=lambda i: p.labels[i])

    todo: list[int] = []
    for r in range(2, top_rank + 1):
        todo.extend(by_rank.get(r, []))

    labels: dict[int, Monomial] = {p.bottom: (0,) * nvars}
    for a in atoms:
        unit = [0] * nvars
        unit[var_of[a]] = 1
        labels[a] = tuple(unit)
    lower_covers: dict[int, list[int]] = {i: [] for i in range(n)}
    for i in range(n):
        for j in p.covers[i]:
            lower_covers[j].append(i)

    # separate records for "no candidate existed at all" (the informative
    # certificate) and "candidates existed but every branch failed deeper"
    first_empty: tuple[int, int, tuple[int, ...]] | None = None
    first_exhausted: tuple[int, int, tuple[int, ...]] | None = None

    def candidates(v: int, used: set[Monomial]) -> list[Monomial]:
        cover_labels = {labels[u] for u in lower_covers[v]}
        anchor = next(iter(cover_labels))
        cands = []
        for var in range(nvars):
            m = anchor[:var] + (anchor[var] + 1,) + anchor[var + 1 :]
            if m in used or m in cands:
                continue
            if set(codim_one_divisors(m)) == cover_labels:
                cands.append(m)
        return sorted(cands)

    def blocked_record(t: int) -> tuple[int, int, tuple[int, ...]]:
        v = todo[t]
        used = set(labels.values())
        siblings = [
            u for u in by_rank[p.rank(v)] if u not in labels and not candidates(u, used)
        ]
        blocked = tuple(sorted(p.labels[u] for u in siblings)) or (p.labels[v],)
        return (t, p.labels[v], blocked)

    def solve(t: int) -> bool:
        nonlocal first_empty, first_exhausted
        if t == len(todo):
            return True
        v = todo[t]
        cands = candidates(v, set(labels.values()))
        if not cands:
            if first_empty is None or t < first_empty[0]:
                first_empty = blocked_record(t)
            return False
        for m in cands:
            labels[v] = m
            if solve(t + 1):
                return True
            del labels[v]
        if first_exhausted is None or t < first_exhausted[0]:
            first_exhausted = blocked_record(t)
        return False

    if solve(0):
        return MonomialLabeling(
            atom_elements=tuple(next(iter(p.rsets[a])) for a in atoms),
            labels=tuple(labels[i] for i in range(n)),
        )
    assert first_empty is not None or first_exhausted is not None
    _, element, blocked = first_empty if first_empty is not None else first_exhausted
    rank = next(p.rank(i) for i in range(n) if p.labels[i] == element)
    return NoLabeling(
        reason="no monomial has exactly the lower covers' labels as its codimension-one divisors",
        element=element,
        rank=rank,
        blocked=blocked,
    )


def verify_labeling(p: RestrictionPoset, labeling: MonomialLabeling) -> tuple[bool, str | None]:
    """Re-check every labeling invariant from scratch.

    Independent of the search: injectivity, unit bottom, degree = rank,
    comparability equivalent to divisibility on all pairs, closure of the
    label set under divisibility, and purity of the maximal labels.
    """
    n = len(p)
    labels = labeling.labels
    if len(labels) != n:
        return False, "label count differs from poset size"
    if len(set(labels)) != n:
        seen: dict[Monomial, int] = {}
        for i, m in enumerate(labels):
            if m in seen:
                return False, (
                    f"labels of elements {p.labels[seen[m]]} and {p.labels[i]} collide"
                )
            seen[m] = i
    if degree(labels[p.bottom]) != 0:
        return False, "bottom element is not labeled by 1"
    for i in range(n):
        if degree(labels[i]) != p.rank(i):
            return False, f"element {p.labels[i]} has degree != rank"
    for i in range(n):
        for j in range(n):
            if p.leq[i][j] != divides(labels[i], labels[j]):
                return False, (
                    f"comparability and divisibility disagree on elements "
                    f"{p.labels[i]} and {p.labels[j]}"
                )
    label_set = set(labels)
    for m in labels:
        missing = all_divisors(m) - label_set
        if missing:
            return False, f"divisor {sorted(missing)[0]} of a label is not a label"
    maximal_degrees = {
        degree(m) for m in labels if not any(m != m2 and divides(m, m2) for m2 in labels)
    }
    if len(maximal_degrees) > 1:
        return False, f"maximal labels of different degrees {sorted(maximal_degrees)}"
    return True, None


def h_decomposition_identity(m: Matroid, basis: Iterable[int]) -> tuple[bool, list[dict]]:
    """Check h(M, t) = sum over independent I disjoint from B of t^|I| h((M/I)|_B, t).

    Every minor is computed explicitly and its h-vector recomputed from its
    f-vector, so the two sides are independent calculations.  Returns the
    verdict and a per-term table.
    """
    b = frozenset(basis)
    if b not in m.basis_index:
        raise NotABasis(f"{sorted(b)} is not a basis")
    outside = sorted(frozenset(range(m.n)) - b)
    lhs = h_vector(m).coefficients
    total = [0] * len(lhs)
    table = []
    for k in range(len(outside) + 1):
        for combo in combinations(outside, k):
            if not m.independent(combo):
                continue
            mm, _ = minor(m, combo, b)
            hm = h_vector(mm).coefficients
            for d, c in enumerate(hm):
                idx = k + d
                if c and idx >= len(total):
                    return False, table
                if idx < len(total):
                    total[idx] += c
            table.append({"contracted": list(combo), "minor_h": list(hm)})
    return list(lhs) == total, table
