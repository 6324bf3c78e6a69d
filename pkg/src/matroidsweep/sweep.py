"""Pinned broken-line shelling search over the matroid polytope.

A sweep is a labelled vertex order v_1, ..., v_N together with one witness
functional per position.  The witness at position k must be (uniquely)
minimised at the base vertex v_1, must put v_1..v_{k-1} strictly below v_k
and v_{k+1}..v_N strictly above it, and the whole family then certifies that
the vertex order shells the independence complex, with the restriction set
at position k equal to the internally passive set of the basis under the
element order induced by that position's witness.

The search constructs witnesses one position at a time.  The default copies
the previous functional forward; at user-chosen pivot positions it samples
random pinned functionals that preserve the cut swept so far, producing at
most ``limit`` branches per pivot.  All arithmetic is exact: random
coefficients are rationals with denominator 10^6, so accept/reject decisions
are reproducible and every stored sweep is a checkable certificate.

Equal basis weights are tolerated only for explicitly supplied functionals
(the classical tables use small integer weights that tie): tied positions
must share one witness vector, and the order inside a tied block follows the
canonical (weight, lexicographic basis) key, which provably linearly extends
the internal-activity poset.  Randomly sampled functionals are required to
be fully generic.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random
from typing import Iterable, Sequence

from .errors import (
    BadParameters,
    ExhaustedMisses,
    InitialNotPinned,
    NonGenericFunctional,
    NotABasis,
    WitnessMismatch,
)
from .matroid import Matroid
from .matroid import from_json as matroid_from_json
from .polytope import Functional, basis_weights, sign_vector
from .shelling import RestrictionSets, internally_passive_set, is_shelling, restriction_sets

COORD_BOUND = 10**6
RAND_DENOMINATOR = 10**6


@dataclass(frozen=True)
class SearchParams:
    """Knobs of one search run; `pivots` are 1-indexed sweep positions."""

    vfav: frozenset[int]
    pivots: tuple[int, ...] = ()
    limit: int = 3
    misses: int = 50
    w: Fraction = Fraction(0)
    seed: int = 0
    initial: Functional | None = None

    def validate(self, m: Matroid) -> None:
        if self.vfav not in m.basis_index:
            raise NotABasis(f"vfav {sorted(self.vfav)} is not a basis")
        nb = len(m.bases)
        if list(self.pivots) != sorted(set(self.pivots)):
            raise BadParameters("pivots must be strictly increasing")
        if any(not 1 <= p <= nb - 1 for p in self.pivots):
            raise BadParameters(f"pivots must lie in 1..{nb - 1}")
        if self.limit < 1:
            raise BadParameters("limit must be at least 1")
        if self.misses < 1:
            raise BadParameters("misses must be at least 1")
        if self.w < 0:
            raise BadParameters("w must be nonnegative")
        if self.initial is not None and len(self.initial) != m.n:
            raise BadParameters("initial functional has the wrong length")

    def to_json(self) -> dict:
        return {
            "vfav": sorted(self.vfav),
            "pivots": list(self.pivots),
            "limit": self.limit,
            "misses": self.misses,
            "w": {"num": self.w.numerator, "den": self.w.denominator},
            "seed": self.seed,
            "initial": None if self.initial is None else self.initial.to_json(),
        }

    @staticmethod
    def from_json(data: dict) -> "SearchParams":
        return SearchParams(
            vfav=frozenset(data["vfav"]),
            pivots=tuple(data["pivots"]),
            limit=int(data["limit"]),
            misses=int(data["misses"]),
            w=Fraction(int(data["w"]["num"]), int(data["w"]["den"])),
            seed=int(data["seed"]),
            initial=None if data.get("initial") is None else Functional.from_json(data["initial"]),
        )


@dataclass(frozen=True)
class Sweep:
    """Vertex order plus one witness functional per position."""

    order: tuple[int, ...]
    witnesses: tuple[Functional, ...]

    @property
    def base_vertex(self) -> int:
        return self.order[0]

    def to_json(self, m: Matroid) -> dict:
        return {
            "order": list(self.order),
            "order_bases": [sorted(m.bases[i]) for i in self.order],
            "witnesses": [f.to_json() for f in self.witnesses],
        }

    @staticmethod
    def from_json(data: dict) -> "Sweep":
        return Sweep(
            order=tuple(data["order"]),
            witnesses=tuple(Functional.from_json(w) for w in data["witnesses"]),
        )


@dataclass(frozen=True)
class SweepValidation:
    ok: bool
    violation: str | None
    generic: bool

    def __bool__(self) -> bool:
        return self.ok


def _weight_key(m: Matroid, weights: Sequence[Fraction], i: int):
    return (weights[i], sorted(m.bases[i]))


def validate_sweep(m: Matroid, s: Sweep) -> SweepValidation:
    """Check pinning, cuts and genericity for every position.

    The verdict covers the certificate conditions: each witness uniquely
    minimised at the base vertex (condition 1), each position's vertex
    weakly above its predecessors and weakly below its successors with ties
    allowed only inside blocks sharing one witness vector and ordered by the
    canonical (weight, lexicographic basis) key (condition 2, which also
    confirms the order is the one the witnesses induce).  Full pairwise
    genericity of every witness (condition 3) is reported in ``generic`` but
    does not fail the verdict, since tied integer functionals still certify
    their tie-broken weight orders.
    """
    nb = len(m.bases)
    if sorted(s.order) != list(range(nb)) or len(s.witnesses) != nb:
        return SweepValidation(False, "order/witness shape mismatch", False)
    generic = True
    base = s.order[0]
    for k in range(nb):
        f = s.witnesses[k]
        w = basis_weights(m, f)
        if not sign_vector(m, f).generic:
            generic = False
        mins = [i for i in range(nb) if w[i] <= w[base]]
        if mins != [base]:
            return SweepValidation(
                False, f"condition 1: witness at position {k + 1} is not uniquely minimised at the base vertex", generic
            )
        wk = w[s.order[k]]
        for i in range(k):
            if w[s.order[i]] > wk:
                return SweepValidation(
                    False, f"condition 2: cut violated at position {k + 1} (earlier vertex above)", generic
                )
            if w[s.order[i]] == wk:
                if s.witnesses[i] != f or _weight_key(m, w, s.order[i]) >= _weight_key(m, w, s.order[k]):
                    return SweepValidation(
                        False, f"condition 2: unresolvable weight tie at position {k + 1}", generic
                    )
        for j in range(k + 1, nb):
            if w[s.order[j]] < wk:
                return SweepValidation(
                    False, f"condition 2: cut violated at position {k + 1} (later vertex below)", generic
                )
            if w[s.order[j]] == wk:
                if s.witnesses[j] != f or _weight_key(m, w, s.order[j]) <= _weight_key(m, w, s.order[k]):
                    return SweepValidation(
                        False, f"condition 2: unresolvable weight tie at position {k + 1}", generic
                    )
    return SweepValidation(True, None, generic)


def sweep_restriction_sets(m: Matroid, s: Sweep) -> RestrictionSets:
    """Restriction sets of a sweep: per-position internally passive sets.

    Position k contributes the internally passive set of its basis under the
    element order induced by that position's witness.  The result is always
    cross-checked against the direct face-interval computation on the vertex
    order; a disagreement raises ``WitnessMismatch`` (it would mean the sweep
    is not a valid certificate).
    """
    ips = []
    for k, bi in enumerate(s.order):
        order_elems = s.witnesses[k].element_order()
        ips.append(internally_passive_set(m, order_elems, m.bases[bi]))
    direct = restriction_sets(m, s.order, verify=True)
    for k in range(len(s.order)):
        if ips[k] != direct.rsets[k]:
            raise WitnessMismatch(
                f"position {k + 1}: passive set {sorted(ips[k])} disagrees with "
                f"restriction set {sorted(direct.rsets[k])}"
            )
    return RestrictionSets(n=m.n, order=direct.order, rsets=tuple(ips))


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------


def _stream(seed: int, label: str) -> Random:
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return Random(int.from_bytes(digest[:8], "big"))


def _unique_min(weights: Sequence[Fraction], vfav_idx: int) -> bool:
    wmin = weights[vfav_idx]
    return all(w > wmin for i, w in enumerate(weights) if i != vfav_idx)


def initial_functional(m: Matroid, vfav: Iterable[int], params: SearchParams) -> Functional:
    """First witness: user-supplied (validated) or rejection-sampled.

    A supplied functional must be uniquely minimised at ``vfav``; weight ties
    away from the minimum are tolerated (the sweep then follows the
    tie-broken weight order).  Sampled functionals draw integer coordinates
    in [-10^6, 10^6] and must additionally be fully generic; sampling gives
    up after ``misses`` attempts.
    """
    vset = frozenset(vfav)
    if vset not in m.basis_index:
        raise NotABasis(f"{sorted(vset)} is not a basis")
    vidx = m.basis_index[vset]
    if params.initial is not None:
        f = params.initial
        w = basis_weights(m, f)
        wmin = min(w)
        if w[vidx] > wmin:
            raise InitialNotPinned(
                f"initial functional is minimised at {sorted(m.bases[w.index(wmin)])}, not at {sorted(vset)}"
            )
        if not _unique_min(w, vidx):
            tied = next(m.bases[i] for i in range(len(w)) if i != vidx and w[i] == w[vidx])
            raise NonGenericFunctional(pair=(vset, tied), message="initial functional ties at the base vertex")
        return f
    rng = _stream(params.seed, "initial")
    for _ in range(params.misses):
        f = Functional.of([rng.randint(-COORD_BOUND, COORD_BOUND) for _ in range(m.n)])
        w = basis_weights(m, f)
        if _unique_min(w, vidx) and sign_vector(m, f).generic:
            return f
    raise ExhaustedMisses(f"no pinned generic functional found in {params.misses} attempts")


def _random_unit(rng: Random) -> Fraction:
    return Fraction(rng.randint(1, RAND_DENOMINATOR - 1), RAND_DENOMINATOR)


def pivot_candidates(
    m: Matroid,
    order_prefix: Sequence[int],
    current: Functional,
    params: SearchParams,
    rng: Random,
) -> list[Functional]:
    """New witnesses at a pivot: random cone samples filtered by the cut.

    Candidates have the form w * current + sum_i c_i (v_i - v_1) over all
    non-base vertices, with c_i random in (0, 1).  A candidate is accepted
    iff it is fully generic, uniquely minimised at the base vertex, keeps
    every already-swept vertex strictly below all remaining ones, and lies
    in a hyperplane-arrangement region distinct from every candidate already
    accepted at this branch point.  Positive scaling never changes a region,
    so the coefficients are left unnormalised.  Stops after ``misses``
    consecutive rejections or ``limit`` acceptances.
    """
    base = order_prefix[0]
    nb = len(m.bases)
    prefix = set(order_prefix)
    diffs = []
    for i in range(nb):
        if i == base:
            continue
        diffs.append(
            tuple(
                Fraction((1 if e in m.bases[i] else 0) - (1 if e in m.bases[base] else 0))
                for e in range(m.n)
            )
        )
    accepted: list[Functional] = []
    regions: set[str] = set()
    consecutive = 0
    while len(accepted) < params.limit and consecutive < params.misses:
        coords = [params.w * c for c in current.coords]
        for d in diffs:
            c = _random_unit(rng)
            coords = [a + c * b for a, b in zip(coords, d)]
        cand = Functional(tuple(coords))
        sv = sign_vector(m, cand)
        w = basis_weights(m, cand)
        ok = sv.generic and _unique_min(w, base)
        if ok:
            below = max(w[i] for i in prefix)
            above = min(w[i] for i in range(nb) if i not in prefix)
            ok = below < above
        if ok and sv.signs in regions:
            consecutive += 1
            continue
        if ok:
            regions.add(sv.signs)
            accepted.append(cand)
            consecutive = 0
        else:
            consecutive += 1
    return accepted


@dataclass
class SweepRecord:
    sweep: Sweep
    rsets: RestrictionSets
    regions: tuple[str, ...]  # one region hash per position

    def to_json(self, m: Matroid) -> dict:
        data = self.sweep.to_json(m)
        data["ip_sets"] = [sorted(s) for s in self.rsets.rsets]
        data["regions"] = list(self.regions)
        return data


def region_hashes(m: Matroid, s: Sweep) -> tuple[str, ...]:
    out = []
    for f in s.witnesses:
        out.append(hashlib.sha256(sign_vector(m, f).signs.encode()).hexdigest())
    return tuple(out)


@dataclass
class ResultStore:
    """Deduplicated collection of sweeps plus the parameter history."""

    matroid: Matroid
    sweeps: list[SweepRecord] = field(default_factory=list)
    history: list[dict] = field(default_factory=list)

    def region_keys(self) -> set[tuple[str, ...]]:
        return {rec.regions for rec in self.sweeps}

    def add(self, rec: SweepRecord) -> bool:
        """Merge one sweep; returns False when an equivalent sweep is stored."""
        if rec.regions in self.region_keys():
            return False
        self.sweeps.append(rec)
        return True

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "matroid": self.matroid.to_json(),
            "history": self.history,
            "sweeps": [rec.to_json(self.matroid) for rec in self.sweeps],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @staticmethod
    def from_json_file(path) -> "ResultStore":
        import pathlib

        from .errors import CorruptStore

        try:
            data = json.loads(pathlib.Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise CorruptStore(f"cannot read store file {path}: {exc}")
        return ResultStore.from_json(data)

    @staticmethod
    def from_json(data: dict) -> "ResultStore":
        from .errors import CorruptStore

        if not isinstance(data, dict) or data.get("schema") != 1:
            raise CorruptStore(f"unsupported store schema {data.get('schema') if isinstance(data, dict) else data!r}")
        m = matroid_from_json(data["matroid"])
        store = ResultStore(matroid=m, history=list(data.get("history", [])))
        for rec in data["sweeps"]:
            sweep = Sweep.from_json(rec)
            rsets = RestrictionSets(
                n=m.n,
                order=tuple(m.bases[i] for i in sweep.order),
                rsets=tuple(frozenset(s) for s in rec["ip_sets"]),
            )
            store.sweeps.append(SweepRecord(sweep=sweep, rsets=rsets, regions=tuple(rec["regions"])))
        return store


def _finish_record(m: Matroid, s: Sweep) -> SweepRecord:
    check = validate_sweep(m, s)
    assert check.ok, f"generated sweep failed validation: {check.violation}"
    ok, step = is_shelling(m, s.order)
    assert ok, f"generated sweep order fails the shelling condition at step {step}"
    rsets = sweep_restriction_sets(m, s)
    return SweepRecord(sweep=s, rsets=rsets, regions=region_hashes(m, s))


def run_search(m: Matroid, params: SearchParams, store: ResultStore | None = None) -> ResultStore:
    """Depth-first product over pivot branches, merged into the store.

    Non-pivot positions copy the witness forward; each pivot position opens
    up to ``limit`` branches.  A pivot that finds no acceptable candidate
    falls back to copying forward, so every search yields at least the
    weight order of its initial functional.  Runs are deterministic in
    (seed, params): every branch draws from its own stream derived from the
    seed and the branch path.
    """
    params.validate(m)
    if store is None:
        store = ResultStore(matroid=m)
    elif store.matroid != m:
        raise BadParameters("store was built for a different matroid")
    nb = len(m.bases)
    vidx = m.basis_index[params.vfav]
    first = initial_functional(m, params.vfav, params)
    pivots = set(params.pivots)

    def descend(order: list[int], witnesses: list[Functional], path: tuple[int, ...]) -> None:
        if len(order) == nb:
            store.add(_finish_record(m, Sweep(order=tuple(order), witnesses=tuple(witnesses))))
            return
        j = len(order)  # 1-indexed position of the last placed vertex
        if j in pivots:
            rng = _stream(params.seed, f"pivot@{j}:path={','.join(map(str, path))}")
            candidates = pivot_candidates(m, order, witnesses[-1], params, rng)
            if not candidates:
                candidates = [witnesses[-1]]
        else:
            candidates = [witnesses[-1]]
        for branch, f in enumerate(candidates):
            w = basis_weights(m, f)
            remaining = [i for i in range(nb) if i not in order]
            nxt = min(remaining, key=lambda i: (w[i], sorted(m.bases[i])))
            descend(order + [nxt], witnesses + [f], path + (branch,))

    descend([vidx], [first], ())
    store.history.append({"params": params.to_json()})
    return store


def sweep_from_witness_segments(
    m: Matroid,
    vfav: Iterable[int],
    segments: Sequence[tuple[int, Functional]],
) -> Sweep:
    """Build the sweep induced by explicit witnesses.

    ``segments`` maps 1-indexed start positions to functionals: position p
    uses the functional of the last segment starting at or before p.  The
    vertex order is derived by the sweep rule (next vertex = remaining vertex
    of least weight under the incoming witness, ties by lexicographic basis).
    This is how printed witness tables are ingested for validation.
    """
    vset = frozenset(vfav)
    if vset not in m.basis_index:
        raise NotABasis(f"{sorted(vset)} is not a basis")
    if not segments or segments[0][0] != 1:
        raise BadParameters("segments must start at position 1")
    starts = [p for p, _ in segments]
    if starts != sorted(set(starts)):
        raise BadParameters("segment positions must be strictly increasing")
    nb = len(m.bases)
    if starts[-1] > nb:
        raise BadParameters(f"segment position {starts[-1]} beyond the {nb} sweep positions")
    order = [m.basis_index[vset]]
    witnesses = [segments[0][1]]
    seg = 0
    for pos in range(2, nb + 1):
        if seg + 1 < len(segments) and segments[seg + 1][0] == pos:
            seg += 1
        f = segments[seg][1]
        w = basis_weights(m, f)
        remaining = [i for i in range(nb) if i not in order]
        order.append(min(remaining, key=lambda i: (w[i], sorted(m.bases[i]))))
        witnesses.append(f)
    return Sweep(order=tuple(order), witnesses=tuple(witnesses))
