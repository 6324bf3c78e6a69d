"""Store-level analysis: distinct posets, isomorphism grouping, labelings."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge
from .multicomplex import MonomialLabeling, NoLabeling, find_pure_labeling
from .poset import RestrictionPoset, StructureReport, build_poset, check_structure, poset_isomorphic
from .sweep import ResultStore


@dataclass
class PosetEntry:
    poset: RestrictionPoset
    sweep_ids: list[int]
    iso_class: int
    structure: StructureReport
    labeling: MonomialLabeling | NoLabeling | None  # None when too large to decide

    def labeling_json(self) -> dict:
        if isinstance(self.labeling, MonomialLabeling):
            return {"status": "labeled", **self.labeling.to_json(self.poset)}
        if isinstance(self.labeling, NoLabeling):
            return {"status": "no_labeling", **self.labeling.to_json()}
        return {"status": "undecided"}


def distinct_posets(store: ResultStore) -> list[PosetEntry]:
    """Group stored sweeps by exact restriction-set family, then by poset
    isomorphism; each family keeps its first sweep as provenance."""
    entries: list[PosetEntry] = []
    families: dict[frozenset, int] = {}
    for sid, rec in enumerate(store.sweeps):
        family = frozenset(zip(rec.rsets.order, rec.rsets.rsets))
        if family in families:
            entries[families[family]].sweep_ids.append(sid)
            continue
        poset = build_poset(rec.rsets)
        families[family] = len(entries)
        try:
            labeling = find_pure_labeling(poset)
        except TooLarge:
            labeling = None
        entries.append(
            PosetEntry(
                poset=poset,
                sweep_ids=[sid],
                iso_class=-1,
                structure=check_structure(poset),
                labeling=labeling,
            )
        )
    # isomorphism classes over the distinct families
    reps: list[int] = []
    for e in entries:
        assigned = False
        for cls, rep in enumerate(reps):
            try:
                same = poset_isomorphic(entries[rep].poset, e.poset)
            except TooLarge:
                same = False
            if same:
                e.iso_class = cls
                assigned = True
                break
        if not assigned:
            e.iso_class = len(reps)
            reps.append(entries.index(e))
    return entries
