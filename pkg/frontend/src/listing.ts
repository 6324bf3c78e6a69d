// Store listing grouped by poset-isomorphism class with per-class counts.

import type { PosetSummary } from "./types";

export interface IsoClassGroup {
    iso_class: number;
    posets: PosetSummary[];
    sweepCount: number;
}

export function groupByIsoClass(posets: PosetSummary[]): IsoClassGroup[] {
    const groups = new Map<number, IsoClassGroup>();
    for (const p of posets) {
        const g = groups.get(p.iso_class) ?? {
            iso_class: p.iso_class,
            posets: [],
            sweepCount: 0,
        };
        g.posets.push(p);
        g.sweepCount += p.sweeps.length;
        groups.set(p.iso_class, g);
    }
    return [...groups.values()].sort((a, b) => a.iso_class - b.iso_class);
}

export function structureBadges(p: PosetSummary): string[] {
    const s = p.structure;
    const badges: string[] = [];
    badges.push(s.graded ? "graded" : "not graded");
    badges.push(s.greedoid ? "greedoid" : "no greedoid");
    badges.push(s.lattice_after_top ? "lattice+top" : "no lattice");
    badges.push(p.labeling_status === "labeled" ? "pure multicomplex" : p.labeling_status.replace("_", " "));
    return badges;
}
