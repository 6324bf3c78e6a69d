// Payload shapes of the local JSON API. The UI performs no combinatorial
// computation: every verdict shown is taken verbatim from these payloads.

export interface MatroidInfo {
    n: number;
    bases: number[][];
    rank: number;
    basis_count: number;
}

export interface SweepRow {
    vertex: number[];
    order_swept: number;
    ip_set: number[];
    functional_decimal: string;
    functional_exact: string[];
}

export interface SweepPayload {
    id: number;
    rows: SweepRow[];
    regions: string[];
    valid: boolean;
    generic: boolean;
}

export interface PosetNode {
    label: number;
    basis: number[];
    restriction_set: number[];
    rank: number;
}

export interface StructureReport {
    graded: boolean;
    greedoid: boolean;
    lattice_after_top: boolean;
    atoms_ok: boolean;
    maximal_ranks: number[];
}

export interface LabelingPayload {
    status: "labeled" | "no_labeling" | "undecided";
    variables?: string[];
    monomials?: Record<string, string>;
    labels?: Record<string, number[]>;
    reason?: string;
    element?: number | null;
    blocked?: number[];
}

export interface PosetPayload {
    id: number;
    iso_class: number;
    sweeps: number[];
    n: number;
    nodes: PosetNode[];
    cover_edges: [number, number][];
    structure: StructureReport;
    labeling: LabelingPayload;
}

export interface PosetSummary {
    id: number;
    iso_class: number;
    sweeps: number[];
    size: number;
    structure: StructureReport;
    labeling_status: string;
}

export interface SearchRequest {
    vfav: number[];
    pivots: number[];
    limit: number;
    misses: number;
    w: string;
    seed: number;
    initial: string[] | null;
}

export interface SearchResponse {
    added: number;
    total: number;
}
