// Parameter form state: validated client-side against the matroid metadata
// before anything is POSTed. Pivot positions are chosen by clicking entries
// of the currently displayed sweep order rather than typing indices.

import type { MatroidInfo, SearchRequest } from "./types";

export interface FormState {
    vfav: number[];
    pivots: number[];
    limit: number;
    misses: number;
    w: string;
    seed: number;
    initial: string; // comma-separated rationals, empty for random
}

export function defaultForm(matroid: MatroidInfo): FormState {
    return {
        vfav: matroid.bases[0].slice(),
        pivots: [],
        limit: 3,
        misses: 50,
        w: "0",
        seed: 0,
        initial: "",
    };
}

const RATIONAL = /^-?\d+(\.\d+)?(\/\d+)?$/;

export function validateForm(state: FormState, matroid: MatroidInfo): string[] {
    const errors: string[] = [];
    const vfavKey = [...state.vfav].sort((a, b) => a - b).join(",");
    const isBasis = matroid.bases.some(
        (b) => [...b].sort((x, y) => x - y).join(",") === vfavKey,
    );
    if (!isBasis) errors.push(`vFav {${vfavKey}} is not a basis`);
    const maxPivot = matroid.basis_count - 1;
    const sorted = [...state.pivots].sort((a, b) => a - b);
    if (sorted.some((p, i) => i > 0 && sorted[i - 1] === p)) {
        errors.push("pivot positions must be distinct");
    }
    if (sorted.some((p) => p < 1 || p > maxPivot)) {
        errors.push(`pivot positions must lie in 1..${maxPivot}`);
    }
    if (!Number.isInteger(state.limit) || state.limit < 1) errors.push("limit must be a positive integer");
    if (!Number.isInteger(state.misses) || state.misses < 1) errors.push("misses must be a positive integer");
    if (!RATIONAL.test(state.w.trim()) || state.w.trim().startsWith("-")) {
        errors.push("w must be a nonnegative rational (e.g. 5 or 5/2 or 0.5)");
    }
    if (!Number.isInteger(state.seed)) errors.push("seed must be an integer");
    if (state.initial.trim() !== "") {
        const parts = state.initial.split(",").map((s) => s.trim());
        if (parts.length !== matroid.n) {
            errors.push(`initial functional needs ${matroid.n} coordinates`);
        } else if (parts.some((p) => !RATIONAL.test(p))) {
            errors.push("initial functional coordinates must be rationals");
        }
    }
    return errors;
}

export function toRequest(state: FormState): SearchRequest {
    const initial = state.initial.trim();
    return {
        vfav: [...state.vfav].sort((a, b) => a - b),
        pivots: [...state.pivots].sort((a, b) => a - b),
        limit: state.limit,
        misses: state.misses,
        w: state.w.trim(),
        seed: state.seed,
        initial: initial === "" ? null : initial.split(",").map((s) => s.trim()),
    };
}

export function togglePivot(state: FormState, position: number): FormState {
    const pivots = state.pivots.includes(position)
        ? state.pivots.filter((p) => p !== position)
        : [...state.pivots, position].sort((a, b) => a - b);
    return { ...state, pivots };
}
