// DOM wiring for the exploration panel: pick a base vertex and pivots, run
// search/update against the local service, inspect sweep tables and Hasse
// diagrams. At most one search request is in flight at a time.

import { Client } from "./api";
import { defaultForm, FormState, togglePivot, toRequest, validateForm } from "./form";
import { renderHasse } from "./hasse";
import { groupByIsoClass, structureBadges } from "./listing";
import { renderSweepTable } from "./table";
import type { MatroidInfo, SweepPayload } from "./types";

const client = new Client("");

interface ViewState {
    matroid: MatroidInfo | null;
    form: FormState | null;
    currentSweep: SweepPayload | null;
    busy: boolean;
}

const state: ViewState = { matroid: null, form: null, currentSweep: null, busy: false };

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
}

function setStatus(text: string, isError = false): void {
    const status = el<HTMLDivElement>("status");
    status.textContent = text;
    status.className = isError ? "status error" : "status";
}

function renderForm(): void {
    if (!state.matroid || !state.form) return;
    const m = state.matroid;
    const form = state.form;
    const vfavSelect = el<HTMLSelectElement>("vfav");
    if (vfavSelect.options.length === 0) {
        for (const basis of m.bases) {
            const opt = document.createElement("option");
            opt.value = basis.join(",");
            opt.textContent = "{" + basis.join(",") + "}";
            vfavSelect.appendChild(opt);
        }
    }
    vfavSelect.value = form.vfav.join(",");
    (el<HTMLInputElement>("limit")).value = String(form.limit);
    (el<HTMLInputElement>("misses")).value = String(form.misses);
    (el<HTMLInputElement>("w")).value = form.w;
    (el<HTMLInputElement>("seed")).value = String(form.seed);
    (el<HTMLInputElement>("initial")).value = form.initial;
    renderPivotChips();
}

function renderPivotChips(): void {
    if (!state.matroid || !state.form) return;
    const container = el<HTMLDivElement>("pivots");
    container.innerHTML = "";
    const count = state.matroid.basis_count;
    const labels = state.currentSweep
        ? state.currentSweep.rows.map((r) => "{" + r.vertex.map((v, i) => (v ? i : -1)).filter((i) => i >= 0).join(",") + "}")
        : null;
    for (let pos = 1; pos <= count - 1; pos += 1) {
        const chip = document.createElement("button");
        chip.type = "button";
        chip.className = state.form.pivots.includes(pos) ? "chip active" : "chip";
        chip.textContent = labels ? `${pos} after ${labels[pos - 1]}` : String(pos);
        chip.title = `pivot after position ${pos}`;
        chip.addEventListener("click", () => {
            state.form = togglePivot(state.form!, pos);
            renderPivotChips();
        });
        container.appendChild(chip);
    }
}

async function refreshListing(): Promise<void> {
    const [sweeps, posets] = await Promise.all([client.sweeps(), client.posets()]);
    const sweepList = el<HTMLDivElement>("sweep-list");
    sweepList.innerHTML = "";
    for (const id of sweeps.ids) {
        const btn = document.createElement("button");
        btn.type = "button";
        btn.textContent = `sweep ${id}`;
        btn.addEventListener("click", () => void showSweep(id));
        sweepList.appendChild(btn);
    }
    const posetList = el<HTMLDivElement>("poset-list");
    posetList.innerHTML = "";
    for (const group of groupByIsoClass(posets.posets)) {
        const header = document.createElement("div");
        header.className = "iso-class";
        header.textContent = `isomorphism class ${group.iso_class} (${group.sweepCount} sweep(s))`;
        posetList.appendChild(header);
        for (const p of group.posets) {
            const btn = document.createElement("button");
            btn.type = "button";
            btn.textContent = `poset ${p.id}: ` + structureBadges(p).join(", ");
            btn.addEventListener("click", () => void showPoset(p.id));
            posetList.appendChild(btn);
        }
    }
}

async function showSweep(id: number): Promise<void> {
    const payload = await client.sweep(id);
    state.currentSweep = payload;
    el<HTMLDivElement>("detail").innerHTML = renderSweepTable(payload);
    renderPivotChips();
}

async function showPoset(id: number): Promise<void> {
    const payload = await client.poset(id);
    const labeling = payload.labeling;
    let note = "";
    if (labeling.status === "labeled") {
        note = `<p class="ok">pure multicomplex labeling found (variables ${labeling.variables?.join(", ")})</p>`;
    } else if (labeling.status === "no_labeling") {
        note = `<p class="bad">no pure labeling: ${labeling.reason ?? ""} (blocked nodes ${(
            labeling.blocked ?? []
        ).join(", ")})</p>`;
    }
    el<HTMLDivElement>("detail").innerHTML = note + renderHasse(payload);
}

async function runSearch(update: boolean): Promise<void> {
    if (!state.matroid || !state.form || state.busy) return;
    const errors = validateForm(state.form, state.matroid);
    if (errors.length > 0) {
        setStatus(errors.join("; "), true);
        return;
    }
    state.busy = true;
    setStatus(update ? "updating..." : "searching...");
    try {
        const req = toRequest(state.form);
        const res = update ? await client.update(req) : await client.search(req);
        setStatus(`added ${res.added} sweep(s); store holds ${res.total}`);
        await refreshListing();
    } catch (err) {
        setStatus(String(err), true);
    } finally {
        state.busy = false;
    }
}

function readFormInputs(): void {
    if (!state.form) return;
    state.form.vfav = el<HTMLSelectElement>("vfav").value.split(",").map(Number);
    state.form.limit = Number(el<HTMLInputElement>("limit").value);
    state.form.misses = Number(el<HTMLInputElement>("misses").value);
    state.form.w = el<HTMLInputElement>("w").value;
    state.form.seed = Number(el<HTMLInputElement>("seed").value);
    state.form.initial = el<HTMLInputElement>("initial").value;
}

async function init(): Promise<void> {
    try {
        state.matroid = await client.matroid();
        state.form = defaultForm(state.matroid);
        el<HTMLSpanElement>("matroid-info").textContent =
            `ground set 0..${state.matroid.n - 1}, rank ${state.matroid.rank}, ` +
            `${state.matroid.basis_count} bases`;
        renderForm();
        await refreshListing();
        el<HTMLButtonElement>("run-search").addEventListener("click", () => {
            readFormInputs();
            void runSearch(false);
        });
        el<HTMLButtonElement>("run-update").addEventListener("click", () => {
            readFormInputs();
            void runSearch(true);
        });
        setStatus("ready");
    } catch (err) {
        setStatus(`cannot reach the service: ${String(err)}`, true);
    }
}

if (typeof document !== "undefined") {
    void init();
}
