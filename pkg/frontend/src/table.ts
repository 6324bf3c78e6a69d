// Sweep table rendering: the four columns of the service payload, shown
// exactly as delivered (vertex, order swept, IP set, linear functional).

import type { SweepPayload, SweepRow } from "./types";

export interface TableModel {
    header: [string, string, string, string];
    rows: [string, string, string, string][];
}

export function formatVertex(vertex: number[]): string {
    return "(" + vertex.join(", ") + ")";
}

export function formatIpSet(ipSet: number[]): string {
    return "[" + ipSet.join(", ") + "]";
}

export function sweepTableModel(payload: SweepPayload): TableModel {
    const rows = payload.rows.map(
        (row: SweepRow): [string, string, string, string] => [
            formatVertex(row.vertex),
            String(row.order_swept),
            formatIpSet(row.ip_set),
            row.functional_decimal,
        ],
    );
    return {
        header: ["vertex", "order swept", "IP set", "linear functional"],
        rows,
    };
}

function escapeHtml(text: string): string {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;");
}

export function renderSweepTable(payload: SweepPayload): string {
    const model = sweepTableModel(payload);
    const head = model.header.map((h) => `<th>${escapeHtml(h)}</th>`).join("");
    const body = model.rows
        .map(
            (cells) =>
                "<tr>" + cells.map((c) => `<td>${escapeHtml(c)}</td>`).join("") + "</tr>",
        )
        .join("\n");
    const badge = payload.valid
        ? `<span class="badge ok">valid sweep</span>`
        : `<span class="badge bad">INVALID</span>`;
    const generic = payload.generic
        ? `<span class="badge">generic</span>`
        : `<span class="badge warn">weight ties</span>`;
    return (
        `<div class="sweep-meta">sweep ${payload.id} ${badge} ${generic}</div>` +
        `<table class="sweep"><thead><tr>${head}</tr></thead><tbody>\n${body}\n</tbody></table>`
    );
}
