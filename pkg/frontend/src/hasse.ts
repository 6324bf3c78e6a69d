// Rank-layered Hasse diagram as an SVG string. Nodes are named by their
// "order swept" label, annotated with restriction sets and (when the service
// found a pure labeling) monomials; a no-labeling certificate highlights the
// blocked nodes.

import type { PosetPayload } from "./types";

export interface HasseNode {
    label: number;
    x: number;
    y: number;
    text: string[];
    blocked: boolean;
}

export interface HasseLayout {
    width: number;
    height: number;
    nodes: HasseNode[];
    edges: [number, number][]; // indices into nodes
}

const X_STEP = 92;
const Y_STEP = 86;
const MARGIN = 50;

export function hasseLayout(poset: PosetPayload): HasseLayout {
    const byRank = new Map<number, number[]>();
    poset.nodes.forEach((node, i) => {
        const bucket = byRank.get(node.rank) ?? [];
        bucket.push(i);
        byRank.set(node.rank, bucket);
    });
    const ranks = [...byRank.keys()].sort((a, b) => a - b);
    const maxRank = ranks[ranks.length - 1] ?? 0;
    const lowerOf = new Map<number, number[]>();
    for (const [lo, hi] of poset.cover_edges) {
        const bucket = lowerOf.get(hi) ?? [];
        bucket.push(lo);
        lowerOf.set(hi, bucket);
    }
    const pos = new Map<number, { x: number; y: number }>();
    let widest = 1;
    for (const rank of ranks) {
        const members = byRank.get(rank)!;
        if (rank > 0) {
            // barycenter of lower neighbours keeps edges short
            const mean = (i: number): number => {
                const lows = lowerOf.get(i) ?? [];
                if (lows.length === 0) return 0;
                return lows.reduce((acc, j) => acc + (pos.get(j)?.x ?? 0), 0) / lows.length;
            };
            members.sort((a, b) => mean(a) - mean(b) || poset.nodes[a].label - poset.nodes[b].label);
        }
        widest = Math.max(widest, members.length);
        members.forEach((i, k) => {
            pos.set(i, {
                x: (k - (members.length - 1) / 2) * X_STEP,
                y: (maxRank - rank) * Y_STEP,
            });
        });
    }
    const blocked = new Set(poset.labeling.blocked ?? []);
    const monomials = poset.labeling.monomials ?? {};
    const nodes: HasseNode[] = poset.nodes.map((node, i) => {
        const { x, y } = pos.get(i)!;
        const text = [String(node.label), "{" + node.restriction_set.join(",") + "}"];
        const mono = monomials[String(node.label)];
        if (mono !== undefined) text.push(mono);
        return {
            label: node.label,
            x: x + (widest * X_STEP) / 2 + MARGIN,
            y: y + MARGIN,
            text,
            blocked: blocked.has(node.label),
        };
    });
    return {
        width: widest * X_STEP + 2 * MARGIN,
        height: maxRank * Y_STEP + 2 * MARGIN,
        nodes,
        edges: poset.cover_edges,
    };
}

export function renderHasse(poset: PosetPayload): string {
    const layout = hasseLayout(poset);
    const parts: string[] = [];
    parts.push(
        `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${layout.width} ${layout.height}" ` +
            `width="${layout.width}" height="${layout.height}">`,
    );
    for (const [lo, hi] of layout.edges) {
        const a = layout.nodes[lo];
        const b = layout.nodes[hi];
        parts.push(
            `<line x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}" stroke="#999" stroke-width="1"/>`,
        );
    }
    for (const node of layout.nodes) {
        const fill = node.blocked ? "#ffd6d6" : "#ffffff";
        const stroke = node.blocked ? "#cc0000" : "#555555";
        const cls = node.blocked ? "hasse-node blocked" : "hasse-node";
        parts.push(
            `<g class="${cls}" data-label="${node.label}">` +
                `<circle cx="${node.x}" cy="${node.y}" r="24" fill="${fill}" stroke="${stroke}" stroke-width="${node.blocked ? 2.5 : 1.2}"/>`,
        );
        node.text.forEach((line, k) => {
            const dy = node.y - 8 + 11 * k;
            parts.push(
                `<text x="${node.x}" y="${dy}" text-anchor="middle" font-size="9">${line}</text>`,
            );
        });
        parts.push("</g>");
    }
    parts.push("</svg>");
    return parts.join("\n");
}
