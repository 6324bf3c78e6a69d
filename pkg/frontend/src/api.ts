// Thin fetch client for the local JSON API.

import type {
    MatroidInfo,
    PosetPayload,
    PosetSummary,
    SearchRequest,
    SearchResponse,
    SweepPayload,
} from "./types";

export class ApiError extends Error {
    constructor(public status: number, detail: string) {
        super(detail);
    }
}

export class Client {
    constructor(private base: string = "") {}

    private async get<T>(path: string): Promise<T> {
        const res = await fetch(this.base + path);
        if (!res.ok) throw new ApiError(res.status, await res.text());
        return (await res.json()) as T;
    }

    private async post<T>(path: string, body: unknown): Promise<T> {
        const res = await fetch(this.base + path, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(body),
        });
        if (!res.ok) throw new ApiError(res.status, await res.text());
        return (await res.json()) as T;
    }

    matroid(): Promise<MatroidInfo> {
        return this.get("/matroid");
    }

    sweeps(): Promise<{ count: number; ids: number[] }> {
        return this.get("/sweeps");
    }

    sweep(id: number): Promise<SweepPayload> {
        return this.get(`/sweep/${id}`);
    }

    posets(): Promise<{ posets: PosetSummary[] }> {
        return this.get("/posets");
    }

    poset(id: number): Promise<PosetPayload> {
        return this.get(`/poset/${id}`);
    }

    search(req: SearchRequest): Promise<SearchResponse> {
        return this.post("/search", req);
    }

    update(req: SearchRequest): Promise<SearchResponse> {
        return this.post("/update", req);
    }
}
