import type {
    ActorListing,
    CommitItem,
    MessageItem,
    Pep,
    Reports,
    Snapshot,
    SnapshotSummary,
    Thread,
} from "./types.js";

/** The slice of the fetch response surface the client relies on. */
export interface HttpResponse {
    ok: boolean;
    status: number;
    json(): Promise<unknown>;
    text(): Promise<string>;
}

export type FetchFn = (url: string) => Promise<HttpResponse>;

/** Raised for any non-2xx response; message is the server's detail string. */
export class ApiError extends Error {
    readonly status: number;

    constructor(status: number, detail: string) {
        super(detail);
        this.name = "ApiError";
        this.status = status;
    }
}

/**
 * Typed wrapper over the read-only dataset API. The base URL is the only
 * configuration the explorer accepts; everything else comes from the
 * server's responses.
 */
export class ApiClient {
    private readonly base: string;
    private readonly fetchFn: FetchFn;

    constructor(baseUrl = "", fetchFn?: FetchFn) {
        this.base = baseUrl.replace(/\/+$/, "");
        // fetch must be invoked detached from any receiver in the browser.
        this.fetchFn = fetchFn ?? ((url) => globalThis.fetch(url));
    }

    snapshots(): Promise<SnapshotSummary[]> {
        return this.get("/snapshots");
    }

    snapshot(index: number): Promise<Snapshot> {
        return this.get(`/snapshots/${index}`);
    }

    actorMessages(actorId: string, until?: number): Promise<ActorListing<MessageItem>> {
        return this.get(withUntil(`/actors/${encodeURIComponent(actorId)}/messages`, until));
    }

    actorCommits(actorId: string, until?: number): Promise<ActorListing<CommitItem>> {
        return this.get(withUntil(`/actors/${encodeURIComponent(actorId)}/commits`, until));
    }

    thread(threadId: string): Promise<Thread> {
        return this.get(`/threads/${encodeURIComponent(threadId)}`);
    }

    peps(): Promise<Pep[]> {
        return this.get("/peps");
    }

    pep(number: number): Promise<Pep> {
        return this.get(`/peps/${number}`);
    }

    reports(): Promise<Reports> {
        return this.get("/reports");
    }

    private async get<T>(path: string): Promise<T> {
        const response = await this.fetchFn(this.base + path);
        if (!response.ok) {
            throw new ApiError(response.status, await readDetail(response));
        }
        return (await response.json()) as T;
    }
}

function withUntil(path: string, until?: number): string {
    return until === undefined ? path : `${path}?until=${until}`;
}

async function readDetail(response: HttpResponse): Promise<string> {
    // Error bodies are {"detail": "..."}; anything else is reported raw.
    const raw = await response.text();
    try {
        const body = JSON.parse(raw) as { detail?: unknown };
        if (body && typeof body.detail === "string") {
            return body.detail;
        }
    } catch {
        // not JSON, fall through
    }
    return raw || `http ${response.status}`;
}
