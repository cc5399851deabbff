import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import type { FetchFn, HttpResponse } from "../src/client.js";
import type {
    ActorListing,
    CommitItem,
    MessageItem,
    Pep,
    Snapshot,
    SnapshotSummary,
    Thread,
} from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export function loadFixture<T>(name: string): T {
    return JSON.parse(readFileSync(join(here, "fixtures", name), "utf8")) as T;
}

interface Route {
    status: number;
    body: unknown;
    raw?: string;
}

/**
 * fetch stand-in backed by a route table. Records every requested path in
 * order; unrouted paths come back as API-shaped 404s. gate() holds the
 * response for a path until release() is called, which is how the tests
 * simulate out-of-order arrival.
 */
export class FetchStub {
    readonly log: string[] = [];
    readonly rawLog: string[] = [];
    private readonly routes = new Map<string, Route>();
    private readonly held = new Set<string>();
    private readonly waiters = new Map<string, Array<() => void>>();

    route(path: string, body: unknown, status = 200): void {
        this.routes.set(path, { status, body });
    }

    routeRaw(path: string, raw: string, status = 200): void {
        this.routes.set(path, { status, body: null, raw });
    }

    gate(path: string): void {
        this.held.add(path);
    }

    release(path: string): void {
        this.held.delete(path);
        const pending = this.waiters.get(path) ?? [];
        this.waiters.delete(path);
        for (const wake of pending) {
            wake();
        }
    }

    /** Snapshot-detail requests seen so far, in order. */
    snapshotRequests(): string[] {
        return this.log.filter((path) => /^\/snapshots\/\d+$/.test(path));
    }

    fetch: FetchFn = async (url) => {
        this.rawLog.push(url);
        const path = url.replace(/^https?:\/\/[^/]+/, "");
        this.log.push(path);
        if (this.held.has(path)) {
            await new Promise<void>((resolve) => {
                const pending = this.waiters.get(path) ?? [];
                pending.push(resolve);
                this.waiters.set(path, pending);
            });
        }
        const route = this.routes.get(path);
        if (!route) {
            return respond({ status: 404, body: { detail: `unrouted path ${path}` } });
        }
        return respond(route);
    };
}

function respond(route: Route): HttpResponse {
    const { status, body, raw } = route;
    return {
        ok: status >= 200 && status < 300,
        status,
        json: async () => {
            if (raw !== undefined) {
                return JSON.parse(raw);
            }
            return JSON.parse(JSON.stringify(body));
        },
        text: async () => raw ?? JSON.stringify(body),
    };
}

export const APRIL = 1017619200;
export const MAY = 1020211200;
export const JUNE = 1022889600;

export const ALICE = "p:alice@example.com";
export const RAYMOND = "p:raymond@example.net";
export const LIB = "a:Lib";
export const THREAD_M1 = "m1@python.org";

export interface MiniFixtures {
    snapshots: SnapshotSummary[];
    snapshot0: Snapshot;
    snapshot1: Snapshot;
    aliceMessages: ActorListing<MessageItem>;
    aliceCommits: ActorListing<CommitItem>;
    libCommits: ActorListing<CommitItem>;
    threadM1: Thread;
    peps: Pep[];
    pep279: Pep;
}

function actorPath(actorId: string, what: "messages" | "commits", until: number): string {
    return `/actors/${encodeURIComponent(actorId)}/${what}?until=${until}`;
}

/**
 * Route the captured mini-dataset responses. Actor listings are served for
 * both window ends, filtered by the same inclusive until rule the server
 * applies, so a drill-down at either window index finds its data.
 */
export function routeMiniDataset(stub: FetchStub): MiniFixtures {
    const fixtures: MiniFixtures = {
        snapshots: loadFixture("api_snapshots.json"),
        snapshot0: loadFixture("api_snapshot_0.json"),
        snapshot1: loadFixture("api_snapshot_1.json"),
        aliceMessages: loadFixture("api_alice_messages.json"),
        aliceCommits: loadFixture("api_alice_commits.json"),
        libCommits: loadFixture("api_lib_commits.json"),
        threadM1: loadFixture("api_thread_m1.json"),
        peps: loadFixture("api_peps.json"),
        pep279: loadFixture("api_pep_279.json"),
    };
    stub.route("/snapshots", fixtures.snapshots);
    stub.route("/snapshots/0", fixtures.snapshot0);
    stub.route("/snapshots/1", fixtures.snapshot1);
    for (const until of [MAY, JUNE]) {
        stub.route(actorPath(ALICE, "messages", until), {
            actor: ALICE,
            until,
            items: fixtures.aliceMessages.items.filter((m) => m.sent_at <= until),
        });
        stub.route(actorPath(ALICE, "commits", until), {
            actor: ALICE,
            until,
            items: fixtures.aliceCommits.items.filter((c) => c.committed_at <= until),
        });
        stub.route(actorPath(LIB, "commits", until), {
            actor: LIB,
            until,
            items: fixtures.libCommits.items.filter((c) => c.committed_at <= until),
        });
        stub.route(actorPath(RAYMOND, "messages", until), { actor: RAYMOND, until, items: [] });
        stub.route(actorPath(RAYMOND, "commits", until), { actor: RAYMOND, until, items: [] });
    }
    stub.route(`/threads/${encodeURIComponent(THREAD_M1)}`, fixtures.threadM1);
    stub.route("/peps", fixtures.peps);
    stub.route("/peps/279", fixtures.pep279);
    stub.route("/reports", loadFixture("api_reports.json"));
    return fixtures;
}

export function count(haystack: string, needle: string): number {
    let total = 0;
    let from = 0;
    for (;;) {
        const hit = haystack.indexOf(needle, from);
        if (hit < 0) {
            return total;
        }
        total += 1;
        from = hit + needle.length;
    }
}
