import { ApiClient, ApiError } from "./client.js";
import type { Snapshot, Thread } from "./types.js";
import { buildNetworkScene, type SnapshotScene } from "./scene.js";
import { buildThreadScene, type ThreadScene } from "./thread.js";
import { actorPanel, errorPanel } from "./panel.js";
import { clampIndex, initialState, type ViewState } from "./state.js";

export interface ExplorerView {
    activeIndex: number;
    windowCount: number;
    scene: SnapshotScene | null;
    threadScene: ThreadScene | null;
    panel: ViewState["panel"];
    notice: string | null;
}

export type RenderHook = (view: ExplorerView) => void;

/**
 * Drives the explorer. Owns the view state, talks to the API, and calls
 * the render hook after every accepted response.
 *
 * Concurrency contract: fetches are asynchronous with last write wins per
 * panel. Each request captures a sequence number when it starts; if a
 * newer request for the same slot has started by the time the response
 * lands, the response is discarded. The same guard drops snapshot
 * responses for a window index the user has already scrubbed away from.
 */
export class Explorer {
    readonly state: ViewState;
    private readonly client: ApiClient;
    private readonly render: RenderHook;
    private readonly snapshotCache = new Map<number, Snapshot>();
    private threadData: Thread | null = null;
    private snapshotSeq = 0;
    private panelSeq = 0;
    private threadSeq = 0;

    constructor(client: ApiClient, render: RenderHook = () => undefined) {
        this.client = client;
        this.render = render;
        this.state = initialState();
    }

    /** Load the snapshot series and show the first window. */
    async init(): Promise<void> {
        this.state.windows = await this.client.snapshots();
        if (this.state.windows.length === 0) {
            this.emit();
            return;
        }
        await this.scrub(0, true);
    }

    /** Move the time slider. Out-of-range indices clamp to the series. */
    async scrub(rawIndex: number, force = false): Promise<void> {
        const index = clampIndex(this.state.windows.length, rawIndex);
        if (!force && index === this.state.activeIndex && this.snapshotCache.has(index)) {
            return;
        }
        this.state.activeIndex = index;
        const seq = ++this.snapshotSeq;
        if (!this.snapshotCache.has(index)) {
            const snapshot = await this.client.snapshot(index);
            this.snapshotCache.set(index, snapshot);
            if (seq !== this.snapshotSeq) {
                return; // superseded while in flight; cache kept, view not touched
            }
        }
        if (this.state.selected !== null) {
            const snapshot = this.snapshotCache.get(index)!;
            if (snapshot.nodes.some((node) => node.id === this.state.selected)) {
                // Selection survives the scrub; re-query the panel with the
                // new window's until bound.
                this.state.notice = null;
                await this.refreshPanel();
            } else {
                this.state.notice = `${this.state.selected} is not active in this window`;
                this.state.selected = null;
                this.state.panel = { kind: "none" };
            }
        }
        this.emit();
    }

    /** Select an actant and load its raw data up to the active window end. */
    async drillDown(actantId: string): Promise<void> {
        this.state.selected = actantId;
        this.state.notice = null;
        await this.refreshPanel();
        this.emit();
    }

    /** Fetch a thread's quote graph for the thread view. */
    async openThread(threadId: string): Promise<void> {
        this.state.selectedThread = threadId;
        const seq = ++this.threadSeq;
        try {
            const thread = await this.client.thread(threadId);
            if (seq !== this.threadSeq) {
                return;
            }
            this.threadData = thread;
        } catch (err) {
            if (!(err instanceof ApiError)) {
                throw err;
            }
            if (seq === this.threadSeq) {
                this.threadData = null;
                this.state.panel = errorPanel(err.status, err.message);
            }
        }
        this.emit();
    }

    toggleReplyOverlay(): void {
        this.state.replyOverlay = !this.state.replyOverlay;
        this.emit();
    }

    /**
     * Pure projection of (fetched data, state) into what gets drawn.
     * Scenes are rebuilt from cached responses on every call, so the view
     * can never show a window other than the active one.
     */
    view(): ExplorerView {
        const snapshot = this.snapshotCache.get(this.state.activeIndex);
        return {
            activeIndex: this.state.activeIndex,
            windowCount: this.state.windows.length,
            scene: snapshot ? buildNetworkScene(snapshot) : null,
            threadScene: this.threadData
                ? buildThreadScene(this.threadData, { replyOverlay: this.state.replyOverlay })
                : null,
            panel: this.state.panel,
            notice: this.state.notice,
        };
    }

    private emit(): void {
        this.render(this.view());
    }

    private async refreshPanel(): Promise<void> {
        const selected = this.state.selected;
        if (selected === null || this.state.windows.length === 0) {
            return;
        }
        const until = this.state.windows[this.state.activeIndex].end;
        const seq = ++this.panelSeq;
        try {
            // Artifact nodes have no mailbox; list only the commits
            // touching them. Persons get both listings.
            const person = selected.startsWith("p:");
            const [messages, commits] = await Promise.all([
                person
                    ? this.client.actorMessages(selected, until)
                    : Promise.resolve(null),
                this.client.actorCommits(selected, until),
            ]);
            if (seq !== this.panelSeq) {
                return; // a newer query owns the panel
            }
            this.state.panel = actorPanel(
                selected,
                until,
                messages ? messages.items : [],
                commits.items,
            );
        } catch (err) {
            if (!(err instanceof ApiError)) {
                throw err;
            }
            if (seq === this.panelSeq) {
                this.state.panel = errorPanel(err.status, err.message);
            }
        }
    }
}
