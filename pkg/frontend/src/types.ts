// JSON shapes served by the hybridweave HTTP API. Field names mirror the
// wire format exactly, snake_case included, so a fetched payload can be
// used without any translation layer.

export interface SnapshotSummary {
    index: number;
    start: number;
    end: number;
}

export interface NodeMetrics {
    degree: number;
    weighted_degree: number;
    betweenness: number;
}

export interface SnapshotNode {
    id: string;
    kind: "person" | "artifact";
    label: string;
    metrics: NodeMetrics;
}

export interface SnapshotEdge {
    src: string;
    dst: string;
    kind: "comm" | "contrib";
    weight: number;
}

export interface NodePosition {
    id: string;
    x: number;
    y: number;
}

export interface Snapshot {
    window: { start: number; end: number };
    nodes: SnapshotNode[];
    edges: SnapshotEdge[];
    positions: NodePosition[];
}

export interface QuoteRef {
    cited: string; // empty when unresolved
    block_index: number;
    match_chars: number;
    resolution: string;
}

export interface MessageItem {
    id: string;
    author: string;
    author_raw: string;
    sent_at: number;
    date_malformed: boolean;
    subject: string;
    source_list: string;
    in_reply_to: string | null;
    references: string[];
    reply_parent: string | null;
    quotes: QuoteRef[];
    quoted_by: number;
    body: string[];
}

export interface CommitItem {
    file_path: string;
    revision: string;
    author: string;
    author_raw: string;
    committed_at: number;
    lines_added: number;
    lines_removed: number;
    log_message: string;
    artifact: string;
}

export interface ActorListing<T> {
    actor: string;
    until: number | null;
    items: T[];
}

export interface ThreadQuoteEdge {
    citing: string;
    cited: string; // empty when unresolved
    block_index: number;
    match_chars: number;
    resolution: string;
}

export interface Thread {
    id: string;
    message_ids: string[];
    reply_edges: [string, string][]; // [child, parent]
    quote_edges: ThreadQuoteEdge[];
    theme_labels: Record<string, string>;
    branch_points: string[];
    chains: string[][];
}

export interface PepHistoryEntry {
    status: string;
    at: number | null;
    source: string;
}

export interface Pep {
    number: number;
    title: string;
    champion: string | null;
    status: string;
    history: PepHistoryEntry[];
    discussion: string[];
}

// The reports payload is a grab bag of study tables; the explorer passes
// it through untyped.
export type Reports = Record<string, unknown>;
