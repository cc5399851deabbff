import type { CommitItem, MessageItem } from "./types.js";

export interface MessageRow {
    id: string;
    subject: string;
    sentAt: string;
    quotedBy: number;
}

export interface CommitRow {
    file: string;
    revision: string;
    linesAdded: number;
    linesRemoved: number;
    committedAt: string;
}

export interface ActorPanel {
    kind: "actor";
    actor: string;
    until: number;
    messages: MessageRow[];
    commits: CommitRow[];
}

export interface ErrorPanel {
    kind: "error";
    status: number;
    message: string;
}

export interface NoPanel {
    kind: "none";
}

export type DetailPanel = ActorPanel | ErrorPanel | NoPanel;

export function formatUtc(epoch: number): string {
    return new Date(epoch * 1000).toISOString().slice(0, 19) + "Z";
}

// Row builders keep a one-to-one correspondence with the API items; the
// panel never aggregates, filters, or reorders.
export function messageRows(items: MessageItem[]): MessageRow[] {
    return items.map((m): MessageRow => ({
        id: m.id,
        subject: m.subject,
        sentAt: formatUtc(m.sent_at),
        quotedBy: m.quoted_by,
    }));
}

export function commitRows(items: CommitItem[]): CommitRow[] {
    return items.map((c): CommitRow => ({
        file: c.file_path,
        revision: c.revision,
        linesAdded: c.lines_added,
        linesRemoved: c.lines_removed,
        committedAt: formatUtc(c.committed_at),
    }));
}

export function actorPanel(
    actor: string,
    until: number,
    messages: MessageItem[],
    commits: CommitItem[],
): ActorPanel {
    return {
        kind: "actor",
        actor,
        until,
        messages: messageRows(messages),
        commits: commitRows(commits),
    };
}

export function errorPanel(status: number, message: string): ErrorPanel {
    return { kind: "error", status, message };
}
