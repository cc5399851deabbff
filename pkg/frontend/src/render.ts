import type { SceneNode, SnapshotScene } from "./scene.js";
import type { ThreadScene } from "./thread.js";
import { formatUtc, type DetailPanel } from "./panel.js";

// All rendering is string assembly: scene in, markup out. Keeping this
// free of DOM calls lets the same code back the browser view and the
// scene-count assertions in the test suite.

const NODE_R = 7;
const THREAD_R = 12;
const THREAD_CENTER = 180;
const STUB_LEN = 26;

const THEME_PALETTE = [
    "#4e79a7",
    "#f28e2b",
    "#59a14b",
    "#e15759",
    "#b07aa1",
    "#76b7b2",
];
const PLAIN_FILL = "#c7d4e2";

export function escapeXml(value: string): string {
    return value
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;");
}

function fmt(v: number): string {
    return String(Number(v.toFixed(2)));
}

function viewBox(nodes: SceneNode[]): string {
    const pad = 20;
    const xs = nodes.map((n) => n.x);
    const ys = nodes.map((n) => n.y);
    const minX = Math.min(...xs) - pad;
    const minY = Math.min(...ys) - pad;
    const w = Math.max(...xs) + pad - minX;
    const h = Math.max(...ys) + pad - minY;
    return `${fmt(minX)} ${fmt(minY)} ${fmt(w)} ${fmt(h)}`;
}

export function renderNetworkSvg(scene: SnapshotScene): string {
    if (scene.kind === "empty") {
        return `<div class="empty-state">${escapeXml(scene.message)}</div>`;
    }
    const parts: string[] = [];
    parts.push(
        `<svg class="network" viewBox="${viewBox(scene.nodes)}" xmlns="http://www.w3.org/2000/svg">`,
    );
    for (const edge of scene.edges) {
        const dash = edge.style === "dashed" ? ' stroke-dasharray="4 3"' : "";
        parts.push(
            `<line class="edge ${edge.kind}" data-src="${escapeXml(edge.src)}"` +
                ` data-dst="${escapeXml(edge.dst)}" data-weight="${edge.weight}"` +
                ` x1="${fmt(edge.x1)}" y1="${fmt(edge.y1)}"` +
                ` x2="${fmt(edge.x2)}" y2="${fmt(edge.y2)}"` +
                ` stroke="#8a8a8a"${dash}/>`,
        );
    }
    for (const node of scene.nodes) {
        const id = escapeXml(node.id);
        if (node.shape === "circle") {
            parts.push(
                `<circle class="node person" data-id="${id}" cx="${fmt(node.x)}"` +
                    ` cy="${fmt(node.y)}" r="${NODE_R}" fill="#4e79a7"/>`,
            );
        } else {
            parts.push(
                `<rect class="node artifact" data-id="${id}" x="${fmt(node.x - NODE_R)}"` +
                    ` y="${fmt(node.y - NODE_R)}" width="${NODE_R * 2}" height="${NODE_R * 2}"` +
                    ` fill="#b6992d"/>`,
            );
        }
        parts.push(
            `<text class="label" x="${fmt(node.x + NODE_R + 2)}" y="${fmt(node.y + 3)}">` +
                `${escapeXml(node.label)}</text>`,
        );
    }
    parts.push("</svg>");
    return parts.join("\n");
}

export function renderThreadSvg(scene: ThreadScene): string {
    const at = new Map(scene.nodes.map((n) => [n.id, n]));
    const themes = [...new Set(scene.nodes.map((n) => n.theme).filter((t) => t !== null))].sort();
    const fillFor = (theme: string | null) =>
        theme === null ? PLAIN_FILL : THEME_PALETTE[themes.indexOf(theme) % THEME_PALETTE.length];

    const parts: string[] = [];
    parts.push('<svg class="thread" viewBox="0 0 360 360" xmlns="http://www.w3.org/2000/svg">');
    parts.push(
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="7"' +
            ' markerHeight="7" orient="auto-start-reverse">' +
            '<path d="M 0 0 L 10 5 L 0 10 z" fill="#444"/></marker></defs>',
    );
    for (const reply of scene.overlay) {
        const a = at.get(reply.child);
        const b = at.get(reply.parent);
        if (!a || !b) continue;
        const [x1, y1, x2, y2] = trim(a.x, a.y, b.x, b.y, THREAD_R);
        parts.push(
            `<line class="reply-overlay" data-child="${escapeXml(reply.child)}"` +
                ` data-parent="${escapeXml(reply.parent)}" x1="${fmt(x1)}" y1="${fmt(y1)}"` +
                ` x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="#c2c2c2" stroke-width="3"/>`,
        );
    }
    for (const arrow of scene.arrows) {
        const a = at.get(arrow.from);
        if (!a) continue;
        if (arrow.to === null) {
            // Unresolved citation: a dashed stub pointing off the ring.
            const [ux, uy] = away(a.x, a.y);
            parts.push(
                `<line class="quote-arrow stub" data-from="${escapeXml(arrow.from)}" data-to=""` +
                    ` x1="${fmt(a.x + ux * THREAD_R)}" y1="${fmt(a.y + uy * THREAD_R)}"` +
                    ` x2="${fmt(a.x + ux * (THREAD_R + STUB_LEN))}"` +
                    ` y2="${fmt(a.y + uy * (THREAD_R + STUB_LEN))}"` +
                    ' stroke="#444" stroke-dasharray="4 3"/>',
            );
            continue;
        }
        const b = at.get(arrow.to);
        if (!b) continue;
        const dash = arrow.style === "dashed" ? ' stroke-dasharray="4 3"' : "";
        const [x1, y1, x2, y2] = trim(a.x, a.y, b.x, b.y, THREAD_R);
        parts.push(
            `<line class="quote-arrow" data-from="${escapeXml(arrow.from)}"` +
                ` data-to="${escapeXml(arrow.to)}" x1="${fmt(x1)}" y1="${fmt(y1)}"` +
                ` x2="${fmt(x2)}" y2="${fmt(y2)}" stroke="#444"${dash}` +
                ' marker-end="url(#arrow)"/>',
        );
    }
    for (const node of scene.nodes) {
        if (node.branch) {
            parts.push(
                `<circle class="branch-marker" data-id="${escapeXml(node.id)}" cx="${fmt(node.x)}"` +
                    ` cy="${fmt(node.y)}" r="${THREAD_R + 5}" fill="none" stroke="#e15759"` +
                    ' stroke-width="2.5"/>',
            );
        }
        parts.push(
            `<circle class="message" data-id="${escapeXml(node.id)}"` +
                `${node.theme === null ? "" : ` data-theme="${escapeXml(node.theme)}"`}` +
                ` cx="${fmt(node.x)}" cy="${fmt(node.y)}" r="${THREAD_R}"` +
                ` fill="${fillFor(node.theme)}"/>`,
        );
        parts.push(
            `<text class="label" x="${fmt(node.x)}" y="${fmt(node.y - THREAD_R - 6)}"` +
                ` text-anchor="middle">${escapeXml(node.id)}</text>`,
        );
    }
    for (const badge of scene.badges) {
        const a = at.get(badge.child);
        const b = at.get(badge.parent);
        if (!a || !b) continue;
        parts.push(
            `<text class="divergence-badge" data-kind="${badge.kind}"` +
                ` data-child="${escapeXml(badge.child)}" data-parent="${escapeXml(badge.parent)}"` +
                ` x="${fmt((a.x + b.x) / 2)}" y="${fmt((a.y + b.y) / 2 - 4)}"` +
                ' text-anchor="middle" fill="#e15759">!=</text>',
        );
    }
    parts.push("</svg>");
    return parts.join("\n");
}

// Shorten a segment so it starts and ends on node boundaries rather than
// node centers; arrowheads stay visible that way.
function trim(x1: number, y1: number, x2: number, y2: number, r: number): [number, number, number, number] {
    const dx = x2 - x1;
    const dy = y2 - y1;
    const len = Math.hypot(dx, dy);
    if (len < 2 * r + 1) {
        return [x1, y1, x2, y2];
    }
    const ux = dx / len;
    const uy = dy / len;
    return [x1 + ux * r, y1 + uy * r, x2 - ux * (r + 2), y2 - uy * (r + 2)];
}

function away(x: number, y: number): [number, number] {
    const dx = x - THREAD_CENTER;
    const dy = y - THREAD_CENTER;
    const len = Math.hypot(dx, dy);
    if (len === 0) {
        return [0, -1];
    }
    return [dx / len, dy / len];
}

export function renderPanelHtml(panel: DetailPanel): string {
    if (panel.kind === "none") {
        return '<div class="panel empty">Select a node to inspect its raw data.</div>';
    }
    if (panel.kind === "error") {
        return `<div class="panel error">HTTP ${panel.status}: ${escapeXml(panel.message)}</div>`;
    }
    const person = panel.actor.startsWith("p:");
    const parts: string[] = [];
    parts.push(`<div class="panel actor" data-actor="${escapeXml(panel.actor)}" data-until="${panel.until}">`);
    parts.push(`<h3>${escapeXml(panel.actor)}</h3>`);
    parts.push(`<p class="until">raw data through ${formatUtc(panel.until)}</p>`);
    if (person) {
        parts.push(`<h4>Messages (${panel.messages.length})</h4>`);
        parts.push('<table class="messages"><tbody>');
        for (const row of panel.messages) {
            parts.push(
                `<tr class="message-row" data-id="${escapeXml(row.id)}">` +
                    `<td>${escapeXml(row.subject)}</td>` +
                    `<td>${row.sentAt}</td>` +
                    `<td>quoted by ${row.quotedBy}</td></tr>`,
            );
        }
        parts.push("</tbody></table>");
    }
    parts.push(`<h4>Commits (${panel.commits.length})</h4>`);
    parts.push('<table class="commits"><tbody>');
    for (const row of panel.commits) {
        parts.push(
            `<tr class="commit-row" data-revision="${escapeXml(row.revision)}">` +
                `<td>${escapeXml(row.file)}</td>` +
                `<td>${escapeXml(row.revision)}</td>` +
                `<td>+${row.linesAdded}/-${row.linesRemoved}</td>` +
                `<td>${row.committedAt}</td></tr>`,
        );
    }
    parts.push("</tbody></table>");
    parts.push("</div>");
    return parts.join("\n");
}
