import { describe, expect, it } from "vitest";
import { buildThreadScene } from "../src/thread.js";
import { renderThreadSvg } from "../src/render.js";
import { count, loadFixture } from "./helpers.js";
import type { Thread } from "../src/types.js";

const star = () => loadFixture<Thread>("star_thread.json");
const divergent = () => loadFixture<Thread>("divergent_thread.json");
const miniM1 = () => loadFixture<Thread>("api_thread_m1.json");

describe("buildThreadScene", () => {
    it("marks the root of the star thread as the only branch point", () => {
        const scene = buildThreadScene(star());

        const branches = scene.nodes.filter((n) => n.branch);
        expect(branches.map((n) => n.id)).toEqual(["s1@lists.example.org"]);
        const incoming = scene.arrows.filter((a) => a.to === "s1@lists.example.org");
        expect(incoming).toHaveLength(3);
    });

    it("keeps the rendered arrow set equal to the fetched quote edges", () => {
        const thread = miniM1();
        const scene = buildThreadScene(thread);

        expect(scene.arrows.map((a) => [a.from, a.to])).toEqual(
            thread.quote_edges.map((e) => [e.citing, e.cited]),
        );
        expect(scene.nodes.map((n) => n.id)).toEqual(thread.message_ids);
    });

    it("shows zero divergence badges when reply and quote graphs agree", () => {
        const scene = buildThreadScene(miniM1(), { replyOverlay: true });

        expect(scene.overlay).toHaveLength(3);
        expect(scene.badges).toEqual([]);
    });

    it("badges every pair present in exactly one of the two models", () => {
        const scene = buildThreadScene(divergent(), { replyOverlay: true });

        expect(scene.badges).toEqual([
            { kind: "quote_only", child: "d3@lists.example.org", parent: "d1@lists.example.org" },
            { kind: "reply_only", child: "d3@lists.example.org", parent: "d2@lists.example.org" },
            { kind: "reply_only", child: "d4@lists.example.org", parent: "d3@lists.example.org" },
        ]);
    });

    it("skips overlay and badges unless the toggle is on", () => {
        const scene = buildThreadScene(divergent());
        expect(scene.overlay).toEqual([]);
        expect(scene.badges).toEqual([]);
    });

    it("turns unresolved citations into dashed stubs", () => {
        const scene = buildThreadScene(divergent());

        const stub = scene.arrows.find((a) => a.resolution === "unresolved");
        expect(stub).toBeDefined();
        expect(stub!.to).toBeNull();
        expect(stub!.style).toBe("dashed");

        const svg = renderThreadSvg(scene);
        expect(count(svg, 'class="quote-arrow stub"')).toBe(1);
        expect(svg).toContain('data-from="d4@lists.example.org" data-to=""');
    });

    it("is deterministic for a fixed thread payload", () => {
        const a = buildThreadScene(divergent(), { replyOverlay: true });
        const b = buildThreadScene(divergent(), { replyOverlay: true });
        expect(JSON.stringify(a)).toBe(JSON.stringify(b));
    });
});

describe("renderThreadSvg", () => {
    it("renders one branch marker and three incoming arrows for the star", () => {
        const svg = renderThreadSvg(buildThreadScene(star()));

        expect(count(svg, 'class="branch-marker"')).toBe(1);
        expect(svg).toContain('class="branch-marker" data-id="s1@lists.example.org"');
        expect(count(svg, 'data-to="s1@lists.example.org"')).toBe(3);
        expect(count(svg, "marker-end")).toBe(3);
    });

    it("colors nodes by theme label and leaves unlabeled nodes plain", () => {
        const svg = renderThreadSvg(buildThreadScene(divergent()));

        expect(count(svg, 'data-theme="evaluation"')).toBe(2);
        expect(count(svg, 'data-theme="elaboration"')).toBe(1);
        const fills = [...svg.matchAll(/data-theme="evaluation"[^/]*fill="([^"]+)"/g)].map(
            (m) => m[1],
        );
        expect(new Set(fills).size).toBe(1);
        expect(count(svg, 'fill="#c7d4e2"')).toBe(1);
    });

    it("draws the reply overlay under the quote arrows with badges", () => {
        const svg = renderThreadSvg(buildThreadScene(divergent(), { replyOverlay: true }));

        expect(count(svg, 'class="reply-overlay"')).toBe(3);
        expect(count(svg, 'class="divergence-badge"')).toBe(3);
        expect(svg.indexOf("reply-overlay")).toBeLessThan(svg.indexOf("quote-arrow"));
    });

    it("renders the identical-graphs thread with no badges when overlaid", () => {
        const svg = renderThreadSvg(buildThreadScene(miniM1(), { replyOverlay: true }));

        expect(count(svg, 'class="reply-overlay"')).toBe(3);
        expect(count(svg, 'class="divergence-badge"')).toBe(0);
    });
});
