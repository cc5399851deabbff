import type { Snapshot } from "./types.js";

export interface SceneNode {
    id: string;
    label: string;
    shape: "circle" | "square";
    x: number;
    y: number;
    degree: number;
    weightedDegree: number;
    betweenness: number;
}

export interface SceneEdge {
    src: string;
    dst: string;
    kind: "comm" | "contrib";
    style: "solid" | "dashed";
    weight: number;
    x1: number;
    y1: number;
    x2: number;
    y2: number;
}

export interface NetworkScene {
    kind: "network";
    window: { start: number; end: number };
    nodes: SceneNode[];
    edges: SceneEdge[];
}

export interface EmptyScene {
    kind: "empty";
    message: string;
}

export type SnapshotScene = NetworkScene | EmptyScene;

/**
 * Turn a fetched snapshot into a drawable scene. Persons render as circles
 * and artifacts as squares; communication edges are solid, contribution
 * edges dashed. Coordinates are taken verbatim from the server's layout,
 * so edge length on screen is proportional to laid-out distance.
 */
export function buildNetworkScene(snapshot: Snapshot): SnapshotScene {
    if (snapshot.nodes.length === 0) {
        return { kind: "empty", message: "No activity in this window." };
    }
    const at = new Map(snapshot.positions.map((p) => [p.id, p]));
    const locate = (id: string) => {
        const pos = at.get(id);
        if (!pos) {
            throw new Error(`snapshot has no layout position for ${id}`);
        }
        return pos;
    };
    const nodes = snapshot.nodes.map((node): SceneNode => {
        const pos = locate(node.id);
        return {
            id: node.id,
            label: node.label,
            shape: node.kind === "person" ? "circle" : "square",
            x: pos.x,
            y: pos.y,
            degree: node.metrics.degree,
            weightedDegree: node.metrics.weighted_degree,
            betweenness: node.metrics.betweenness,
        };
    });
    const edges = snapshot.edges.map((edge): SceneEdge => {
        const a = locate(edge.src);
        const b = locate(edge.dst);
        return {
            src: edge.src,
            dst: edge.dst,
            kind: edge.kind,
            style: edge.kind === "comm" ? "solid" : "dashed",
            weight: edge.weight,
            x1: a.x,
            y1: a.y,
            x2: b.x,
            y2: b.y,
        };
    });
    return { kind: "network", window: snapshot.window, nodes, edges };
}
