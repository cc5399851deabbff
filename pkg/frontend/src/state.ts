import type { SnapshotSummary } from "./types.js";
import type { DetailPanel } from "./panel.js";

/**
 * Everything the explorer shows derives from this state plus the fetched
 * data. There is no hidden rendering state, which is what makes replaying
 * an interaction script reproduce identical scenes.
 */
export interface ViewState {
    windows: SnapshotSummary[];
    activeIndex: number;
    selected: string | null;
    selectedThread: string | null;
    notice: string | null;
    panel: DetailPanel;
    replyOverlay: boolean;
}

export function initialState(): ViewState {
    return {
        windows: [],
        activeIndex: 0,
        selected: null,
        selectedThread: null,
        notice: null,
        panel: { kind: "none" },
        replyOverlay: false,
    };
}

// Out-of-range slider input clamps to the series bounds instead of failing.
export function clampIndex(count: number, raw: number): number {
    if (count <= 0) {
        return 0;
    }
    const index = Math.round(raw);
    return Math.min(Math.max(index, 0), count - 1);
}
