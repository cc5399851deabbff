import { ApiClient } from "./client.js";
import { Explorer, type ExplorerView } from "./app.js";
import { renderNetworkSvg, renderPanelHtml, renderThreadSvg } from "./render.js";

// Browser entry point. Everything interesting lives in the modules above;
// this file only wires DOM events to the controller and paints views.

function mount(): void {
    const params = new URLSearchParams(window.location.search);
    const client = new ApiClient(params.get("api") ?? "");

    const network = document.getElementById("network");
    const threadBox = document.getElementById("thread");
    const panel = document.getElementById("panel");
    const notice = document.getElementById("notice");
    const slider = document.getElementById("slider") as HTMLInputElement | null;
    const windowLabel = document.getElementById("window-label");
    const overlayToggle = document.getElementById("overlay-toggle") as HTMLInputElement | null;
    const threadInput = document.getElementById("thread-id") as HTMLInputElement | null;
    const threadOpen = document.getElementById("thread-open");

    const explorer = new Explorer(client, (view: ExplorerView) => paint(view));

    function paint(view: ExplorerView): void {
        if (slider) {
            slider.max = String(Math.max(view.windowCount - 1, 0));
            slider.value = String(view.activeIndex);
        }
        if (windowLabel) {
            const w = explorer.state.windows[view.activeIndex];
            windowLabel.textContent = w
                ? `window ${view.activeIndex}: ${iso(w.start)} to ${iso(w.end)}`
                : "no windows";
        }
        if (network) {
            network.innerHTML = view.scene ? renderNetworkSvg(view.scene) : "";
            // innerHTML replacement drops listeners, so rewire every paint.
            for (const el of network.querySelectorAll<SVGElement>(".node")) {
                el.addEventListener("click", () => {
                    const id = el.getAttribute("data-id");
                    if (id) void explorer.drillDown(id);
                });
            }
        }
        if (threadBox) {
            threadBox.innerHTML = view.threadScene ? renderThreadSvg(view.threadScene) : "";
        }
        if (panel) {
            panel.innerHTML = renderPanelHtml(view.panel);
        }
        if (notice) {
            notice.textContent = view.notice ?? "";
        }
    }

    slider?.addEventListener("input", () => {
        void explorer.scrub(Number(slider.value));
    });
    overlayToggle?.addEventListener("change", () => {
        explorer.toggleReplyOverlay();
    });
    threadOpen?.addEventListener("click", () => {
        const id = threadInput?.value.trim();
        if (id) void explorer.openThread(id);
    });

    void explorer.init();
}

function iso(epoch: number): string {
    return new Date(epoch * 1000).toISOString().slice(0, 10);
}

mount();
