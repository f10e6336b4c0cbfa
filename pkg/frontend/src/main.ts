import { ApiClient } from "./api.js";
import { renderBoard, renderHistory, renderStatus } from "./board.js";
import type { BoardView } from "./model.js";
import { GameSession } from "./session.js";
import type { GraphSpec, Role } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const boardHost = el<HTMLDivElement>("board");
const historyHost = el<HTMLDivElement>("history");
const statusHost = el<HTMLParagraphElement>("status");
const noticeHost = el<HTMLParagraphElement>("notice");
const form = el<HTMLFormElement>("setup");
const graphInput = el<HTMLInputElement>("graph-input");
const graphKind = el<HTMLSelectElement>("graph-kind");
const roleSelect = el<HTMLSelectElement>("role");
const overlayToggle = el<HTMLInputElement>("overlay");
const baseInput = el<HTMLInputElement>("api-base");

let session: GameSession | null = null;

function showNotice(message: string): void {
  noticeHost.textContent = message;
  noticeHost.classList.add("visible");
  window.setTimeout(() => noticeHost.classList.remove("visible"), 2500);
}

function showBoard(board: BoardView): void {
  boardHost.innerHTML = renderBoard(board);
  historyHost.innerHTML = renderHistory(board);
  statusHost.textContent = renderStatus(board);
  for (const group of boardHost.querySelectorAll<SVGGElement>("g.vertex")) {
    group.addEventListener("click", () => {
      const id = Number(group.dataset["vertex"]);
      void session?.clickVertex(id).catch((error: unknown) => {
        showNotice(error instanceof Error ? error.message : String(error));
      });
    });
  }
}

function graphSpec(): GraphSpec {
  const text = graphInput.value.trim();
  switch (graphKind.value) {
    case "g6":
      return { g6: text };
    case "edges":
      return { edges: text };
    default:
      return { family: text };
  }
}

form.addEventListener("submit", (event) => {
  event.preventDefault();
  const api = new ApiClient(baseInput.value.trim());
  session = new GameSession(api, { onBoard: showBoard, onNotice: showNotice });
  session
    .start(graphSpec(), roleSelect.value as Role)
    .then(() => session?.setOverlay(overlayToggle.checked))
    .catch((error: unknown) => {
      showNotice(error instanceof Error ? error.message : String(error));
    });
});

overlayToggle.addEventListener("change", () => {
  void session?.setOverlay(overlayToggle.checked).catch((error: unknown) => {
    showNotice(error instanceof Error ? error.message : String(error));
  });
});
