import type { BoardView, VertexView } from "./model.js";

/** SVG rendering of a BoardView as a plain string, so it can be tested
 * without a DOM and injected with innerHTML in the page. */

const SIZE = 640;
const MARGIN = 48;

function sx(x: number): number {
  return MARGIN + x * (SIZE - 2 * MARGIN);
}

function sy(y: number): number {
  return MARGIN + y * (SIZE - 2 * MARGIN);
}

function classesFor(v: VertexView): string {
  const classes = ["vertex", v.dominated ? "dominated" : "undominated"];
  if (v.selected) classes.push("selected");
  if (v.indicated) classes.push("indicated");
  if (v.legalTarget) classes.push("legal");
  if (v.optimal) classes.push("optimal");
  return classes.join(" ");
}

export function renderBoard(board: BoardView): string {
  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${SIZE} ${SIZE}" xmlns="http://www.w3.org/2000/svg" role="img">`,
  );
  for (const [a, b] of board.edges) {
    const va = board.vertices[a];
    const vb = board.vertices[b];
    if (!va || !vb) continue;
    parts.push(
      `<line class="edge" x1="${sx(va.x)}" y1="${sy(va.y)}" ` +
        `x2="${sx(vb.x)}" y2="${sy(vb.y)}" />`,
    );
  }
  for (const v of board.vertices) {
    const cx = sx(v.x);
    const cy = sy(v.y);
    parts.push(
      `<g class="${classesFor(v)}" data-vertex="${v.id}">` +
        `<circle cx="${cx}" cy="${cy}" r="16" />` +
        `<text class="label" x="${cx}" y="${cy}" dy="0.35em">${v.id}</text>` +
        (v.moveValue === null
          ? ""
          : `<text class="move-value" x="${cx}" y="${cy - 24}">${v.moveValue}</text>`) +
        `</g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderHistory(board: BoardView): string {
  if (board.history.length === 0) return "<p class=\"empty\">no rounds yet</p>";
  const items = board.history
    .map(
      (r) =>
        `<li><span class="round">${r.round}.</span> indicated ${r.indicated}, ` +
        `selected ${r.selected}</li>`,
    )
    .join("");
  return `<ol class="history">${items}</ol>`;
}

export function renderStatus(board: BoardView): string {
  if (board.terminal) {
    const value = board.value;
    const note = value === null ? "" : ` (value of a finished game: ${value})`;
    return `game over after ${board.length} round${board.length === 1 ? "" : "s"}${note}`;
  }
  const turn =
    board.humanRole === "dominator"
      ? "your turn: indicate an undominated vertex"
      : "your turn: select inside the highlighted neighborhood";
  const value = board.value === null ? "" : ` (current value ${board.value})`;
  return turn + value;
}
