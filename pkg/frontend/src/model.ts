import type { Analysis, PublicState } from "./types.js";

/** What one vertex looks like on screen. Derived solely from the last
 * server payload: the client adds no game knowledge of its own. */
export interface VertexView {
  id: number;
  x: number;
  y: number;
  dominated: boolean;
  selected: boolean;
  indicated: boolean;
  legalTarget: boolean;
  /** Value after moving here, when the analysis overlay is on. */
  moveValue: number | null;
  optimal: boolean;
}

export interface BoardView {
  vertices: VertexView[];
  edges: [number, number][];
  history: { round: number; indicated: number; selected: number }[];
  length: number;
  terminal: boolean;
  humanRole: string;
  /** Exact value of the current position, when analysis is available. */
  value: number | null;
  analysisAvailable: boolean;
  analysisReason: string | null;
}

/** Project a server payload (plus optional analysis) onto the board. */
export function deriveBoard(state: PublicState, analysis: Analysis | null = null): BoardView {
  const dominated = new Set(state.dominated);
  const selected = new Set(state.history.map(([, v]) => v));
  const legal = new Set(state.terminal ? [] : state.legal_moves);
  const overlay = analysis && analysis.available ? analysis : null;
  const optimal = new Set(overlay ? overlay.optimal_moves : []);

  const vertices: VertexView[] = state.layout.map(([x, y], id) => ({
    id,
    x,
    y,
    dominated: dominated.has(id),
    selected: selected.has(id),
    indicated: state.pending_indication === id,
    legalTarget: legal.has(id),
    moveValue: overlay && legal.has(id) ? (overlay.move_values[String(id)] ?? null) : null,
    optimal: overlay !== null && optimal.has(id) && legal.has(id),
  }));

  return {
    vertices,
    edges: state.edges,
    history: state.history.map(([indicated, sel], i) => ({
      round: i + 1,
      indicated,
      selected: sel,
    })),
    length: state.length,
    terminal: state.terminal,
    humanRole: state.human_role,
    value: overlay ? overlay.value : null,
    analysisAvailable: state.analysis_available,
    analysisReason: analysis && !analysis.available ? (analysis.reason ?? null) : null,
  };
}

/** Why a click on this vertex is inert right now, or null when legal.
 * Mirrors the server's rules verbally; the server still has the last word. */
export function inertReason(board: BoardView, id: number): string | null {
  if (board.terminal) return "the game is over";
  const vertex = board.vertices[id];
  if (!vertex) return "no such vertex";
  if (vertex.legalTarget) return null;
  if (board.humanRole === "dominator" && vertex.dominated) return "already dominated";
  if (board.humanRole === "staller") return "not in the indicated closed neighborhood";
  return "not a legal move";
}
