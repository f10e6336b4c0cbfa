import { ApiClient, ApiError } from "./api.js";
import { deriveBoard, inertReason, type BoardView } from "./model.js";
import type { Analysis, GraphSpec, PublicState, Role } from "./types.js";

export interface SessionEvents {
  onBoard?: (board: BoardView, state: PublicState) => void;
  onNotice?: (message: string) => void;
}

/** One game against the engine, driven entirely by server payloads.
 * The page wires this to the DOM; tests drive it directly. */
export class GameSession {
  private state: PublicState | null = null;
  private analysis: Analysis | null = null;
  private overlay = false;

  constructor(
    private readonly api: ApiClient,
    private readonly events: SessionEvents = {},
  ) {}

  get current(): PublicState | null {
    return this.state;
  }

  get board(): BoardView | null {
    if (!this.state) return null;
    return deriveBoard(this.state, this.overlay ? this.analysis : null);
  }

  async start(graph: GraphSpec, role: Role): Promise<BoardView> {
    this.state = await this.api.createSession(graph, role);
    this.analysis = null;
    await this.refreshAnalysis();
    return this.emit();
  }

  /** Handle a click. Inert clicks (per the server's own legal_moves)
   * produce a notice and no request; legal ones are submitted, and the
   * server still has the last word on legality. */
  async clickVertex(id: number): Promise<BoardView> {
    if (!this.state) throw new Error("no active session");
    const reason = inertReason(deriveBoard(this.state), id);
    if (reason !== null) {
      this.events.onNotice?.(reason);
      return this.emit();
    }
    try {
      this.state = await this.api.submitMove(this.state.id, id);
    } catch (error) {
      if (error instanceof ApiError) {
        this.events.onNotice?.(error.message);
        return this.emit();
      }
      throw error;
    }
    await this.refreshAnalysis();
    return this.emit();
  }

  async setOverlay(on: boolean): Promise<BoardView> {
    this.overlay = on;
    await this.refreshAnalysis();
    return this.emit();
  }

  async stop(): Promise<void> {
    if (!this.state) return;
    await this.api.deleteSession(this.state.id);
    this.state = null;
    this.analysis = null;
  }

  private async refreshAnalysis(): Promise<void> {
    if (!this.overlay || !this.state) return;
    this.analysis = await this.api.getAnalysis(this.state.id);
  }

  private emit(): BoardView {
    const board = this.board;
    if (!board || !this.state) throw new Error("no active session");
    this.events.onBoard?.(board, this.state);
    return board;
  }
}
