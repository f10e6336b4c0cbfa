/** Payload shapes served by the game service. The client never derives
 * game facts itself; everything below arrives over the wire. */

export type Role = "dominator" | "staller";

/** Exactly one of the three fields names the graph. */
export interface GraphSpec {
  family?: string;
  g6?: string;
  edges?: string;
}

export interface CreateSessionRequest {
  graph: GraphSpec;
  human_role: Role;
}

export interface PublicState {
  id: string;
  n: number;
  edges: [number, number][];
  layout: [number, number][];
  family: string | null;
  human_role: Role;
  dominated: number[];
  history: [number, number][];
  length: number;
  terminal: boolean;
  pending_indication: number | null;
  legal_moves: number[];
  analysis_available: boolean;
}

export interface Analysis {
  available: boolean;
  reason?: string;
  value: number | null;
  optimal_moves: number[];
  move_values: Record<string, number>;
}

export interface ApiErrorBody {
  detail: string;
}
