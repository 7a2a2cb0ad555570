// Typed client for the burngames game service.  The client never computes
// game logic: every displayed state is a server payload.

export type Phase = "saboteur_reveal" | "arsonist_burn";
export type Role = "arsonist" | "saboteur" | "spectator";

export interface SessionState {
  id: string;
  spec: string;
  k: number;
  role: Role;
  engine_mode: "exact" | "heuristic";
  reveal_burned: boolean;
  round: number;
  phase: Phase;
  burned: number[];
  revealed: number[];
  terminal: boolean;
  rounds_total?: number;
  to_move: "human" | "engine" | null;
  reveal_quota: number;
  bounds: { burning: number; cooling: number } | null;
  coords?: [number, number][];
}

export type Move =
  | { type: "reveal"; vertices: number[] }
  | { type: "burn"; vertex: number }
  | { type: "pass" };

export interface Hint {
  move: Move;
  value: number | null;
  certified: boolean;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

async function parseDetail(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { detail?: string };
    return body.detail ?? response.statusText;
  } catch {
    return response.statusText;
  }
}

export class GameApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    if (!response.ok) {
      throw new ApiError(response.status, await parseDetail(response));
    }
    return (await response.json()) as T;
  }

  createSession(
    spec: string,
    k: number,
    role: Role,
    revealBurned = false,
  ): Promise<{ id: string; state: SessionState }> {
    return this.request("/sessions", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ spec, k, role, reveal_burned: revealBurned }),
    });
  }

  getState(id: string): Promise<SessionState> {
    return this.request(`/sessions/${id}`);
  }

  submitMove(id: string, move: Move): Promise<SessionState> {
    return this.request(`/sessions/${id}/move`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(move),
    });
  }

  hint(id: string): Promise<Hint> {
    return this.request(`/sessions/${id}/hint`);
  }
}
