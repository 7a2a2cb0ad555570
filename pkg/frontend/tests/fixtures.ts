import type { SessionState } from "../src/api.js";

export function makeState(overrides: Partial<SessionState> = {}): SessionState {
  return {
    id: "test-session",
    spec: "path:n=6",
    k: 2,
    role: "saboteur",
    engine_mode: "exact",
    reveal_burned: false,
    round: 1,
    phase: "saboteur_reveal",
    burned: [],
    revealed: [],
    terminal: false,
    to_move: "human",
    reveal_quota: 2,
    bounds: { burning: 3, cooling: 4 },
    ...overrides,
  };
}
