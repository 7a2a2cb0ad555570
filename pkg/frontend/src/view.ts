// Pure view-model construction: SessionState + local selection -> BoardView.
// Everything the DOM layer renders, including which cells may be clicked,
// is decided here so it can be unit tested without a browser.

import type { SessionState } from "./api.js";

export type CellStatus = "hidden" | "revealed" | "burned" | "revealed-burned";

export interface CellView {
  index: number;
  coord: [number, number] | null;
  status: CellStatus;
  selected: boolean;
  clickable: boolean;
}

export interface BoardView {
  layout: { kind: "grid" | "strip"; width: number; height: number };
  cells: CellView[];
  banner: string;
  roundLabel: string;
  quota: number;
  selectionCount: number;
  submitEnabled: boolean;
  passEnabled: boolean;
  inputLocked: boolean;
  sandwich: string | null;
}

export function vertexCount(state: SessionState): number {
  if (state.coords) return state.coords.length;
  const match = /^path:n=(\d+)$/.exec(state.spec);
  if (match) return parseInt(match[1], 10);
  const strong = /^strongpath:n=(\d+),d=(\d+)$/.exec(state.spec);
  if (strong) return parseInt(strong[1], 10) ** parseInt(strong[2], 10);
  const edges = /^edges:(.*)$/.exec(state.spec);
  if (edges) {
    let top = 0;
    for (const pair of edges[1].split(",")) {
      for (const v of pair.split("-")) top = Math.max(top, parseInt(v, 10));
    }
    return top + 1;
  }
  throw new Error(`cannot size board for spec ${state.spec}`);
}

function cellStatus(state: SessionState, index: number): CellStatus {
  const burned = state.burned.includes(index);
  const revealed = state.revealed.includes(index);
  if (burned && revealed) return "revealed-burned";
  if (burned) return "burned";
  if (revealed) return "revealed";
  return "hidden";
}

/** Burned unrevealed cells are legal reveal filler only once the unburned
 *  unrevealed pool cannot fill the quota; mirror the server's rule so the
 *  client never offers an illegal pick. */
function maxBurnedPicks(state: SessionState, n: number): number {
  let availUnburned = 0;
  for (let v = 0; v < n; v++) {
    if (!state.revealed.includes(v) && !state.burned.includes(v)) availUnburned++;
  }
  return state.reveal_quota - Math.min(state.reveal_quota, availUnburned);
}

export function buildBoardView(
  state: SessionState,
  selection: ReadonlySet<number>,
  busy: boolean,
): BoardView {
  const n = vertexCount(state);
  const humanTurn = !state.terminal && state.to_move === "human";
  const locked = busy || !humanTurn;
  const revealPhase = state.phase === "saboteur_reveal";
  const quota = state.reveal_quota;
  const burnedPickBudget = maxBurnedPicks(state, n);
  let selectedBurned = 0;
  for (const v of selection) {
    if (state.burned.includes(v)) selectedBurned++;
  }

  const cells: CellView[] = [];
  for (let v = 0; v < n; v++) {
    const status = cellStatus(state, v);
    const selected = selection.has(v);
    let clickable = false;
    if (!locked) {
      if (revealPhase) {
        const unrevealed = status === "hidden" || status === "burned";
        if (unrevealed) {
          if (selected) {
            clickable = true; // deselect
          } else if (selection.size < quota) {
            clickable =
              status === "hidden" || selectedBurned < burnedPickBudget;
          }
        }
      } else {
        clickable = status === "revealed";
      }
    }
    cells.push({
      index: v,
      coord: state.coords ? state.coords[v] : null,
      status,
      selected,
      clickable,
    });
  }

  let banner: string;
  if (state.terminal) {
    banner = `Burned in ${state.rounds_total} rounds`;
  } else if (revealPhase) {
    const actor = state.to_move === "human" ? "Saboteur (you)" : "Saboteur (engine)";
    banner = `${actor}: reveal ${quota}`;
  } else {
    const actor = state.to_move === "human" ? "Arsonist (you)" : "Arsonist (engine)";
    banner = `${actor}: burn a revealed vertex`;
  }

  let width = n;
  let height = 1;
  let kind: "grid" | "strip" = "strip";
  if (state.coords && state.coords.length > 0) {
    kind = "grid";
    width = Math.max(...state.coords.map((c) => c[0]));
    height = Math.max(...state.coords.map((c) => c[1]));
  }

  // a quota of zero (everything already revealed) still takes an explicit
  // empty reveal; pass exists for the burn phase with no legal target
  const burnOptions = cells.some((c) => c.status === "revealed");
  return {
    layout: { kind, width, height },
    cells,
    banner,
    roundLabel: `Round ${state.round}`,
    quota,
    selectionCount: selection.size,
    submitEnabled: !locked && revealPhase && selection.size === quota,
    passEnabled: !locked && !revealPhase && !burnOptions,
    inputLocked: locked,
    sandwich: state.bounds
      ? `b(G) = ${state.bounds.burning} ≤ rounds ≤ CL(G) = ${state.bounds.cooling}`
      : null,
  };
}
