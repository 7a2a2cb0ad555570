// Game controller: holds the authoritative server state, the local reveal
// selection, and the single-in-flight mutation lock.  DOM-free so the whole
// game loop can be driven headlessly in tests.

import { ApiError, GameApi } from "./api.js";
import type { Hint, Move, Role, SessionState } from "./api.js";
import { buildBoardView } from "./view.js";
import type { BoardView } from "./view.js";

export interface ControllerEvents {
  onRender(view: BoardView, state: SessionState): void;
  onToast(message: string): void;
}

export class GameController {
  private state: SessionState | null = null;
  private selection = new Set<number>();
  private busy = false;

  constructor(
    private readonly api: GameApi,
    private readonly events: ControllerEvents,
  ) {}

  get currentState(): SessionState | null {
    return this.state;
  }

  get currentView(): BoardView | null {
    if (!this.state) return null;
    return buildBoardView(this.state, this.selection, this.busy);
  }

  private render(): void {
    if (this.state) {
      this.events.onRender(this.currentView!, this.state);
    }
  }

  async start(spec: string, k: number, role: Role, revealBurned = false): Promise<void> {
    const created = await this.api.createSession(spec, k, role, revealBurned);
    this.state = created.state;
    this.selection.clear();
    this.render();
  }

  /** Handle a click on cell `index`; returns false when the click is illegal
   *  (wrong phase, unclickable cell, input locked) and was ignored. */
  handleCellClick(index: number): boolean {
    const view = this.currentView;
    if (!view || !this.state) return false;
    const cell = view.cells[index];
    if (!cell || !cell.clickable) return false;
    if (this.state.phase === "saboteur_reveal") {
      if (this.selection.has(index)) {
        this.selection.delete(index);
      } else {
        this.selection.add(index);
      }
      this.render();
      return true;
    }
    void this.submit({ type: "burn", vertex: index });
    return true;
  }

  /** Submit the staged reveal; false if the selection is incomplete. */
  submitReveal(): boolean {
    const view = this.currentView;
    if (!view || !view.submitEnabled || !this.state) return false;
    const vertices = [...this.selection].sort((a, b) => a - b);
    void this.submit({ type: "reveal", vertices });
    return true;
  }

  submitPass(): boolean {
    const view = this.currentView;
    if (!view || !view.passEnabled) return false;
    void this.submit({ type: "pass" });
    return true;
  }

  /** One mutation at a time: optimistic input lock, server round-trip,
   *  re-render from the authoritative response. */
  private async submit(move: Move): Promise<void> {
    if (!this.state || this.busy) return;
    this.busy = true;
    this.render();
    try {
      this.state = await this.api.submitMove(this.state.id, move);
      this.selection.clear();
    } catch (error) {
      if (error instanceof ApiError) {
        this.events.onToast(`Rejected: ${error.message}`);
        try {
          this.state = await this.api.getState(this.state.id);
          this.selection.clear();
        } catch {
          this.events.onToast("Could not re-fetch state; retry.");
        }
      } else {
        this.events.onToast("Network failure; state unchanged, retry.");
      }
    } finally {
      this.busy = false;
      this.render();
    }
  }

  /** Wait out any in-flight mutation (test helper). */
  async idle(): Promise<void> {
    while (this.busy) {
      await new Promise((resolve) => setTimeout(resolve, 5));
    }
  }

  async refresh(): Promise<void> {
    if (!this.state) return;
    this.state = await this.api.getState(this.state.id);
    this.render();
  }

  async requestHint(): Promise<Hint | null> {
    if (!this.state || this.state.terminal) return null;
    try {
      const hint = await this.api.hint(this.state.id);
      const certainty = hint.certified ? `value ${hint.value}` : "not certified";
      this.events.onToast(`Hint: ${describeMove(hint.move)} (${certainty})`);
      return hint;
    } catch (error) {
      this.events.onToast(
        error instanceof ApiError ? `Hint unavailable: ${error.message}` : "Network failure.",
      );
      return null;
    }
  }
}

function describeMove(move: Move): string {
  switch (move.type) {
    case "reveal":
      return `reveal ${move.vertices.join(", ")}`;
    case "burn":
      return `burn ${move.vertex}`;
    case "pass":
      return "pass";
  }
}
