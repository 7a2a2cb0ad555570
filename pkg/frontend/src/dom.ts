// Thin DOM layer: renders a BoardView into a container and forwards clicks.
// Re-renders from scratch on every update; boards are tiny.

import type { BoardView } from "./view.js";

export interface DomHandlers {
  onCell(index: number): void;
  onSubmit(): void;
  onPass(): void;
  onHint(): void;
}

export function renderBoard(
  container: HTMLElement,
  view: BoardView,
  handlers: DomHandlers,
): void {
  container.replaceChildren();

  const banner = document.createElement("div");
  banner.className = "banner";
  banner.textContent = `${view.roundLabel} — ${view.banner}`;
  container.appendChild(banner);

  if (view.sandwich) {
    const sandwich = document.createElement("div");
    sandwich.className = "sandwich";
    sandwich.textContent = view.sandwich;
    container.appendChild(sandwich);
  }

  const board = document.createElement("div");
  board.className = `board ${view.layout.kind}`;
  board.style.gridTemplateColumns = `repeat(${view.layout.width}, 2.2rem)`;
  // row 1 is the bottom row, so fill the grid from the last row down
  const byRow: HTMLElement[][] = [];
  for (const cell of view.cells) {
    const button = document.createElement("button");
    button.className = `cell ${cell.status}${cell.selected ? " selected" : ""}`;
    button.dataset.index = String(cell.index);
    button.disabled = !cell.clickable;
    button.textContent = String(cell.index);
    button.addEventListener("click", () => handlers.onCell(cell.index));
    const row = cell.coord ? cell.coord[1] - 1 : 0;
    (byRow[row] ??= []).push(button);
  }
  for (let r = byRow.length - 1; r >= 0; r--) {
    for (const button of byRow[r]) board.appendChild(button);
  }
  container.appendChild(board);

  const controls = document.createElement("div");
  controls.className = "controls";
  const submit = document.createElement("button");
  submit.id = "submit-reveal";
  submit.textContent = `Reveal (${view.selectionCount}/${view.quota})`;
  submit.disabled = !view.submitEnabled;
  submit.addEventListener("click", () => handlers.onSubmit());
  controls.appendChild(submit);
  const pass = document.createElement("button");
  pass.id = "pass";
  pass.textContent = "Pass";
  pass.disabled = !view.passEnabled;
  pass.addEventListener("click", () => handlers.onPass());
  controls.appendChild(pass);
  const hint = document.createElement("button");
  hint.id = "hint";
  hint.textContent = "Hint";
  hint.disabled = view.inputLocked;
  hint.addEventListener("click", () => handlers.onHint());
  controls.appendChild(hint);
  container.appendChild(controls);
}

export function showToast(container: HTMLElement, message: string): void {
  const toast = document.createElement("div");
  toast.className = "toast";
  toast.textContent = message;
  container.appendChild(toast);
  setTimeout(() => toast.remove(), 4000);
}
