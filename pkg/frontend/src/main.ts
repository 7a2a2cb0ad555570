// Page bootstrap: session form, controller wiring, DOM rendering.

import { GameApi } from "./api.js";
import type { Role } from "./api.js";
import { GameController } from "./controller.js";
import { renderBoard, showToast } from "./dom.js";

function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing #${id}`);
  return found as T;
}

export function boot(baseUrl = ""): GameController {
  const boardHost = element<HTMLDivElement>("board");
  const toastHost = element<HTMLDivElement>("toasts");
  const api = new GameApi(baseUrl);
  const controller = new GameController(api, {
    onRender: (view) =>
      renderBoard(boardHost, view, {
        onCell: (index) => controller.handleCellClick(index),
        onSubmit: () => controller.submitReveal(),
        onPass: () => controller.submitPass(),
        onHint: () => void controller.requestHint(),
      }),
    onToast: (message) => showToast(toastHost, message),
  });

  element<HTMLFormElement>("session-form").addEventListener("submit", (event) => {
    event.preventDefault();
    const spec = element<HTMLInputElement>("spec").value.trim();
    const k = parseInt(element<HTMLInputElement>("quota").value, 10);
    const role = element<HTMLSelectElement>("role").value as Role;
    void controller
      .start(spec, k, role)
      .catch((error) => showToast(toastHost, `Could not start: ${error.message}`));
  });

  return controller;
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  boot();
}
