/** Browser wiring: forms in, rendered panels out. */

import { ApiClient } from "./api.js";
import { FrontierExplorer } from "./frontier.js";
import { SessionController } from "./session.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function input(id: string): HTMLInputElement {
  return el<HTMLInputElement>(id);
}

function setup(): void {
  const api = new ApiClient(input("base-url").value.replace(/\/$/, ""));
  let client = api;
  const session = new SessionController(client);
  const frontier = new FrontierExplorer(client);
  const sessionPanel = el<HTMLDivElement>("session-panel");
  const frontierPanel = el<HTMLDivElement>("frontier-panel");
  const note = el<HTMLParagraphElement>("form-note");

  const refreshClient = () => {
    client = new ApiClient(input("base-url").value.replace(/\/$/, ""));
    (session as unknown as { api: ApiClient }).api = client;
    (frontier as unknown as { api: ApiClient }).api = client;
  };
  input("base-url").addEventListener("change", refreshClient);

  const paint = () => {
    sessionPanel.innerHTML = session.render();
    frontierPanel.innerHTML = frontier.render();
  };

  el<HTMLButtonElement>("connect-btn").addEventListener("click", async () => {
    note.textContent = "";
    try {
      await session.connect(input("session-id").value.trim());
    } catch (error) {
      note.textContent = String(error);
    }
    paint();
  });

  el<HTMLButtonElement>("step-btn").addEventListener("click", async () => {
    note.textContent = "";
    const outcome = await session.submitStep({
      riskWeight: {
        lower: input("weight-lower").value,
        upper: input("weight-upper").value,
      },
    });
    if (!outcome.ok && outcome.message) {
      note.textContent = outcome.message;
    }
    paint();
  });

  el<HTMLButtonElement>("positions-btn").addEventListener("click", async () => {
    note.textContent = "";
    const theta = Number(input("theta").value);
    const outcome = await session.submitStep({ positioned: { theta } });
    if (!outcome.ok && outcome.message) {
      note.textContent = outcome.message;
    }
    paint();
  });

  el<HTMLButtonElement>("frontier-btn").addEventListener("click", async () => {
    note.textContent = "";
    try {
      await frontier.explore(
        input("portfolio-handle").value.trim(),
        Number(input("eps-min").value),
        Number(input("eps-max").value),
        Number(input("eps-steps").value),
      );
    } catch (error) {
      note.textContent = String(error);
    }
    paint();
  });

  frontierPanel.addEventListener("click", (event) => {
    const target = (event.target as Element).closest(".frontier-point");
    if (target) {
      frontier.select(Number(target.getAttribute("data-index")));
      paint();
    }
  });

  paint();
}

document.addEventListener("DOMContentLoaded", setup);
