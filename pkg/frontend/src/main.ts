// Browser bootstrap: one canvas, one session, pointer gestures in, render
// states out. Configuration comes from query params (?service=<url>).

import { RevisionGate, SessionClient } from "./client.js";
import { CurveDrag, HoverHighlight, TokenDrag } from "./interactions.js";
import type { DraggableState, RenderState, SessionEvent } from "./protocol.js";
import { buildScene, handleAt } from "./scene.js";
import { paint } from "./canvas.js";

const PANEL_WIDTH = 320;

function query(name: string, fallback: string): string {
  return new URLSearchParams(window.location.search).get(name) ?? fallback;
}

function toast(message: string): void {
  const el = document.createElement("div");
  el.className = "toast";
  el.textContent = message;
  document.body.appendChild(el);
  setTimeout(() => el.remove(), 2500);
}

function banner(message: string | null): void {
  let el = document.getElementById("banner");
  if (el === null) {
    el = document.createElement("div");
    el.id = "banner";
    document.body.prepend(el);
  }
  el.textContent = message ?? "";
  el.style.display = message === null ? "none" : "block";
}

async function start(): Promise<void> {
  const serviceUrl = query("service", "");
  const client = new SessionClient(serviceUrl, {
    onError: (message) => banner(`connection lost, retrying… (${message})`),
  });

  const canvas = document.getElementById("page") as HTMLCanvasElement;
  const ctx = canvas.getContext("2d") as CanvasRenderingContext2D;
  const variablePicker = document.getElementById("variable") as HTMLSelectElement;
  const status = document.getElementById("status") as HTMLElement;

  let current: RenderState | null = null;
  let selectedFormula: string | null = null;
  let pageImage: HTMLImageElement | null = null;

  const gate = new RevisionGate((state) => {
    current = state;
    canvas.width = state.page.width + PANEL_WIDTH;
    canvas.height = state.page.height;
    paint(ctx, buildScene(state), pageImage);
    status.textContent = `revision ${state.revision}`;
    refreshVariablePicker(state);
  });

  const send = (event: SessionEvent): void => {
    client
      .sendEvent(event)
      .then((response) => gate.offer(response.state))
      .catch((err) => {
        if (event.op === "drag") {
          toast(`curve snaps back: ${err.message}`);
          if (current !== null) {
            paint(ctx, buildScene(current), pageImage); // redraw as-is
          }
        } else {
          toast(err.message);
        }
      });
  };

  const tokenDrag = new TokenDrag(send);
  const curveDrag = new CurveDrag(send);
  const hover = new HoverHighlight(send);

  function refreshVariablePicker(state: RenderState): void {
    const existing = new Set<string>();
    for (const option of Array.from(variablePicker.options)) {
      existing.add(option.value);
    }
    for (const variable of state.variables) {
      if (!existing.has(variable.id)) {
        const option = document.createElement("option");
        option.value = variable.id;
        option.textContent = `${variable.name} = ${variable.value.toFixed(3)}`;
        variablePicker.appendChild(option);
      }
    }
    for (const option of Array.from(variablePicker.options)) {
      const variable = state.variables.find((v) => v.id === option.value);
      if (variable !== undefined) {
        option.textContent = `${variable.name} = ${variable.value.toFixed(3)}`;
      }
    }
  }

  // initial connection: banner + retry handled inside subscribe; the first
  // createSession failure is surfaced directly
  try {
    banner(null);
    const initial = await client.createSession();
    gate.offer(initial);
  } catch (err) {
    banner(`cannot reach the session service: ${(err as Error).message}`);
    throw err;
  }
  client.subscribe(
    (state) => gate.offer(state),
    (state) => gate.resync(state),
  );

  pageImage = new Image();
  pageImage.onload = () => {
    if (current !== null) {
      paint(ctx, buildScene(current), pageImage);
    }
  };
  pageImage.src = `${serviceUrl}/api/page-image`;

  let dragStart: { x: number; y: number; draggable: DraggableState | null } | null = null;

  canvas.addEventListener("pointerdown", (ev) => {
    if (current === null) {
      return;
    }
    const rect = canvas.getBoundingClientRect();
    const px = ev.clientX - rect.left;
    const py = ev.clientY - rect.top;
    const draggable = handleAt(current, px, py);
    dragStart = { x: px, y: py, draggable };
    if (draggable !== null && draggable.kind === "variable" && draggable.variable_id !== null) {
      tokenDrag.begin(draggable.variable_id, draggable.value ?? 0);
      return;
    }
    // pressing inside a figure with a plot starts a curve drag
    for (const fig of current.figures) {
      const [gx, gy, gw, gh] = fig.box;
      if (px >= gx && px <= gx + gw && py >= gy && py <= gy + gh && fig.plots.length > 0) {
        const chosen = variablePicker.value;
        if (chosen === "") {
          toast("choose a variable to control, then drag the curve");
          return;
        }
        if (fig.coord_map !== null) {
          curveDrag.begin(fig.plots[0].plot_id, chosen, fig.coord_map);
        }
        return;
      }
    }
  });

  canvas.addEventListener("pointermove", (ev) => {
    if (current === null) {
      return;
    }
    const rect = canvas.getBoundingClientRect();
    const px = ev.clientX - rect.left;
    const py = ev.clientY - rect.top;
    if (tokenDrag.active && dragStart !== null) {
      tokenDrag.move(px - dragStart.x);
      return;
    }
    const over = handleAt(current, px, py);
    if (over !== null && over.kind === "variable" && over.variable_id !== null) {
      hover.enter(over.variable_id);
    } else {
      hover.leave();
    }
  });

  canvas.addEventListener("pointerup", (ev) => {
    const rect = canvas.getBoundingClientRect();
    const px = ev.clientX - rect.left;
    const py = ev.clientY - rect.top;
    if (tokenDrag.active) {
      tokenDrag.end();
    } else if (curveDrag.active) {
      curveDrag.end(px, py);
    } else if (dragStart !== null && dragStart.draggable !== null) {
      const d = dragStart.draggable;
      if (d.kind === "literal") {
        send({ op: "promote", formula: d.formula_id, span: d.span });
      }
    } else if (current !== null && dragStart !== null) {
      // click a formula box to select it; click a figure to bind the selection
      for (const formula of current.formulas) {
        if (formula.box === null) {
          continue;
        }
        const [fx, fy, fw, fh] = formula.box;
        if (px >= fx && px <= fx + fw && py >= fy && py <= fy + fh) {
          selectedFormula = formula.id;
          status.textContent = `selected ${formula.id}`;
          dragStart = null;
          return;
        }
      }
      for (const fig of current.figures) {
        const [gx, gy, gw, gh] = fig.box;
        if (px >= gx && px <= gx + gw && py >= gy && py <= gy + gh && selectedFormula !== null) {
          send({ op: "bind", formula: selectedFormula, figure: fig.id });
          break;
        }
      }
    }
    dragStart = null;
  });

  (document.getElementById("hint") as HTMLButtonElement).onclick = () => {
    if (selectedFormula !== null) {
      send({ op: "hint", formula: selectedFormula });
    }
  };
  (document.getElementById("example") as HTMLButtonElement).onclick = () => {
    if (selectedFormula !== null) {
      send({ op: "example", formula: selectedFormula });
    }
  };
}

start().catch((err) => console.error(err));
