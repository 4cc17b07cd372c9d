// OverlayScene: a pure function of the latest RenderState. The display list
// is what the visual-regression goldens snapshot; the canvas painter just
// replays it. No math is ever evaluated here — every number comes off the
// wire.

import type { DraggableState, RenderState } from "./protocol.js";

export type DrawOp =
  | { kind: "image"; href: string; x: number; y: number; w: number; h: number }
  | { kind: "rect"; x: number; y: number; w: number; h: number; stroke: string; dash?: number[] }
  | {
      kind: "line";
      x1: number;
      y1: number;
      x2: number;
      y2: number;
      stroke: string;
      width: number;
      dash?: number[];
    }
  | {
      kind: "polyline";
      points: [number, number][];
      closed: boolean;
      stroke: string;
      width: number;
    }
  | { kind: "text"; x: number; y: number; text: string; fill: string; size: number; bold?: boolean }
  | { kind: "handle"; x: number; y: number; token: string; draggable: DraggableState };

export const PALETTE = {
  formulaBox: "#4a90d9",
  formulaText: "#1a5f9e",
  figureBox: "#9a9a9a",
  axis: "#444444",
  plot: "#d9534f",
  highlight: "#f0ad4e",
  panelTitle: "#333333",
  panelBody: "#555555",
  handle: "#2e8540",
};

const PANEL_LINE_HEIGHT = 16;

export function buildScene(state: RenderState): DrawOp[] {
  const ops: DrawOp[] = [];
  const page = state.page;
  ops.push({ kind: "image", href: "/api/page-image", x: 0, y: 0, w: page.width, h: page.height });

  for (const formula of state.formulas) {
    if (formula.box === null) {
      continue;
    }
    const [x, y, w, h] = formula.box;
    ops.push({ kind: "rect", x, y, w, h, stroke: PALETTE.formulaBox });
    ops.push({
      kind: "text",
      x,
      y: y + h + 12,
      text: formula.latex,
      fill: PALETTE.formulaText,
      size: 12,
    });
  }

  for (const figure of state.figures) {
    const [x, y, w, h] = figure.box;
    ops.push({ kind: "rect", x, y, w, h, stroke: PALETTE.figureBox, dash: [4, 3] });
    if (figure.frame !== null) {
      for (const seg of [figure.frame.x_axis, figure.frame.y_axis]) {
        ops.push({
          kind: "line",
          x1: seg[0],
          y1: seg[1],
          x2: seg[2],
          y2: seg[3],
          stroke: PALETTE.axis,
          width: 1,
        });
      }
    }
    for (const plot of figure.plots) {
      for (const polyline of plot.polylines) {
        ops.push({
          kind: "polyline",
          points: polyline.points,
          closed: polyline.closed,
          stroke: PALETTE.plot,
          width: 1.5,
        });
      }
    }
    for (const highlight of figure.highlights) {
      const [[x1, y1], [x2, y2]] = highlight.points;
      ops.push({
        kind: "line",
        x1,
        y1,
        x2,
        y2,
        stroke: PALETTE.highlight,
        width: 2,
        dash: [6, 4],
      });
    }
  }

  let panelY = 44;
  const panelX = page.width + 12;
  ops.push({
    kind: "text",
    x: panelX,
    y: 20,
    text: `revision ${state.revision}`,
    fill: PALETTE.panelTitle,
    size: 13,
  });
  for (const panel of state.panels) {
    ops.push({
      kind: "text",
      x: panelX,
      y: panelY,
      text: `${panel.kind} for ${panel.formula_id}`,
      fill: PALETTE.panelTitle,
      size: 12,
      bold: true,
    });
    panelY += PANEL_LINE_HEIGHT;
    for (const line of panelLines(panel)) {
      ops.push({ kind: "text", x: panelX, y: panelY, text: line, fill: PALETTE.panelBody, size: 11 });
      panelY += PANEL_LINE_HEIGHT;
    }
    panelY += 8;
  }

  for (const draggable of state.draggables) {
    ops.push({
      kind: "handle",
      x: draggable.anchor[0],
      y: draggable.anchor[1],
      token: draggable.token,
      draggable,
    });
  }
  return ops;
}

function panelLines(panel: RenderState["panels"][number]): string[] {
  if (panel.error) {
    return [panel.error];
  }
  if (panel.kind === "hint") {
    return (panel.steps ?? []).map((step) => `${step.latex}   [${step.narration}]`);
  }
  const expansion = panel.expansion;
  if (!expansion) {
    return [];
  }
  const lines = [expansion.rendered];
  if (expansion.exact !== null) {
    lines.push(`= ${expansion.exact}`);
  } else if (expansion.value !== null) {
    lines.push(`= ${expansion.value}`);
  }
  return lines;
}

/** Formula text currently shown for a region (what the e2e asserts on). */
export function formulaText(state: RenderState, formulaId: string): string | null {
  const formula = state.formulas.find((f) => f.id === formulaId);
  return formula === undefined ? null : formula.latex;
}

/** Hit-test the draggable handles (used by pointer handlers and tests). */
export function handleAt(
  state: RenderState,
  px: number,
  py: number,
  radius = 10,
): DraggableState | null {
  let best: DraggableState | null = null;
  let bestDist = radius;
  for (const d of state.draggables) {
    const dist = Math.hypot(d.anchor[0] - px, d.anchor[1] - py);
    if (dist <= bestDist) {
      best = d;
      bestDist = dist;
    }
  }
  return best;
}
