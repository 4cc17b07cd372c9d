// Thin painter: replays a display list onto a 2D canvas context. Everything
// interesting happened in scene.ts; keeping this dumb keeps it testable.

import type { DrawOp } from "./scene.js";

export function paint(
  ctx: CanvasRenderingContext2D,
  ops: DrawOp[],
  pageImage: CanvasImageSource | null,
): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  ctx.fillStyle = "#ffffff";
  ctx.fillRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  for (const op of ops) {
    switch (op.kind) {
      case "image":
        if (pageImage !== null) {
          ctx.globalAlpha = 0.6;
          ctx.drawImage(pageImage, op.x, op.y, op.w, op.h);
          ctx.globalAlpha = 1.0;
        }
        break;
      case "rect":
        ctx.strokeStyle = op.stroke;
        ctx.lineWidth = 1;
        ctx.setLineDash(op.dash ?? []);
        ctx.strokeRect(op.x, op.y, op.w, op.h);
        ctx.setLineDash([]);
        break;
      case "line":
        ctx.strokeStyle = op.stroke;
        ctx.lineWidth = op.width;
        ctx.setLineDash(op.dash ?? []);
        ctx.beginPath();
        ctx.moveTo(op.x1, op.y1);
        ctx.lineTo(op.x2, op.y2);
        ctx.stroke();
        ctx.setLineDash([]);
        break;
      case "polyline": {
        if (op.points.length < 2) {
          break;
        }
        ctx.strokeStyle = op.stroke;
        ctx.lineWidth = op.width;
        ctx.beginPath();
        ctx.moveTo(op.points[0][0], op.points[0][1]);
        for (const [x, y] of op.points.slice(1)) {
          ctx.lineTo(x, y);
        }
        if (op.closed) {
          ctx.closePath();
        }
        ctx.stroke();
        break;
      }
      case "text":
        ctx.fillStyle = op.fill;
        ctx.font = `${op.bold ? "bold " : ""}${op.size}px sans-serif`;
        ctx.fillText(op.text, op.x, op.y);
        break;
      case "handle":
        ctx.fillStyle = "#2e8540";
        ctx.beginPath();
        ctx.arc(op.x, op.y, 4, 0, 2 * Math.PI);
        ctx.fill();
        break;
    }
  }
}
