// Visual-regression goldens: the display list is a pure function of the
// RenderState, so freezing it freezes the pixels the painter will produce.
// Goldens were recorded from the first verified run; regenerate with
// UPDATE_SCENE_GOLDENS=1 after an intentional change.

import { mkdirSync, readFileSync, writeFileSync, existsSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import type { RenderState } from "../src/protocol.js";
import { buildScene, formulaText, handleAt } from "../src/scene.js";

const here = dirname(fileURLToPath(import.meta.url));
const goldens = join(here, "goldens");

function loadState(name: string): RenderState {
  return JSON.parse(readFileSync(join(goldens, `${name}.json`), "utf-8")) as RenderState;
}

function checkGolden(name: string, actual: unknown): void {
  const path = join(goldens, `${name}.scene.json`);
  const serialized = JSON.stringify(actual, null, 1);
  if (process.env.UPDATE_SCENE_GOLDENS === "1" || !existsSync(path)) {
    mkdirSync(goldens, { recursive: true });
    writeFileSync(path, serialized);
  }
  expect(serialized).toBe(readFileSync(path, "utf-8"));
}

describe("scene building", () => {
  for (const name of ["state1", "state2", "state3"]) {
    it(`replays ${name} to an identical display list`, () => {
      const state = loadState(name);
      const first = buildScene(state);
      const second = buildScene(state);
      expect(JSON.stringify(second)).toBe(JSON.stringify(first)); // pure
      checkGolden(name, first);
    });
  }

  it("shows substituted formula text after the walkthrough edits", () => {
    const state = loadState("state1");
    expect(formulaText(state, "f1")).toBe("y = (x + 5)^{2} + 4");
  });

  it("draws one polyline per bound formula in the overlay state", () => {
    const ops = buildScene(loadState("state2"));
    const polylines = ops.filter((op) => op.kind === "polyline");
    expect(polylines.length).toBe(2);
  });

  it("renders the highlight guide as a dashed line", () => {
    const ops = buildScene(loadState("state2"));
    const dashed = ops.filter((op) => op.kind === "line" && op.dash?.length === 2 && op.width === 2);
    expect(dashed.length).toBe(1);
  });

  it("lays out hint and example panels", () => {
    const ops = buildScene(loadState("state3"));
    const texts = ops.filter((op) => op.kind === "text").map((op) => (op as { text: string }).text);
    expect(texts.some((t) => t.includes("hint for f2"))).toBe(true);
    expect(texts.some((t) => t.includes("1 + 2 + \\cdots + 20"))).toBe(true);
    expect(texts.some((t) => t.includes("t > 3134.55/1.55192"))).toBe(true);
  });

  it("hit-tests draggable handles by anchor distance", () => {
    const state = loadState("state1");
    const handle = state.draggables.find((d) => d.variable_id === "a");
    expect(handle).toBeDefined();
    const [ax, ay] = handle!.anchor;
    expect(handleAt(state, ax + 3, ay - 3)?.variable_id).toBe("a");
    expect(handleAt(state, ax + 300, ay + 200)).toBeNull();
  });

  it("contains no math evaluation: formula text comes straight off the wire", () => {
    // the review-gate check: scene and client sources never evaluate user
    // formulas; there is no parser and no eval in the bundle
    const sources = ["scene.ts", "client.ts", "interactions.ts", "protocol.ts", "canvas.ts"].map(
      (f) => readFileSync(join(here, "..", "src", f), "utf-8"),
    );
    for (const source of sources) {
      expect(source.includes("eval(")).toBe(false);
      expect(source.includes("new Function")).toBe(false);
    }
  });
});
