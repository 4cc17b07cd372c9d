import { describe, expect, it } from "vitest";

import { CurveDrag, HoverHighlight, TokenDrag } from "../src/interactions.js";
import type { SessionEvent } from "../src/protocol.js";

function collector() {
  const events: SessionEvent[] = [];
  return { events, send: (e: SessionEvent) => events.push(e) };
}

describe("token drag", () => {
  it("maps 80 px to +2 value at the default sensitivity", () => {
    const { events, send } = collector();
    let t = 0;
    const drag = new TokenDrag(send, { now: () => t });
    drag.begin("a", 3);
    t = 100;
    drag.move(80);
    drag.end();
    expect(events.length).toBe(1);
    expect(events[0]).toEqual({ op: "set", var: "a", value: 5 });
  });

  it("throttles to the configured rate and flushes the final value", () => {
    const { events, send } = collector();
    let t = 0;
    const drag = new TokenDrag(send, { now: () => t, maxEventsPerSecond: 10 }); // >=100ms apart
    drag.begin("a", 0);
    for (let i = 1; i <= 50; i++) {
      t = i * 10; // a move every 10ms for 500ms
      drag.move(i);
    }
    drag.end();
    expect(events.length).toBeLessThanOrEqual(7); // ~5 sends + the final flush
    expect(events[events.length - 1]).toEqual({ op: "set", var: "a", value: 50 / 40 });
  });

  it("emits nothing when not begun or when value unchanged", () => {
    const { events, send } = collector();
    const drag = new TokenDrag(send, { now: () => 0 });
    drag.move(40);
    drag.end();
    expect(events).toEqual([]);
    drag.begin("a", 1);
    drag.move(0); // value identical to start? start+0/40 = 1... emitted once
    drag.end();
    expect(events.length).toBe(1);
  });

  it("custom sensitivity applies", () => {
    const { events, send } = collector();
    const drag = new TokenDrag(send, { now: () => 0, pixelsPerUnit: 10 });
    drag.begin("b", 0);
    drag.move(25);
    drag.end();
    expect(events[0]).toEqual({ op: "set", var: "b", value: 2.5 });
  });
});

describe("curve drag", () => {
  const coordMap = { origin: [370, 400] as [number, number], sx: 36, sy: 36, y_down: true };

  it("converts the release pixel to a world-point drag event", () => {
    const { events, send } = collector();
    const drag = new CurveDrag(send);
    drag.begin("p0", "b", coordMap);
    drag.end(370 - 5 * 36, 400 - 6 * 36); // world (-5, 6)
    expect(events.length).toBe(1);
    expect(events[0]).toEqual({ op: "drag", plot: "p0", point: [-5, 6], var: "b" });
  });

  it("does nothing without a chosen variable/plot", () => {
    const { events, send } = collector();
    const drag = new CurveDrag(send);
    drag.end(100, 100);
    drag.cancel();
    expect(events).toEqual([]);
  });
});

describe("hover highlight", () => {
  it("fires after the dwell and clears on leave", async () => {
    const { events, send } = collector();
    const hover = new HoverHighlight(send, 10);
    hover.enter("x");
    await new Promise((r) => setTimeout(r, 30));
    hover.leave();
    expect(events).toEqual([
      { op: "highlight", symbol: "x" },
      { op: "highlight", symbol: null },
    ]);
  });

  it("a quick pass-through never fires", async () => {
    const { events, send } = collector();
    const hover = new HoverHighlight(send, 50);
    hover.enter("x");
    hover.leave(); // left before the dwell elapsed
    await new Promise((r) => setTimeout(r, 80));
    expect(events).toEqual([]);
  });
});
