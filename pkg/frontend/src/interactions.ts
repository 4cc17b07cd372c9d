// Pointer gestures -> protocol events. Dragging never mutates the display
// directly: the view only changes when an acknowledged RenderState arrives.

import type { CoordMapState, SessionEvent } from "./protocol.js";
import { pixelToWorld } from "./protocol.js";

export const PIXELS_PER_UNIT = 40; // horizontal drag sensitivity
export const MAX_EVENTS_PER_SECOND = 30;

export interface TokenDragOptions {
  pixelsPerUnit?: number;
  maxEventsPerSecond?: number;
  now?: () => number;
}

/**
 * Horizontal token drag: pixels become value deltas at a fixed sensitivity,
 * emitted as `set` events throttled to the configured rate. The final value
 * is always flushed on release so the last sample never goes missing.
 */
export class TokenDrag {
  private readonly pixelsPerUnit: number;
  private readonly minInterval: number;
  private readonly now: () => number;
  private variableId: string | null = null;
  private startValue = 0;
  private lastSent: number | null = null;
  private lastSentAt = -Infinity;
  private pendingValue: number | null = null;

  constructor(
    private readonly send: (event: SessionEvent) => void,
    options: TokenDragOptions = {},
  ) {
    this.pixelsPerUnit = options.pixelsPerUnit ?? PIXELS_PER_UNIT;
    this.minInterval = 1000 / (options.maxEventsPerSecond ?? MAX_EVENTS_PER_SECOND);
    this.now = options.now ?? (() => Date.now());
  }

  get active(): boolean {
    return this.variableId !== null;
  }

  begin(variableId: string, currentValue: number): void {
    this.variableId = variableId;
    this.startValue = currentValue;
    this.lastSent = null;
    this.lastSentAt = -Infinity;
    this.pendingValue = null;
  }

  /** Pointer moved `dxPixels` from the drag start. */
  move(dxPixels: number): void {
    if (this.variableId === null) {
      return;
    }
    const value = this.startValue + dxPixels / this.pixelsPerUnit;
    this.pendingValue = value;
    const elapsed = this.now() - this.lastSentAt;
    if (elapsed >= this.minInterval && value !== this.lastSent) {
      this.emit(value);
    }
  }

  /** Pointer released: flush the final value if it was throttled away. */
  end(): void {
    if (this.variableId === null) {
      return;
    }
    if (this.pendingValue !== null && this.pendingValue !== this.lastSent) {
      this.emit(this.pendingValue);
    }
    this.variableId = null;
    this.pendingValue = null;
  }

  private emit(value: number): void {
    this.send({ op: "set", var: this.variableId as string, value });
    this.lastSent = value;
    this.lastSentAt = this.now();
  }
}

/**
 * Curve drag: the release point (in pixels, mapped through the figure's
 * coordinate map) becomes one `drag` event for the chosen variable. The
 * caller surfaces DragUnsolvable rejections as a snap-back toast; nothing is
 * moved locally in the meantime.
 */
export class CurveDrag {
  private plotId: string | null = null;
  private variableId: string | null = null;
  private coordMap: CoordMapState | null = null;

  constructor(private readonly send: (event: SessionEvent) => void) {}

  get active(): boolean {
    return this.plotId !== null;
  }

  begin(plotId: string, variableId: string, coordMap: CoordMapState): void {
    this.plotId = plotId;
    this.variableId = variableId;
    this.coordMap = coordMap;
  }

  /** Release at a pixel point; emits the drag event, or nothing if inactive. */
  end(px: number, py: number): void {
    if (this.plotId === null || this.variableId === null || this.coordMap === null) {
      return;
    }
    const [wx, wy] = pixelToWorld(this.coordMap, px, py);
    this.send({ op: "drag", plot: this.plotId, point: [wx, wy], var: this.variableId });
    this.plotId = null;
    this.variableId = null;
    this.coordMap = null;
  }

  cancel(): void {
    this.plotId = null;
    this.variableId = null;
    this.coordMap = null;
  }
}

/** Dwell timer for hover highlights (pen-hold behavior, 300 ms default). */
export class HoverHighlight {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private current: string | null = null;

  constructor(
    private readonly send: (event: SessionEvent) => void,
    private readonly dwellMs = 300,
  ) {}

  enter(symbol: string): void {
    this.leave();
    this.timer = setTimeout(() => {
      this.current = symbol;
      this.send({ op: "highlight", symbol });
    }, this.dwellMs);
  }

  leave(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (this.current !== null) {
      this.send({ op: "highlight", symbol: null });
      this.current = null;
    }
  }
}
