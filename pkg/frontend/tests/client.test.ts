import { describe, expect, it } from "vitest";

import { RevisionGate, SessionClient } from "../src/client.js";
import type { RenderState } from "../src/protocol.js";

function state(revision: number): RenderState {
  return {
    revision,
    session: "s0",
    page: { image: "page.png", width: 10, height: 10 },
    formulas: [],
    figures: [],
    panels: [],
    draggables: [],
    variables: [],
  };
}

describe("revision gate", () => {
  it("applies in order and buffers ahead-of-order pushes", () => {
    const applied: number[] = [];
    const gate = new RevisionGate((s) => applied.push(s.revision));
    gate.offer(state(0));
    gate.offer(state(2)); // arrives early: buffered until 1 lands
    gate.offer(state(1));
    expect(applied).toEqual([0, 1, 2]);
  });

  it("discards stale responses", () => {
    const applied: number[] = [];
    const gate = new RevisionGate((s) => applied.push(s.revision));
    gate.offer(state(0));
    gate.offer(state(1));
    gate.offer(state(1));
    gate.offer(state(0));
    expect(applied).toEqual([0, 1]);
    expect(gate.lastApplied).toBe(1);
  });

  it("accepts any first revision as the baseline (mid-session subscribe)", () => {
    const applied: number[] = [];
    const gate = new RevisionGate((s) => applied.push(s.revision));
    gate.offer(state(7));
    gate.offer(state(8));
    expect(applied).toEqual([7, 8]);
  });

  it("resync jumps over gaps after a reconnect", () => {
    const applied: number[] = [];
    const gate = new RevisionGate((s) => applied.push(s.revision));
    gate.offer(state(0));
    gate.resync(state(40));
    gate.offer(state(41));
    expect(applied).toEqual([0, 40, 41]);
  });
});

function fakeResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("session client", () => {
  it("creates a session and posts events", async () => {
    const calls: { url: string; body: unknown }[] = [];
    const client = new SessionClient("http://svc", {
      fetchImpl: async (url, init) => {
        calls.push({ url, body: init?.body ? JSON.parse(init.body as string) : null });
        if (url.endsWith("/api/sessions")) {
          return fakeResponse(200, { session: "s3", revision: 0, state: state(0) });
        }
        return fakeResponse(200, { revision: 1, state: state(1) });
      },
    });
    const initial = await client.createSession();
    expect(initial.revision).toBe(0);
    expect(client.sessionId).toBe("s3");
    const ack = await client.sendEvent({ op: "set", var: "a", value: 2 });
    expect(ack.revision).toBe(1);
    expect(calls[1].url).toBe("http://svc/api/sessions/s3/events");
    expect(calls[1].body).toEqual({ op: "set", var: "a", value: 2 });
  });

  it("surfaces protocol errors with their code", async () => {
    const client = new SessionClient("http://svc", {
      fetchImpl: async (url) => {
        if (url.endsWith("/api/sessions")) {
          return fakeResponse(200, { session: "s0", revision: 0, state: state(0) });
        }
        return fakeResponse(409, {
          error: { code: "DragUnsolvableError", message: "no sign change" },
        });
      },
    });
    await client.createSession();
    await expect(
      client.sendEvent({ op: "drag", plot: "p0", point: [0, 0], var: "a" }),
    ).rejects.toThrow(/DragUnsolvableError/);
  });

  it("reports stream failures and retries with backoff", async () => {
    const errors: string[] = [];
    let attempts = 0;
    const client = new SessionClient("http://svc", {
      backoff: [5, 5],
      onError: (m) => errors.push(m),
      fetchImpl: async (url) => {
        if (url.endsWith("/api/sessions")) {
          return fakeResponse(200, { session: "s0", revision: 0, state: state(0) });
        }
        attempts += 1;
        throw new Error("connection refused");
      },
    });
    await client.createSession();
    const stop = client.subscribe(() => {});
    await new Promise((r) => setTimeout(r, 40));
    stop();
    expect(errors.length).toBeGreaterThanOrEqual(2); // banner shown, retry happened
    expect(attempts).toBeGreaterThanOrEqual(2);
  });

  it("parses SSE frames from a streamed body", async () => {
    const frames = [
      `data: ${JSON.stringify(state(0))}\n\n`,
      ": keepalive\n\n",
      `data: ${JSON.stringify(state(1))}\n\n`,
    ];
    const encoder = new TextEncoder();
    const body = new ReadableStream<Uint8Array>({
      start(controller) {
        for (const frame of frames) {
          controller.enqueue(encoder.encode(frame));
        }
        controller.close();
      },
    });
    const seen: number[] = [];
    const client = new SessionClient("http://svc", {
      fetchImpl: async (url) => {
        if (url.endsWith("/api/sessions")) {
          return fakeResponse(200, { session: "s0", revision: 0, state: state(0) });
        }
        if (url.includes("/stream")) {
          return new Response(body, { status: 200 });
        }
        // the post-stream refetch
        return fakeResponse(200, { revision: 1, state: state(1) });
      },
    });
    await client.createSession();
    const stop = client.subscribe((s) => {
      seen.push(s.revision);
      if (seen.length >= 2) {
        stop();
      }
    });
    await new Promise((r) => setTimeout(r, 50));
    expect(seen.slice(0, 2)).toEqual([0, 1]);
  });
});
