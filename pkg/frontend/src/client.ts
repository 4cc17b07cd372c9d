// Session client: request/response over fetch plus the one-way SSE stream.
// Pushes may arrive out of order relative to POST acknowledgements; a
// revision gate applies states strictly in order and drops stale ones.

import type { EventResponse, ProtocolError, RenderState, SessionEvent } from "./protocol.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface ClientOptions {
  fetchImpl?: FetchLike;
  /** retry schedule (ms) for connect/subscribe; the last entry repeats */
  backoff?: number[];
  onError?: (message: string) => void;
}

export class RevisionGate {
  private last = -1;
  private pending = new Map<number, RenderState>();

  constructor(private applyState: (state: RenderState) => void) {}

  get lastApplied(): number {
    return this.last;
  }

  /**
   * Apply states strictly in revision order: stale ones (at or below the
   * last drawn revision) are dropped, ahead-of-order ones buffered until the
   * gap fills. Revisions are dense per session, and POST acknowledgements
   * flow through the same gate, so gaps fill naturally. The very first state
   * (whatever revision the session is at) becomes the baseline.
   */
  offer(state: RenderState): void {
    if (this.last === -1) {
      this.last = state.revision;
      this.applyState(state);
      this.flush();
      return;
    }
    if (state.revision <= this.last) {
      return;
    }
    this.pending.set(state.revision, state);
    this.flush();
  }

  /** After a reconnect the server may have jumped ahead; accept as-is. */
  resync(state: RenderState): void {
    this.pending.clear();
    if (state.revision > this.last || this.last === -1) {
      this.last = state.revision;
      this.applyState(state);
    }
  }

  private flush(): void {
    for (;;) {
      const next = this.pending.get(this.last + 1);
      if (next === undefined) {
        return;
      }
      this.pending.delete(next.revision);
      this.last = next.revision;
      this.applyState(next);
    }
  }
}

export class SessionClient {
  readonly baseUrl: string;
  sessionId: string | null = null;
  private readonly fetchImpl: FetchLike;
  private readonly backoff: number[];
  private readonly onError: (message: string) => void;
  private closed = false;

  constructor(baseUrl: string, options: ClientOptions = {}) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchImpl = options.fetchImpl ?? ((url, init) => fetch(url, init));
    this.backoff = options.backoff ?? [500, 1000, 2000, 5000];
    this.onError = options.onError ?? (() => {});
  }

  async createSession(): Promise<RenderState> {
    const body = await this.postJson(`${this.baseUrl}/api/sessions`, undefined);
    this.sessionId = body.session as string;
    return body.state as RenderState;
  }

  async sendEvent(event: SessionEvent): Promise<EventResponse> {
    if (this.sessionId === null) {
      throw new Error("no session; call createSession first");
    }
    const body = await this.postJson(
      `${this.baseUrl}/api/sessions/${this.sessionId}/events`,
      event,
    );
    return body as unknown as EventResponse;
  }

  async fetchState(): Promise<EventResponse> {
    const response = await this.fetchImpl(
      `${this.baseUrl}/api/sessions/${this.sessionId}/render-state`,
    );
    if (!response.ok) {
      throw await this.asError(response);
    }
    return (await response.json()) as EventResponse;
  }

  /**
   * Subscribe to the SSE stream, feeding every pushed state to `onState`.
   * Reconnects with backoff; after a reconnect the current state is
   * re-fetched so the view never sticks on a gap. Returns a stop function.
   */
  subscribe(onState: (state: RenderState) => void, onResync?: (state: RenderState) => void): () => void {
    this.closed = false;
    let attempt = 0;
    const run = async (): Promise<void> => {
      while (!this.closed) {
        try {
          const response = await this.fetchImpl(
            `${this.baseUrl}/api/sessions/${this.sessionId}/stream`,
          );
          if (!response.ok || response.body === null) {
            throw new Error(`stream unavailable (${response.status})`);
          }
          attempt = 0;
          await this.consumeSse(response.body, onState);
          if (this.closed) {
            return;
          }
          // stream ended: re-fetch the latest state before resubscribing
          const current = await this.fetchState();
          (onResync ?? onState)(current.state);
        } catch (err) {
          if (this.closed) {
            return;
          }
          this.onError(err instanceof Error ? err.message : String(err));
          const wait = this.backoff[Math.min(attempt, this.backoff.length - 1)];
          attempt += 1;
          await sleep(wait);
        }
      }
    };
    void run();
    return () => {
      this.closed = true;
    };
  }

  private async consumeSse(
    body: ReadableStream<Uint8Array>,
    onState: (state: RenderState) => void,
  ): Promise<void> {
    const reader = body.getReader();
    const decoder = new TextDecoder();
    let buffer = "";
    for (;;) {
      const { done, value } = await reader.read();
      if (done) {
        return;
      }
      buffer += decoder.decode(value, { stream: true });
      let index;
      while ((index = buffer.indexOf("\n\n")) >= 0) {
        const chunk = buffer.slice(0, index);
        buffer = buffer.slice(index + 2);
        for (const line of chunk.split("\n")) {
          if (line.startsWith("data:")) {
            onState(JSON.parse(line.slice(5)) as RenderState);
          }
        }
      }
      if (this.closed) {
        await reader.cancel();
        return;
      }
    }
  }

  private async postJson(url: string, payload: unknown): Promise<Record<string, unknown>> {
    const response = await this.fetchImpl(url, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: payload === undefined ? undefined : JSON.stringify(payload),
    });
    if (!response.ok) {
      throw await this.asError(response);
    }
    return (await response.json()) as Record<string, unknown>;
  }

  private async asError(response: Response): Promise<Error> {
    let detail = `${response.status}`;
    try {
      const body = (await response.json()) as ProtocolError;
      detail = `${body.error.code}: ${body.error.message}`;
    } catch {
      // non-JSON error body; keep the status text
    }
    return new Error(detail);
  }
}

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}
