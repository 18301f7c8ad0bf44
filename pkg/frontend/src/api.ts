// Typed client for the elab JSON service.
//
// Every panel funnels its requests through one named channel; issuing a new
// request on a channel aborts whatever was still in flight there, so the UI
// never renders a stale response (latest wins).  All numbers are passed
// through verbatim: the service is the only place arithmetic happens.

export interface StretchEstimate {
  slope: number;
  e_estimate: number;
}

export interface TangentSlope {
  slope: number;
}

export interface CurveData {
  points: [number, number][];
  tangent_at_intercept: { slope: number; intercept: number };
}

export interface ValueResponse {
  value: number;
}

export interface EulerPathData {
  points: [number, number][];
}

export interface SeriesResponse {
  value: number;
  terms: number;
  tail_bound: number;
}

export function isAbortError(err: unknown): boolean {
  return err instanceof Error && err.name === "AbortError";
}

export class ApiClient {
  private inflight = new Map<string, AbortController>();

  constructor(readonly baseUrl: string, private fetchFn: typeof fetch = fetch) {}

  async get<T>(channel: string, path: string, params: Record<string, number | string>): Promise<T> {
    const prev = this.inflight.get(channel);
    if (prev) {
      prev.abort();
    }
    const ctrl = new AbortController();
    this.inflight.set(channel, ctrl);
    const query = Object.entries(params)
      .map(([k, v]) => `${encodeURIComponent(k)}=${encodeURIComponent(String(v))}`)
      .join("&");
    try {
      const resp = await this.fetchFn(`${this.baseUrl}${path}?${query}`, { signal: ctrl.signal });
      const body = await resp.json().catch(() => ({}));
      if (!resp.ok) {
        throw new Error((body as { error?: string }).error ?? `request failed: HTTP ${resp.status}`);
      }
      return body as T;
    } finally {
      if (this.inflight.get(channel) === ctrl) {
        this.inflight.delete(channel);
      }
    }
  }

  tangentSlope(channel: string, a: number, h: number): Promise<TangentSlope> {
    return this.get(channel, "/api/tangent-slope", { a, h });
  }

  stretchEstimate(channel: string, a: number, stretch: number): Promise<StretchEstimate> {
    return this.get(channel, "/api/stretch-estimate", { a, stretch });
  }

  curve(channel: string, a: number, stretch: number, xmin: number, xmax: number, samples: number): Promise<CurveData> {
    return this.get(channel, "/api/curve", { a, stretch, xmin, xmax, samples });
  }

  compound(channel: string, n: number): Promise<ValueResponse> {
    return this.get(channel, "/api/compound", { n });
  }

  compoundX(channel: string, x: number, n: number): Promise<ValueResponse> {
    return this.get(channel, "/api/compound-x", { x, n });
  }

  eulerPath(channel: string, x: number, n: number): Promise<EulerPathData> {
    return this.get(channel, "/api/euler-path", { x, n });
  }
}
