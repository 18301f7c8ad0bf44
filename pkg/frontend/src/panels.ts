// Panel controllers: DOM-free view-model builders over the ApiClient.
//
// Each controller owns its slice of the explorer state, fetches on demand,
// and hands back a view object whose numbers are the service's responses
// verbatim.  A controller method returns null when its request was
// superseded by a newer one (latest wins) so callers simply skip rendering.

import { ApiClient, isAbortError } from "./api.js";

/** The "found e" highlight threshold on |slope - 1|. */
export const SLOPE_ONE_THRESHOLD = 0.005;

export interface StretchView {
  base: number;
  stretch: number;
  curveLabel: string;
  curve: [number, number][];
  tangent: { slope: number; intercept: number };
  slope: number;
  estimate: number;
  foundE: boolean;
}

export interface CompoundView {
  n: number;
  value: number;
  history: [number, number][];
}

export interface EulerView {
  x: number;
  n: number;
  path: [number, number][];
  exactCurve: [number, number][];
  endpointValue: number;
  endpointLabel: string;
}

function describeStretchedCurve(base: number, stretch: number): string {
  if (stretch === 1) {
    return `y = ${base}^x`;
  }
  return `y = ${base}^(x/${stretch})`;
}

export class StretchPanel {
  lastError: string | null = null;
  private seq = 0;

  constructor(private client: ApiClient, private samples = 257) {}

  async update(base: number, stretch: number): Promise<StretchView | null> {
    const mySeq = ++this.seq;
    try {
      const curve = await this.client.curve("stretch", base, stretch, -3, 3, this.samples);
      if (mySeq !== this.seq) {
        return null;
      }
      const est = await this.client.stretchEstimate("stretch", base, stretch);
      if (mySeq !== this.seq) {
        return null;
      }
      this.lastError = null;
      return {
        base,
        stretch,
        curveLabel: describeStretchedCurve(base, stretch),
        curve: curve.points,
        tangent: curve.tangent_at_intercept,
        slope: est.slope,
        estimate: est.e_estimate,
        foundE: Math.abs(est.slope - 1) < SLOPE_ONE_THRESHOLD,
      };
    } catch (err) {
      if (isAbortError(err)) {
        return null;
      }
      this.lastError = err instanceof Error ? err.message : String(err);
      return null;
    }
  }
}

export class CompoundPanel {
  lastError: string | null = null;
  private history = new Map<number, number>();
  private seq = 0;

  constructor(private client: ApiClient) {}

  async update(n: number): Promise<CompoundView | null> {
    const mySeq = ++this.seq;
    try {
      const resp = await this.client.compound("compound", n);
      if (mySeq !== this.seq) {
        return null;
      }
      this.lastError = null;
      this.history.set(n, resp.value);
      const history = [...this.history.entries()].sort((a, b) => a[0] - b[0]) as [number, number][];
      return { n, value: resp.value, history };
    } catch (err) {
      if (isAbortError(err)) {
        return null;
      }
      this.lastError = err instanceof Error ? err.message : String(err);
      return null;
    }
  }
}

export class EulerPanel {
  lastError: string | null = null;
  private seq = 0;
  private exactCache = new Map<string, [number, number][]>();

  constructor(private client: ApiClient, private referenceBase: number) {}

  async update(x: number, n: number): Promise<EulerView | null> {
    const mySeq = ++this.seq;
    try {
      const path = await this.client.eulerPath("euler", x, n);
      if (mySeq !== this.seq) {
        return null;
      }
      const exact = await this.exactCurve(x);
      if (mySeq !== this.seq) {
        return null;
      }
      this.lastError = null;
      const endpoint = path.points[path.points.length - 1][1];
      return {
        x,
        n,
        path: path.points,
        exactCurve: exact,
        endpointValue: endpoint,
        endpointLabel: `(1 + ${x}/${n})^${n}`,
      };
    } catch (err) {
      if (isAbortError(err)) {
        return null;
      }
      this.lastError = err instanceof Error ? err.message : String(err);
      return null;
    }
  }

  // The true solution curve, sampled server-side from the reference base.
  private async exactCurve(x: number): Promise<[number, number][]> {
    const xmax = Math.max(x, 0.01);
    const xmin = Math.min(x, 0);
    const key = `${xmin}:${xmax}`;
    const hit = this.exactCache.get(key);
    if (hit) {
      return hit;
    }
    const curve = await this.client.curve("euler", this.referenceBase, 1, xmin, xmax, 129);
    this.exactCache.set(key, curve.points);
    return curve.points;
  }
}
