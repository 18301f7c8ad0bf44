// Readout formatting. Display-only: values are never parsed back.

/** Slope readouts: 6 significant digits, enough to watch the 0.005 window. */
export function formatSlope(slope: number): string {
  return slope.toPrecision(6);
}

/** Estimates of the natural base: show more digits as they stabilize. */
export function formatEstimate(value: number): string {
  return value.toPrecision(10);
}

/** Endpoint annotations keep every digit the service sent (up to 17 are meaningful). */
export function formatExact(value: number): string {
  const s = String(value);
  return s.includes("e") ? value.toPrecision(12) : s;
}

export function formatCount(n: number): string {
  return n >= 10000 ? n.toExponential(2).replace("+", "") : String(n);
}
