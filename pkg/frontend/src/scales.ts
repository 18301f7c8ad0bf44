// Slider and axis transforms: the only arithmetic the client is allowed.

export const BASE_RANGE: [number, number] = [1.1, 10];
export const STRETCH_RANGE: [number, number] = [0.2, 8];
export const N_RANGE: [number, number] = [1, 1_000_000];

/** Linear slider position in [0, 1] -> value in [lo, hi]. */
export function linearFromSlider(pos: number, lo: number, hi: number): number {
  const p = Math.min(1, Math.max(0, pos));
  return lo + p * (hi - lo);
}

export function sliderFromLinear(value: number, lo: number, hi: number): number {
  return Math.min(1, Math.max(0, (value - lo) / (hi - lo)));
}

/** Log-scaled step-count slider: position 0 -> 1, position 1 -> 10^6. */
export function stepsFromSlider(pos: number): number {
  const p = Math.min(1, Math.max(0, pos));
  return Math.max(1, Math.round(10 ** (6 * p)));
}

export function sliderFromSteps(n: number): number {
  const clamped = Math.min(N_RANGE[1], Math.max(N_RANGE[0], n));
  return Math.log10(clamped) / 6;
}

export interface Viewport {
  xmin: number;
  xmax: number;
  ymin: number;
  ymax: number;
  width: number;
  height: number;
}

/** World coordinates -> canvas pixels (y axis flipped). */
export function toScreen(v: Viewport, x: number, y: number): [number, number] {
  const sx = ((x - v.xmin) / (v.xmax - v.xmin)) * v.width;
  const sy = v.height - ((y - v.ymin) / (v.ymax - v.ymin)) * v.height;
  return [sx, sy];
}

/** Data bounds with a small margin, for fitting a curve into a viewport. */
export function fitViewport(points: [number, number][], width: number, height: number): Viewport {
  let xmin = Infinity, xmax = -Infinity, ymin = Infinity, ymax = -Infinity;
  for (const [x, y] of points) {
    xmin = Math.min(xmin, x);
    xmax = Math.max(xmax, x);
    ymin = Math.min(ymin, y);
    ymax = Math.max(ymax, y);
  }
  const padX = 0.05 * (xmax - xmin || 1);
  const padY = 0.08 * (ymax - ymin || 1);
  return {
    xmin: xmin - padX,
    xmax: xmax + padX,
    ymin: Math.min(ymin - padY, 0),
    ymax: ymax + padY,
    width,
    height,
  };
}
