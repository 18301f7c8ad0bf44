// Minimal canvas plotting: axes, polylines, dots, a reference line.

import { Viewport, toScreen } from "./scales.js";

export function clear(ctx: CanvasRenderingContext2D, v: Viewport): void {
  ctx.clearRect(0, 0, v.width, v.height);
}

export function drawAxes(ctx: CanvasRenderingContext2D, v: Viewport): void {
  ctx.strokeStyle = "#99a";
  ctx.lineWidth = 1;
  ctx.beginPath();
  if (v.xmin <= 0 && v.xmax >= 0) {
    const [x0] = toScreen(v, 0, 0);
    ctx.moveTo(x0, 0);
    ctx.lineTo(x0, v.height);
  }
  if (v.ymin <= 0 && v.ymax >= 0) {
    const [, y0] = toScreen(v, 0, 0);
    ctx.moveTo(0, y0);
    ctx.lineTo(v.width, y0);
  }
  ctx.stroke();
}

export function drawPolyline(
  ctx: CanvasRenderingContext2D,
  v: Viewport,
  points: [number, number][],
  color: string,
  width = 2,
): void {
  if (points.length < 2) {
    return;
  }
  ctx.strokeStyle = color;
  ctx.lineWidth = width;
  ctx.beginPath();
  points.forEach(([x, y], i) => {
    const [sx, sy] = toScreen(v, x, y);
    if (i === 0) {
      ctx.moveTo(sx, sy);
    } else {
      ctx.lineTo(sx, sy);
    }
  });
  ctx.stroke();
}

export function drawDots(
  ctx: CanvasRenderingContext2D,
  v: Viewport,
  points: [number, number][],
  color: string,
  radius = 3,
): void {
  ctx.fillStyle = color;
  for (const [x, y] of points) {
    const [sx, sy] = toScreen(v, x, y);
    ctx.beginPath();
    ctx.arc(sx, sy, radius, 0, 2 * Math.PI);
    ctx.fill();
  }
}

export function drawHorizontal(
  ctx: CanvasRenderingContext2D,
  v: Viewport,
  y: number,
  color: string,
): void {
  const [, sy] = toScreen(v, 0, y);
  ctx.strokeStyle = color;
  ctx.lineWidth = 1;
  ctx.setLineDash([6, 4]);
  ctx.beginPath();
  ctx.moveTo(0, sy);
  ctx.lineTo(v.width, sy);
  ctx.stroke();
  ctx.setLineDash([]);
}
