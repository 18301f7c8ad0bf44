// DOM wiring: sliders in, canvases and readouts out.

import { ApiClient } from "./api.js";
import { formatCount, formatEstimate, formatExact, formatSlope } from "./format.js";
import { CompoundPanel, EulerPanel, StretchPanel } from "./panels.js";
import {
  BASE_RANGE,
  STRETCH_RANGE,
  fitViewport,
  linearFromSlider,
  sliderFromLinear,
  stepsFromSlider,
} from "./scales.js";
import { clear, drawAxes, drawDots, drawHorizontal, drawPolyline } from "./plot.js";

// The 16-digit comparison anchor; displayed next to estimates, never used
// to compute them (that stays server-side).
const REFERENCE_E = 2.718281828459045;

const apiBase = (window as { ELAB_API_BASE?: string }).ELAB_API_BASE ?? "";
const client = new ApiClient(apiBase);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function canvasCtx(id: string): CanvasRenderingContext2D {
  const ctx = el<HTMLCanvasElement>(id).getContext("2d");
  if (!ctx) {
    throw new Error(`canvas #${id} has no 2d context`);
  }
  return ctx;
}

const banner = el<HTMLDivElement>("banner");
const controls = Array.from(document.querySelectorAll<HTMLInputElement>("input[type=range]"));

function setServiceDown(message: string | null): void {
  banner.textContent = message ?? "";
  banner.style.display = message ? "block" : "none";
  controls.forEach((c) => {
    c.disabled = message !== null;
  });
}

// ---- stretch panel -------------------------------------------------------

const stretch = new StretchPanel(client);
const stretchCtx = canvasCtx("stretch-canvas");
const baseSlider = el<HTMLInputElement>("base-slider");
const stretchSlider = el<HTMLInputElement>("stretch-slider");

async function refreshStretch(): Promise<void> {
  const base = linearFromSlider(Number(baseSlider.value) / 1000, ...BASE_RANGE);
  const s = linearFromSlider(Number(stretchSlider.value) / 1000, ...STRETCH_RANGE);
  el("base-readout").textContent = base.toFixed(2);
  el("stretch-readout").textContent = s.toFixed(2);
  const view = await stretch.update(base, s);
  if (!view) {
    if (stretch.lastError) {
      setServiceDown(`service unreachable: ${stretch.lastError}`);
    }
    return;
  }
  setServiceDown(null);
  el("curve-label").textContent = view.curveLabel;
  el("slope-readout").textContent = formatSlope(view.slope);
  el("estimate-readout").textContent = formatEstimate(view.estimate);
  const box = el<HTMLDivElement>("stretch-status");
  box.classList.toggle("found", view.foundE);
  box.textContent = view.foundE
    ? `slope within 0.005 of 1: this curve's base estimates e = ${formatEstimate(view.estimate)}`
    : "steer the stretch until the intercept slope reads 1";
  const v = fitViewport(view.curve, stretchCtx.canvas.width, stretchCtx.canvas.height);
  clear(stretchCtx, v);
  drawAxes(stretchCtx, v);
  drawPolyline(stretchCtx, v, view.curve, view.foundE ? "#0a7d36" : "#1c5dd6");
  const t = view.tangent;
  drawPolyline(
    stretchCtx,
    v,
    [
      [-1.5, t.intercept - 1.5 * t.slope],
      [1.5, t.intercept + 1.5 * t.slope],
    ],
    "#d6701c",
    1.5,
  );
}

// ---- compound panel ------------------------------------------------------

const compound = new CompoundPanel(client);
const compoundCtx = canvasCtx("compound-canvas");
const nSlider = el<HTMLInputElement>("n-slider");

async function refreshCompound(): Promise<void> {
  const n = stepsFromSlider(Number(nSlider.value) / 1000);
  el("n-readout").textContent = formatCount(n);
  const view = await compound.update(n);
  if (!view) {
    if (compound.lastError) {
      setServiceDown(`service unreachable: ${compound.lastError}`);
    }
    return;
  }
  setServiceDown(null);
  el("compound-readout").textContent = formatEstimate(view.value);
  const dots = view.history.map(([hn, hv]) => [Math.log10(hn), hv] as [number, number]);
  const v = fitViewport([...dots, [0, 2.0], [6, REFERENCE_E]], compoundCtx.canvas.width, compoundCtx.canvas.height);
  clear(compoundCtx, v);
  drawAxes(compoundCtx, v);
  drawHorizontal(compoundCtx, v, REFERENCE_E, "#0a7d36");
  drawDots(compoundCtx, v, dots, "#1c5dd6");
}

// ---- tangent-stepping panel ----------------------------------------------

const euler = new EulerPanel(client, REFERENCE_E);
const eulerCtx = canvasCtx("euler-canvas");
const eulerNSlider = el<HTMLInputElement>("euler-n-slider");
const eulerXSlider = el<HTMLInputElement>("euler-x-slider");

async function refreshEuler(): Promise<void> {
  const n = Math.max(1, Math.round(linearFromSlider(Number(eulerNSlider.value) / 1000, 1, 64)));
  const x = linearFromSlider(Number(eulerXSlider.value) / 1000, 0.25, 3);
  el("euler-n-readout").textContent = String(n);
  el("euler-x-readout").textContent = x.toFixed(2);
  const view = await euler.update(x, n);
  if (!view) {
    if (euler.lastError) {
      setServiceDown(`service unreachable: ${euler.lastError}`);
    }
    return;
  }
  setServiceDown(null);
  el("euler-readout").textContent = `${view.endpointLabel} = ${formatExact(view.endpointValue)}`;
  const v = fitViewport(view.exactCurve.concat(view.path), eulerCtx.canvas.width, eulerCtx.canvas.height);
  clear(eulerCtx, v);
  drawAxes(eulerCtx, v);
  drawPolyline(eulerCtx, v, view.exactCurve, "#0a7d36", 1.5);
  drawPolyline(eulerCtx, v, view.path, "#1c5dd6");
  drawDots(eulerCtx, v, view.path, "#1c5dd6", 2.5);
}

// ---- events --------------------------------------------------------------

baseSlider.addEventListener("input", () => void refreshStretch());
stretchSlider.addEventListener("input", () => void refreshStretch());
nSlider.addEventListener("input", () => void refreshCompound());
eulerNSlider.addEventListener("input", () => void refreshEuler());
eulerXSlider.addEventListener("input", () => void refreshEuler());

// initial state: a = 3 at stretch 1, n = 100, tangent path (x=1, n=4)
baseSlider.value = String(Math.round(sliderFromLinear(3, ...BASE_RANGE) * 1000));
stretchSlider.value = String(Math.round(sliderFromLinear(1, ...STRETCH_RANGE) * 1000));
void refreshStretch();
void refreshCompound();
void refreshEuler();
