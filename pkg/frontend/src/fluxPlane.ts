/** Wave-construction diagram in the (rho, c*f) plane.
 *
 * Draws the scaled fundamental diagram rho -> c * rho * V(w - p(rho))
 * for each coefficient side at every marker level present on that side,
 * then marks the wave-list states on it: far left and far right data,
 * the interface pair across the stationary non-classical jump, and the
 * state entering the contact. For a fan without a non-classical jump
 * (equal coefficients) a single family of curves is drawn and no
 * interface pair exists.
 */

import {
  BLACK,
  BLUE,
  CYAN,
  Color,
  GREEN,
  ORANGE,
  PURPLE,
  RED,
  Raster,
  Viewport,
  paddedRange,
} from "./raster.js";
import { DEFAULT_LAWS, Laws, densityOf, fluxAtLevel, fluxF, pressureInverse } from "./laws.js";
import { InvariantState, Wave, readWaveList } from "./waves.js";

export interface FluxPlaneOptions {
  laws: Laws;
  cMinus: number;
  cPlus: number;
  width: number;
  height: number;
  margin: number;
  samples: number;
}

export const DEFAULT_FLUX_PLANE: FluxPlaneOptions = {
  laws: DEFAULT_LAWS,
  cMinus: 1,
  cPlus: 1,
  width: 840,
  height: 620,
  margin: 30,
  samples: 512,
};

interface Marker {
  state: InvariantState;
  c: number;
  color: Color;
}

function dedupeLevels(levels: number[]): number[] {
  const out: number[] = [];
  for (const level of levels.slice().sort((a, b) => a - b)) {
    const prev = out[out.length - 1];
    if (prev === undefined || Math.abs(level - prev) > 1e-12) out.push(level);
  }
  return out;
}

/** Split wave endpoints into coefficient sides and pick marker roles. */
export function constructionMarkers(waves: Wave[], options: FluxPlaneOptions): Marker[] {
  const markers: Marker[] = [];
  const ncIndex = waves.findIndex((w) => w.kind === "NonClassical");
  const sideOf = (index: number, edge: "left" | "right"): number => {
    if (ncIndex >= 0) {
      const beforeNc = index < ncIndex || (index === ncIndex && edge === "left");
      return beforeNc ? options.cMinus : options.cPlus;
    }
    const wave = waves[index]!;
    const speed = edge === "left" ? wave.speed : wave.speedHi ?? wave.speed;
    return speed < 0 ? options.cMinus : options.cPlus;
  };

  const firstWave = waves[0]!;
  const lastWave = waves[waves.length - 1]!;
  markers.push({ state: firstWave.left, c: sideOf(0, "left"), color: GREEN });
  markers.push({ state: lastWave.right, c: sideOf(waves.length - 1, "right"), color: RED });
  if (ncIndex >= 0) {
    markers.push({ state: waves[ncIndex]!.left, c: options.cMinus, color: PURPLE });
    markers.push({ state: waves[ncIndex]!.right, c: options.cPlus, color: CYAN });
  }
  const contact = waves.findIndex((w) => w.kind === "Contact2");
  if (contact > 0) {
    markers.push({ state: waves[contact]!.left, c: sideOf(contact, "left"), color: BLACK });
  }
  return markers;
}

export function plotFluxPlane(
  waveListPath: string,
  outPath: string,
  options: Partial<FluxPlaneOptions> = {},
): { curves: number; markers: number } {
  const opts: FluxPlaneOptions = { ...DEFAULT_FLUX_PLANE, ...options };
  const waves = readWaveList(waveListPath);
  const markers = constructionMarkers(waves, opts);

  const singleCurve = Math.abs(opts.cMinus - opts.cPlus) < 1e-14;
  const sides: Array<{ c: number; color: Color; levels: number[] }> = [];
  if (singleCurve) {
    sides.push({
      c: opts.cMinus,
      color: BLUE,
      levels: dedupeLevels(markers.map((m) => m.state.w)),
    });
  } else {
    for (const [c, color] of [
      [opts.cMinus, BLUE],
      [opts.cPlus, ORANGE],
    ] as const) {
      const levels = dedupeLevels(markers.filter((m) => m.c === c).map((m) => m.state.w));
      if (levels.length > 0) sides.push({ c, color, levels });
    }
  }

  // frame covers every curve from rho = 0 to the zero-speed density
  let rhoMax = 0;
  let fluxMax = 0;
  const curves: Array<{ rho: number[]; flux: number[]; color: Color }> = [];
  for (const side of sides) {
    for (const level of side.levels) {
      const rhoEnd = pressureInverse(opts.laws, level);
      const rho: number[] = [];
      const flux: number[] = [];
      for (let i = 0; i <= opts.samples; i++) {
        const r = (rhoEnd * i) / opts.samples;
        rho.push(r);
        flux.push(side.c * fluxAtLevel(opts.laws, level, r));
      }
      rhoMax = Math.max(rhoMax, rhoEnd);
      fluxMax = Math.max(fluxMax, ...flux);
      curves.push({ rho, flux, color: side.color });
    }
  }

  const canvas = new Raster(opts.width, opts.height);
  const [yMin, yMax] = paddedRange([0, fluxMax]);
  const view = new Viewport(
    opts.margin,
    opts.margin,
    opts.width - 2 * opts.margin,
    opts.height - 2 * opts.margin,
    -0.02 * rhoMax,
    1.04 * rhoMax,
    yMin,
    yMax,
  );
  view.frame(canvas);
  for (const curve of curves) {
    view.polyline(canvas, curve.rho, curve.flux, curve.color, 2);
  }
  for (const marker of markers) {
    const rho = densityOf(opts.laws, marker.state.h, marker.state.w);
    const flux = marker.c * fluxF(opts.laws, marker.state.h, marker.state.w);
    canvas.marker(view.x(rho), view.y(flux), marker.color);
  }
  canvas.writePng(outPath);
  return { curves: curves.length, markers: markers.length };
}
