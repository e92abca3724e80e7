/** Minimal deterministic raster canvas writing PNG files.
 *
 * Everything is integer pixel work on an RGBA buffer; no system fonts,
 * no anti-aliasing, so output bytes depend only on the drawing calls.
 */

import { writeFileSync } from "node:fs";
import { PNG } from "pngjs";

export type Color = readonly [number, number, number];

export const WHITE: Color = [255, 255, 255];
export const BLACK: Color = [0, 0, 0];
export const GRAY: Color = [150, 150, 150];
export const LIGHT_GRAY: Color = [220, 220, 220];
export const BLUE: Color = [31, 119, 180];
export const ORANGE: Color = [255, 127, 14];
export const GREEN: Color = [44, 160, 44];
export const RED: Color = [214, 39, 40];
export const PURPLE: Color = [148, 103, 189];
export const CYAN: Color = [23, 190, 207];

export class Raster {
  readonly width: number;
  readonly height: number;
  private readonly png: PNG;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.png = new PNG({ width, height });
    this.fill(WHITE);
  }

  fill(color: Color): void {
    for (let i = 0; i < this.width * this.height; i++) {
      this.png.data[4 * i] = color[0];
      this.png.data[4 * i + 1] = color[1];
      this.png.data[4 * i + 2] = color[2];
      this.png.data[4 * i + 3] = 255;
    }
  }

  set(x: number, y: number, color: Color): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = 4 * (y * this.width + x);
    this.png.data[i] = color[0];
    this.png.data[i + 1] = color[1];
    this.png.data[i + 2] = color[2];
    this.png.data[i + 3] = 255;
  }

  /** Bresenham segment, endpoints rounded; out-of-frame pixels clipped. */
  line(x0: number, y0: number, x1: number, y1: number, color: Color, thick = 1): void {
    let ax = Math.round(x0);
    let ay = Math.round(y0);
    const bx = Math.round(x1);
    const by = Math.round(y1);
    const dx = Math.abs(bx - ax);
    const dy = -Math.abs(by - ay);
    const sx = ax < bx ? 1 : -1;
    const sy = ay < by ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      this.dot(ax, ay, color, thick);
      if (ax === bx && ay === by) break;
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        ax += sx;
      }
      if (e2 <= dx) {
        err += dx;
        ay += sy;
      }
    }
  }

  dot(x: number, y: number, color: Color, size = 1): void {
    const r = Math.max(0, Math.floor((size - 1) / 2));
    for (let j = -r; j <= r + ((size - 1) % 2); j++) {
      for (let i = -r; i <= r + ((size - 1) % 2); i++) {
        this.set(x + i, y + j, color);
      }
    }
  }

  marker(x: number, y: number, color: Color, half = 3): void {
    const cx = Math.round(x);
    const cy = Math.round(y);
    for (let j = -half; j <= half; j++) {
      for (let i = -half; i <= half; i++) {
        this.set(cx + i, cy + j, color);
      }
    }
    // thin white border keeps overlapping markers distinguishable
    for (let i = -half - 1; i <= half + 1; i++) {
      this.set(cx + i, cy - half - 1, WHITE);
      this.set(cx + i, cy + half + 1, WHITE);
      this.set(cx - half - 1, cy + i, WHITE);
      this.set(cx + half + 1, cy + i, WHITE);
    }
  }

  rect(x0: number, y0: number, x1: number, y1: number, color: Color): void {
    this.line(x0, y0, x1, y0, color);
    this.line(x1, y0, x1, y1, color);
    this.line(x1, y1, x0, y1, color);
    this.line(x0, y1, x0, y0, color);
  }

  writePng(path: string): void {
    writeFileSync(path, PNG.sync.write(this.png));
  }
}

/** Affine data-to-pixel map for one panel. */
export class Viewport {
  constructor(
    readonly px: number,
    readonly py: number,
    readonly pw: number,
    readonly ph: number,
    readonly xMin: number,
    readonly xMax: number,
    readonly yMin: number,
    readonly yMax: number,
  ) {}

  x(v: number): number {
    return this.px + ((v - this.xMin) / (this.xMax - this.xMin)) * this.pw;
  }

  y(v: number): number {
    return this.py + this.ph - ((v - this.yMin) / (this.yMax - this.yMin)) * this.ph;
  }

  frame(canvas: Raster): void {
    canvas.rect(this.px, this.py, this.px + this.pw, this.py + this.ph, BLACK);
    if (this.yMin < 0 && this.yMax > 0) {
      canvas.line(this.px, this.y(0), this.px + this.pw, this.y(0), LIGHT_GRAY);
    }
    if (this.xMin < 0 && this.xMax > 0) {
      canvas.line(this.x(0), this.py, this.x(0), this.py + this.ph, LIGHT_GRAY);
    }
  }

  /** Polyline of (xs, ys); non-finite ys break the line into segments. */
  polyline(canvas: Raster, xs: number[], ys: number[], color: Color, thick = 1): void {
    let prev: [number, number] | null = null;
    for (let i = 0; i < xs.length; i++) {
      const yv = ys[i]!;
      if (!Number.isFinite(yv)) {
        prev = null;
        continue;
      }
      const point: [number, number] = [this.x(xs[i]!), this.y(yv)];
      if (prev !== null) {
        canvas.line(prev[0], prev[1], point[0], point[1], color, thick);
      }
      prev = point;
    }
  }
}

/** [min, max] over finite entries, padded; throws if nothing is finite. */
export function paddedRange(values: number[], padFraction = 0.06): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (!Number.isFinite(v)) continue;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!(lo <= hi)) throw new RangeError("no finite values to scale");
  const span = hi - lo;
  const pad = span > 0 ? span * padFraction : Math.max(1e-3, Math.abs(hi) * 0.1);
  return [lo - pad, hi + pad];
}
