/** Four-panel profile figure: rho, q, h, w against x, overlaying the
 * first and last snapshot found in the input CSVs.
 */

import {
  BLUE,
  GRAY,
  GREEN,
  ORANGE,
  PURPLE,
  Raster,
  Viewport,
  paddedRange,
} from "./raster.js";
import { readSnapshots, Snapshot, SnapshotParseError } from "./snapshots.js";

export interface ProfileLayout {
  width: number;
  height: number;
  margin: number;
  gap: number;
}

export const DEFAULT_LAYOUT: ProfileLayout = {
  width: 1200,
  height: 820,
  margin: 30,
  gap: 24,
};

const PANELS = [
  { field: "rho", color: BLUE },
  { field: "q", color: ORANGE },
  { field: "h", color: GREEN },
  { field: "w", color: PURPLE },
] as const;

type Field = (typeof PANELS)[number]["field"];

function series(snapshot: Snapshot, field: Field): number[] {
  return snapshot[field];
}

/** Render csvPaths (one concatenated file or per-snapshot files) to a
 * 2x2 PNG at outPath. Returns the snapshot times that were drawn. */
export function plotProfiles(
  csvPaths: string[],
  outPath: string,
  layout: ProfileLayout = DEFAULT_LAYOUT,
): { initialT: number; finalT: number } {
  const table = readSnapshots(csvPaths);
  const first = table.snapshots[0];
  const last = table.snapshots[table.snapshots.length - 1];
  if (first === undefined || last === undefined) {
    throw new SnapshotParseError("no snapshots to plot");
  }

  const canvas = new Raster(layout.width, layout.height);
  const panelW = (layout.width - 2 * layout.margin - layout.gap) / 2;
  const panelH = (layout.height - 2 * layout.margin - layout.gap) / 2;
  const [xMin, xMax] = paddedRange(first.x, 0.0);

  PANELS.forEach((panel, index) => {
    const col = index % 2;
    const row = Math.floor(index / 2);
    const [yMin, yMax] = paddedRange([
      ...series(first, panel.field),
      ...series(last, panel.field),
    ]);
    const view = new Viewport(
      layout.margin + col * (panelW + layout.gap),
      layout.margin + row * (panelH + layout.gap),
      panelW,
      panelH,
      xMin,
      xMax,
      yMin,
      yMax,
    );
    view.frame(canvas);
    view.polyline(canvas, first.x, series(first, panel.field), GRAY, 1);
    view.polyline(canvas, last.x, series(last, panel.field), panel.color, 2);
  });

  canvas.writePng(outPath);
  return { initialT: first.t, finalT: last.t };
}
