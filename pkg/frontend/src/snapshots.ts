/** Snapshot CSV parsing.
 *
 * The simulator emits `t,x,rho,q,h,w,c` rows, one block of cells per
 * snapshot time, either concatenated in one file or split across
 * per-snapshot files. h and w print as "nan" on vacuum cells; every
 * other field is finite. Within one snapshot x must strictly increase.
 */

import { readFileSync } from "node:fs";
import Papa from "papaparse";
import { z } from "zod";

export class SnapshotParseError extends Error {}

const EXPECTED_HEADER = ["t", "x", "rho", "q", "h", "w", "c"] as const;

const finite = z.preprocess(toNumber, z.number().finite());
const maybeNan = z.preprocess(toNumber, z.union([z.number(), z.nan()]));

const RowSchema = z.object({
  t: finite,
  x: finite,
  rho: finite,
  q: finite,
  h: maybeNan,
  w: maybeNan,
  c: finite,
});

export type SnapshotRow = z.infer<typeof RowSchema>;

export interface Snapshot {
  t: number;
  x: number[];
  rho: number[];
  q: number[];
  h: number[];
  w: number[];
  c: number[];
}

export interface SnapshotTable {
  snapshots: Snapshot[];
}

function toNumber(value: unknown): unknown {
  if (typeof value !== "string") return value;
  const s = value.trim();
  if (s === "") return undefined;
  return Number(s);
}

export function parseSnapshotText(text: string, origin = "<string>"): SnapshotTable {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0]!;
    throw new SnapshotParseError(`${origin}: ${first.message} (row ${first.row})`);
  }
  const fields = parsed.meta.fields ?? [];
  if (fields.join(",") !== EXPECTED_HEADER.join(",")) {
    throw new SnapshotParseError(
      `${origin}: expected header ${EXPECTED_HEADER.join(",")}, got ${fields.join(",")}`,
    );
  }
  if (parsed.data.length === 0) {
    throw new SnapshotParseError(`${origin}: no data rows`);
  }

  const snapshots: Snapshot[] = [];
  let current: Snapshot | null = null;
  parsed.data.forEach((raw, i) => {
    const check = RowSchema.safeParse(raw);
    if (!check.success) {
      throw new SnapshotParseError(`${origin}: bad row ${i + 2}: ${check.error.issues[0]?.message}`);
    }
    const row = check.data;
    // a new snapshot starts whenever t changes or x stops increasing
    if (current === null || row.t !== current.t) {
      current = { t: row.t, x: [], rho: [], q: [], h: [], w: [], c: [] };
      snapshots.push(current);
    }
    const lastX = current.x[current.x.length - 1];
    if (lastX !== undefined && !(row.x > lastX)) {
      throw new SnapshotParseError(
        `${origin}: x must strictly increase within a snapshot (row ${i + 2}: ${row.x} after ${lastX})`,
      );
    }
    current.x.push(row.x);
    current.rho.push(row.rho);
    current.q.push(row.q);
    current.h.push(row.h);
    current.w.push(row.w);
    current.c.push(row.c);
  });
  return { snapshots };
}

/** Parse one or more CSV files and pool their snapshots in time order. */
export function readSnapshots(paths: string[]): SnapshotTable {
  if (paths.length === 0) throw new SnapshotParseError("no input files");
  const snapshots = paths.flatMap(
    (p) => parseSnapshotText(readFileSync(p, "utf8"), p).snapshots,
  );
  snapshots.sort((a, b) => a.t - b.t);
  return { snapshots };
}
