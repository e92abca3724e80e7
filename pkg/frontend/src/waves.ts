/** Wave-list parsing.
 *
 * One wave per line: `kind left_h left_w right_h right_w speed [speed_hi]`,
 * space separated; rarefactions carry both edge speeds. The list is
 * ordered by speed and chains states left to right.
 */

import { readFileSync } from "node:fs";
import { z } from "zod";

export class WaveParseError extends Error {}

export const WaveKind = z.enum(["Shock1", "Rarefaction1", "Contact2", "NonClassical"]);
export type WaveKind = z.infer<typeof WaveKind>;

export interface InvariantState {
  h: number;
  w: number;
}

export interface Wave {
  kind: WaveKind;
  left: InvariantState;
  right: InvariantState;
  speed: number;
  speedHi?: number;
}

const num = z.coerce.number().refine((v) => Number.isFinite(v), "not a finite number");

export function parseWaveList(text: string, origin = "<string>"): Wave[] {
  const waves: Wave[] = [];
  const lines = text.split("\n");
  lines.forEach((line, i) => {
    const trimmed = line.trim();
    if (trimmed === "") return;
    const parts = trimmed.split(/\s+/);
    const kindCheck = WaveKind.safeParse(parts[0]);
    if (!kindCheck.success) {
      throw new WaveParseError(`${origin}: unknown wave kind ${parts[0]} (line ${i + 1})`);
    }
    const kind = kindCheck.data;
    const rest = parts.slice(1);
    const wantHi = kind === "Rarefaction1";
    if (rest.length !== (wantHi ? 6 : 5)) {
      throw new WaveParseError(
        `${origin}: ${kind} needs ${wantHi ? 6 : 5} numbers, got ${rest.length} (line ${i + 1})`,
      );
    }
    const values = rest.map((p, j) => {
      const check = num.safeParse(p);
      if (!check.success) {
        throw new WaveParseError(`${origin}: field ${j + 2} is not a number (line ${i + 1})`);
      }
      return check.data;
    });
    const wave: Wave = {
      kind,
      left: { h: values[0]!, w: values[1]! },
      right: { h: values[2]!, w: values[3]! },
      speed: values[4]!,
    };
    if (wantHi) wave.speedHi = values[5]!;
    waves.push(wave);
  });
  if (waves.length === 0) {
    throw new WaveParseError(`${origin}: empty wave list`);
  }
  return waves;
}

export function readWaveList(path: string): Wave[] {
  return parseWaveList(readFileSync(path, "utf8"), path);
}
