#!/usr/bin/env node
/** Figure generation entry point.
 *
 *   templeflux-plots profiles <csv...> --out fig.png
 *   templeflux-plots flux-plane <waves> --c-minus 1 --c-plus 0.5 --out fig.png
 *   templeflux-plots all --data <dir> --fig <dir>
 *
 * `all` renders the standard batch: profile figures for the six preset
 * scenario CSVs and flux-plane diagrams for the three step-coefficient
 * wave lists, using the presets' coefficient pairs.
 */

import { existsSync, mkdirSync } from "node:fs";
import { join } from "node:path";
import { parseArgs } from "node:util";

import { plotFluxPlane } from "./fluxPlane.js";
import { DEFAULT_LAWS } from "./laws.js";
import { plotProfiles } from "./profiles.js";

const PRESETS = ["scenario_A1", "scenario_A2", "scenario_B1", "scenario_B2", "scenario_C1", "scenario_C2"];

// coefficient pairs of the step-coefficient presets, needed to scale fans
const FAN_PRESETS: Record<string, { cMinus: number; cPlus: number }> = {
  scenario_A1: { cMinus: 1.0, cPlus: 0.5 },
  scenario_A2: { cMinus: 0.5, cPlus: 1.0 },
  scenario_C1: { cMinus: 0.5, cPlus: 1.0 },
};

function usage(): never {
  console.error(
    [
      "usage:",
      "  templeflux-plots profiles <csv...> --out fig.png",
      "  templeflux-plots flux-plane <waves> --c-minus C --c-plus C [--kappa K --gamma G --slope S] --out fig.png",
      "  templeflux-plots all --data DIR --fig DIR",
    ].join("\n"),
  );
  process.exit(1);
}

function numberOption(raw: string | undefined, fallback: number, name: string): number {
  if (raw === undefined) return fallback;
  const value = Number(raw);
  if (!Number.isFinite(value)) {
    console.error(`error: ${name} must be a number, got ${raw}`);
    process.exit(1);
  }
  return value;
}

function cmdProfiles(argv: string[]): void {
  const { values, positionals } = parseArgs({
    args: argv,
    options: { out: { type: "string" } },
    allowPositionals: true,
  });
  if (positionals.length === 0 || values.out === undefined) usage();
  const result = plotProfiles(positionals, values.out);
  console.log(`wrote ${values.out} (t = ${result.initialT} and t = ${result.finalT})`);
}

function cmdFluxPlane(argv: string[]): void {
  const { values, positionals } = parseArgs({
    args: argv,
    options: {
      out: { type: "string" },
      "c-minus": { type: "string" },
      "c-plus": { type: "string" },
      kappa: { type: "string" },
      gamma: { type: "string" },
      slope: { type: "string" },
    },
    allowPositionals: true,
  });
  if (positionals.length !== 1 || values.out === undefined) usage();
  const cMinus = numberOption(values["c-minus"], 1, "--c-minus");
  const cPlus = numberOption(values["c-plus"], cMinus, "--c-plus");
  const laws = {
    kappa: numberOption(values.kappa, DEFAULT_LAWS.kappa, "--kappa"),
    gamma: numberOption(values.gamma, DEFAULT_LAWS.gamma, "--gamma"),
    slope: numberOption(values.slope, DEFAULT_LAWS.slope, "--slope"),
  };
  const result = plotFluxPlane(positionals[0]!, values.out, { laws, cMinus, cPlus });
  console.log(`wrote ${values.out} (${result.curves} curves, ${result.markers} markers)`);
}

function cmdAll(argv: string[]): void {
  const { values } = parseArgs({
    args: argv,
    options: { data: { type: "string" }, fig: { type: "string" } },
  });
  if (values.data === undefined || values.fig === undefined) usage();
  mkdirSync(values.fig, { recursive: true });
  for (const preset of PRESETS) {
    const csv = join(values.data, `${preset}.csv`);
    if (!existsSync(csv)) {
      console.error(`error: missing ${csv} (generate it with: templeflux simulate ${preset})`);
      process.exit(1);
    }
    const out = join(values.fig, `${preset}_profiles.png`);
    plotProfiles([csv], out);
    console.log(`wrote ${out}`);
  }
  for (const [preset, pair] of Object.entries(FAN_PRESETS)) {
    const wavesPath = join(values.data, `${preset}.waves`);
    if (!existsSync(wavesPath)) {
      console.error(`error: missing ${wavesPath} (generate it with: templeflux riemann ${preset})`);
      process.exit(1);
    }
    const out = join(values.fig, `${preset}_flux_plane.png`);
    plotFluxPlane(wavesPath, out, pair);
    console.log(`wrote ${out}`);
  }
}

function main(): void {
  const [command, ...rest] = process.argv.slice(2);
  try {
    if (command === "profiles") cmdProfiles(rest);
    else if (command === "flux-plane") cmdFluxPlane(rest);
    else if (command === "all") cmdAll(rest);
    else usage();
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    process.exit(1);
  }
}

main();
