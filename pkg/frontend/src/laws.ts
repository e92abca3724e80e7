/** Model laws needed to place invariant states in the (rho, flux) plane.
 *
 * Mirrors the simulator's built-in family: pressure p(rho) = kappa*rho^gamma,
 * velocity V(h) = slope*h. Only evaluation is needed here, never solving.
 */

import { z } from "zod";

export const LawsSchema = z.object({
  kappa: z.number().positive(),
  gamma: z.number().positive(),
  slope: z.number().positive(),
});

export type Laws = z.infer<typeof LawsSchema>;

export const DEFAULT_LAWS: Laws = { kappa: 1, gamma: 2, slope: 1 };

export function pressure(laws: Laws, rho: number): number {
  return laws.kappa * Math.pow(rho, laws.gamma);
}

export function pressureInverse(laws: Laws, xi: number): number {
  if (xi < 0) throw new RangeError(`pressure inverse of negative value ${xi}`);
  return Math.pow(xi / laws.kappa, 1 / laws.gamma);
}

export function velocity(laws: Laws, h: number): number {
  return laws.slope * h;
}

/** Density of the invariant state (h, w); h = w is the vacuum, rho = 0. */
export function densityOf(laws: Laws, h: number, w: number): number {
  return pressureInverse(laws, w - h);
}

/** Reduced flux f(W) = V(h) * rho(W); the plotted curves are c * f. */
export function fluxF(laws: Laws, h: number, w: number): number {
  return velocity(laws, h) * densityOf(laws, h, w);
}

/** Flux along one fundamental-diagram level: rho -> V(w - p(rho)) * rho. */
export function fluxAtLevel(laws: Laws, w: number, rho: number): number {
  return velocity(laws, w - pressure(laws, rho)) * rho;
}
