export { Laws, LawsSchema, DEFAULT_LAWS, densityOf, fluxAtLevel, fluxF } from "./laws.js";
export {
  Snapshot,
  SnapshotParseError,
  SnapshotTable,
  parseSnapshotText,
  readSnapshots,
} from "./snapshots.js";
export { InvariantState, Wave, WaveKind, WaveParseError, parseWaveList, readWaveList } from "./waves.js";
export { DEFAULT_LAYOUT, ProfileLayout, plotProfiles } from "./profiles.js";
export {
  DEFAULT_FLUX_PLANE,
  FluxPlaneOptions,
  constructionMarkers,
  plotFluxPlane,
} from "./fluxPlane.js";
