/** Wire types mirroring the service's coordinate JSON schema. */

export type Pair = [number, number];

export interface CoordinateSetJson {
  schema_version: number;
  num_qubits: number;
  bloch: number[][];
  frames: number[][];
  lambda: number[];
  alpha: number[];
  concurrences: Record<string, Pair>;
  gauge_notes: string[];
}

export interface AnalyzeResponse {
  state: Pair[];
  coordinates: CoordinateSetJson;
  residuals: Record<string, number>;
}

export interface TrajectoryPointJson {
  step_index: number;
  state: Pair[];
  coordinates: CoordinateSetJson;
}

export interface ApplyResponse {
  trajectory: TrajectoryPointJson[];
}

export interface NamedState {
  name: string;
  num_qubits: number;
  description: string;
}

/** One concurrence marker: which entry it is and its service-reported value. */
export interface MarkerValue {
  key: string;
  value: Pair;
}

export function markersOf(coords: CoordinateSetJson): MarkerValue[] {
  const order = coords.num_qubits === 2 ? ["c"] : ["c12", "c13", "c23", "c123"];
  return order
    .filter((k) => k in coords.concurrences)
    .map((k) => ({ key: k, value: coords.concurrences[k] }));
}
