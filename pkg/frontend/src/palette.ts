/** The gate palette: definitions and the gate-list text they produce. */

export interface GateDef {
  name: string;
  arity: 1 | 2;
  hasParam: boolean;
}

export const GATE_DEFS: GateDef[] = [
  { name: "X", arity: 1, hasParam: false },
  { name: "Y", arity: 1, hasParam: false },
  { name: "Z", arity: 1, hasParam: false },
  { name: "H", arity: 1, hasParam: false },
  { name: "S", arity: 1, hasParam: false },
  { name: "T", arity: 1, hasParam: false },
  { name: "RX", arity: 1, hasParam: true },
  { name: "RY", arity: 1, hasParam: true },
  { name: "RZ", arity: 1, hasParam: true },
  { name: "PHASE", arity: 1, hasParam: true },
  { name: "CNOT", arity: 2, hasParam: false },
  { name: "CZ", arity: 2, hasParam: false },
  { name: "CPHASE", arity: 2, hasParam: true },
];

export function gateText(def: GateDef, targets: number[], param?: number): string {
  if (targets.length !== def.arity) {
    throw new Error(`${def.name} needs ${def.arity} target(s)`);
  }
  const params = def.hasParam ? `(${(param ?? 0).toPrecision(12)})` : "";
  return `${def.name}${params}@${targets.join(":")}`;
}
