/** Bloch sphere rendering as SVG markup strings.

Pure functions of (coordinates payload, view state): no DOM access, no
math on the physics - positions are the service-reported Bloch vectors,
orthographically projected under the per-qubit camera.
*/
import type { CoordinateSetJson } from "./types.js";
import type { Camera, ViewState } from "./view.js";

export const SPHERE_SIZE = 210;
const R = 82;

function project(camera: Camera, x: number, y: number, z: number): [number, number] {
  // rotate about z by azimuth, then tilt about the screen x axis;
  // the screen keeps (x right, z up) and drops the depth component
  const ca = Math.cos(camera.azimuth);
  const sa = Math.sin(camera.azimuth);
  const x1 = ca * x + sa * y;
  const y1 = -sa * x + ca * y;
  const ce = Math.cos(camera.elevation);
  const se = Math.sin(camera.elevation);
  const z2 = se * y1 + ce * z;
  return [x1, z2];
}

function f(v: number): string {
  return (Math.abs(v) < 5e-5 ? 0 : v).toFixed(4);
}

function axis(camera: Camera, label: string, x: number, y: number, z: number): string {
  const [px, pz] = project(camera, x, y, z);
  const sx = px * R * 1.1;
  const sy = -pz * R * 1.1;
  return (
    `<line x1="0" y1="0" x2="${f(sx)}" y2="${f(sy)}" stroke="#8891a0" stroke-width="0.8"/>` +
    `<text x="${f(sx * 1.13)}" y="${f(sy * 1.13 + 3)}" font-size="10" fill="#667" text-anchor="middle">${label}</text>`
  );
}

function spherePanel(coords: CoordinateSetJson, q: number, camera: Camera): string {
  const [bx, by, bz] = coords.bloch[q];
  const norm = Math.sqrt(bx * bx + by * by + bz * bz);
  const [px, pz] = project(camera, bx, by, bz);
  const sx = px * R;
  const sy = -pz * R;
  const markerRadius = 2.5 + 4.0 * norm; // radius encodes Bloch-vector length
  const c = SPHERE_SIZE / 2;
  return (
    `<svg class="sphere" data-qubit="${q + 1}" data-bloch="${bx},${by},${bz}" ` +
    `xmlns="http://www.w3.org/2000/svg" width="${SPHERE_SIZE}" height="${SPHERE_SIZE + 20}" ` +
    `viewBox="0 0 ${SPHERE_SIZE} ${SPHERE_SIZE + 20}">` +
    `<g transform="translate(${c}, ${c + 14})">` +
    `<circle cx="0" cy="0" r="${R}" fill="#f7f9fc" stroke="#444" stroke-width="1"/>` +
    `<ellipse cx="0" cy="0" rx="${R}" ry="${f(R * Math.abs(Math.sin(camera.elevation)) + 2)}" ` +
    `fill="none" stroke="#b9c2cf" stroke-width="0.7" stroke-dasharray="4 3"/>` +
    axis(camera, "x", 1.08, 0, 0) +
    axis(camera, "y", 0, 1.08, 0) +
    axis(camera, "z", 0, 0, 1.08) +
    `<line x1="0" y1="0" x2="${f(sx)}" y2="${f(sy)}" stroke="#c0392b" stroke-width="1.4" stroke-dasharray="3 2"/>` +
    `<circle class="bloch-marker" cx="${f(sx)}" cy="${f(sy)}" r="${f(markerRadius)}" fill="#c0392b"/>` +
    `<text x="0" y="${-R - 4}" font-size="12" fill="#223" text-anchor="middle">qubit ${q + 1}</text>` +
    `<text x="0" y="${R + 16}" font-size="9" fill="#667" text-anchor="middle">|r| = ${norm.toFixed(4)}</text>` +
    `</g></svg>`
  );
}

/** One sphere per qubit; drag-to-rotate is wired by the app shell. */
export function renderSpheres(coords: CoordinateSetJson, view: ViewState): string {
  const parts: string[] = [];
  for (let q = 0; q < coords.num_qubits; q += 1) {
    const camera = view.cameras[q] ?? { azimuth: -0.5, elevation: 0.35 };
    parts.push(spherePanel(coords, q, camera));
  }
  return parts.join("\n");
}
