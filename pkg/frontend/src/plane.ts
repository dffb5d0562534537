/** Complex concurrence plane rendering as SVG markup strings.

Every plotted number is a service response field; the only local work is
scaling to pixels, coincidence halos, and the fading trail.
*/
import type { CoordinateSetJson, MarkerValue, Pair } from "./types.js";
import { markersOf } from "./types.js";

export const PLANE_SIZE = 250;
const R = 96;

const COLORS: Record<string, string> = {
  c: "#c0392b",
  c12: "#2980b9",
  c13: "#27ae60",
  c23: "#8e44ad",
  c123: "#c0392b",
};

const SHAPES: Record<string, string> = {
  c: "diamond",
  c12: "circle",
  c13: "square",
  c23: "triangle",
  c123: "diamond",
};

function f(v: number): string {
  return (Math.abs(v) < 5e-5 ? 0 : v).toFixed(4);
}

function markerShape(key: string, cx: number, cy: number, size: number, opacity = 1.0): string {
  const color = COLORS[key] ?? "#333";
  const op = opacity >= 1 ? "" : ` opacity="${opacity.toFixed(3)}"`;
  switch (SHAPES[key]) {
    case "circle":
      return `<circle cx="${f(cx)}" cy="${f(cy)}" r="${f(size)}" fill="${color}"${op}/>`;
    case "square":
      return `<rect x="${f(cx - size)}" y="${f(cy - size)}" width="${f(2 * size)}" height="${f(2 * size)}" fill="${color}"${op}/>`;
    case "triangle":
      return `<polygon points="${f(cx)},${f(cy - 1.2 * size)} ${f(cx - 1.1 * size)},${f(cy + 0.9 * size)} ${f(cx + 1.1 * size)},${f(cy + 0.9 * size)}" fill="${color}"${op}/>`;
    default:
      return `<polygon points="${f(cx)},${f(cy - 1.3 * size)} ${f(cx + 1.3 * size)},${f(cy)} ${f(cx)},${f(cy + 1.3 * size)} ${f(cx - 1.3 * size)},${f(cy)}" fill="${color}"${op}/>`;
  }
}

function coincidenceOffsets(markers: MarkerValue[]): Map<number, [number, number]> {
  const offsets = new Map<number, [number, number]>();
  const groups: number[][] = [];
  markers.forEach((m, idx) => {
    for (const g of groups) {
      const v0 = markers[g[0]].value;
      if (Math.hypot(m.value[0] - v0[0], m.value[1] - v0[1]) < 1e-6) {
        g.push(idx);
        return;
      }
    }
    groups.push([idx]);
  });
  const spread: [number, number][] = [
    [0, -7],
    [6.1, 3.5],
    [-6.1, 3.5],
    [0, 7],
  ];
  for (const g of groups) {
    g.forEach((idx, k) => {
      offsets.set(idx, g.length === 1 ? [0, 0] : spread[k % spread.length]);
    });
  }
  return offsets;
}

export interface TrailData {
  /** per marker key, oldest first, the past complex values */
  [key: string]: Pair[];
}

/** Unit circle plus one distinctly-shaped marker per concurrence. */
export function renderConcurrencePlane(
  coords: CoordinateSetJson,
  trail: TrailData | null = null,
  zoom = 1.0,
  extra: CoordinateSetJson | null = null,
): string {
  const markers = markersOf(coords);
  const offsets = coincidenceOffsets(markers);
  const r = R * zoom;
  const c = PLANE_SIZE / 2;
  const parts: string[] = [];
  parts.push(
    `<svg class="plane" xmlns="http://www.w3.org/2000/svg" width="${PLANE_SIZE}" height="${PLANE_SIZE + 30}" ` +
      `viewBox="0 0 ${PLANE_SIZE} ${PLANE_SIZE + 30}">`,
    `<g transform="translate(${c}, ${c + 14})">`,
    `<circle cx="0" cy="0" r="${f(r)}" fill="#f7f9fc" stroke="#444" stroke-width="1"/>`,
    `<line x1="${f(-1.1 * r)}" y1="0" x2="${f(1.1 * r)}" y2="0" stroke="#8891a0" stroke-width="0.8"/>`,
    `<line x1="0" y1="${f(1.1 * r)}" x2="0" y2="${f(-1.1 * r)}" stroke="#8891a0" stroke-width="0.8"/>`,
    `<text x="${f(1.1 * r + 10)}" y="3" font-size="10" fill="#667">Re</text>`,
    `<text x="-6" y="${f(-1.1 * r - 4)}" font-size="10" fill="#667">Im</text>`,
  );

  if (trail) {
    for (const m of markers) {
      const past = trail[m.key] ?? [];
      past.forEach((v, i) => {
        const opacity = 0.08 + 0.5 * ((i + 1) / Math.max(past.length, 1));
        parts.push(markerShape(m.key, v[0] * r, -v[1] * r, 2.2, opacity));
      });
    }
  }

  // coincidence halo: equal values stay distinguishable without touching
  // the underlying numbers
  const groupsSeen = new Set<string>();
  markers.forEach((m, idx) => {
    const off = offsets.get(idx) ?? [0, 0];
    if (off[0] !== 0 || off[1] !== 0) {
      const key = `${f(m.value[0])},${f(m.value[1])}`;
      if (!groupsSeen.has(key)) {
        groupsSeen.add(key);
        parts.push(
          `<circle cx="${f(m.value[0] * r)}" cy="${f(-m.value[1] * r)}" r="10.5" ` +
            `fill="none" stroke="#aab" stroke-width="0.8" stroke-dasharray="2 2"/>`,
        );
      }
    }
  });

  if (extra) {
    for (const m of markersOf(extra)) {
      parts.push(
        `<g class="compare" data-key="${m.key}">` +
          markerShape(m.key, m.value[0] * r, -m.value[1] * r, 4.0, 0.35) +
          `</g>`,
      );
    }
  }

  markers.forEach((m, idx) => {
    const off = offsets.get(idx) ?? [0, 0];
    parts.push(
      `<g class="marker" data-key="${m.key}" data-value="${m.value[0]},${m.value[1]}">` +
        markerShape(m.key, m.value[0] * r + off[0], -m.value[1] * r + off[1], 4.2) +
        `</g>`,
    );
  });

  let lx = -(markers.length - 1) * 32;
  for (const m of markers) {
    parts.push(markerShape(m.key, lx, r + 18, 3.2));
    parts.push(`<text x="${f(lx + 7)}" y="${f(r + 21)}" font-size="9" fill="#334">${m.key}</text>`);
    lx += 64;
  }
  parts.push("</g></svg>");
  return parts.join("\n");
}
