/** Browser shell: wires the session model and renderers to the DOM.

All numerics arrive from the service; this file only routes events and
injects markup.  Holding a second session enables the side-by-side
comparison mode (two states, one shared concurrence plane).
*/
import { ApiClient, ServiceError } from "./api.js";
import { SessionModel } from "./model.js";
import { GATE_DEFS, gateText } from "./palette.js";
import { renderConcurrencePlane, TrailData } from "./plane.js";
import { renderSpheres } from "./spheres.js";
import type { TrajectoryPointJson } from "./types.js";
import { markersOf } from "./types.js";
import { defaultView, rotateCamera, setTrail, ViewState } from "./view.js";

const api = new ApiClient("");
const session = new SessionModel(api);
const compare = new SessionModel(api);
let compareEnabled = false;
let view: ViewState = defaultView(3);
let trail: TrailData = {};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function showError(message: string): void {
  const banner = el<HTMLDivElement>("error-banner");
  banner.textContent = message;
  banner.style.display = message ? "block" : "none";
}

function pushTrail(points: TrajectoryPointJson[]): void {
  for (const p of points) {
    for (const m of markersOf(p.coordinates)) {
      (trail[m.key] ??= []).push(m.value);
      const keep = view.trailLength;
      if (trail[m.key].length > keep) trail[m.key] = trail[m.key].slice(-keep);
    }
  }
}

function redraw(): void {
  const coords = session.currentCoords;
  if (!coords) return;
  el("spheres").innerHTML = renderSpheres(coords, view);
  el("plane").innerHTML = renderConcurrencePlane(
    coords,
    trail,
    view.planeZoom,
    compareEnabled ? compare.currentCoords : null,
  );
  el("history").textContent = session.gateTexts().join(", ") || "(no gates yet)";
  const notes = coords.gauge_notes.join(", ");
  el("gauge-notes").textContent = notes ? `gauge: ${notes}` : "";
  wireSphereDrag();
}

function wireSphereDrag(): void {
  document.querySelectorAll<SVGElement>("#spheres .sphere").forEach((svg) => {
    const qubit = Number(svg.dataset.qubit) - 1;
    let dragging = false;
    let last: [number, number] = [0, 0];
    svg.onpointerdown = (ev) => {
      dragging = true;
      last = [ev.clientX, ev.clientY];
      svg.setPointerCapture(ev.pointerId);
    };
    svg.onpointermove = (ev) => {
      if (!dragging) return;
      view = rotateCamera(view, qubit, (ev.clientX - last[0]) * 0.01, (ev.clientY - last[1]) * 0.01);
      last = [ev.clientX, ev.clientY];
      redraw();
    };
    svg.onpointerup = () => {
      dragging = false;
    };
  });
}

async function animate(points: TrajectoryPointJson[]): Promise<void> {
  const delay = 240 / Math.max(session.animationSpeed, 0.1) / Math.max(points.length, 1);
  for (const p of points) {
    session.currentCoords = p.coordinates;
    session.currentState = p.state;
    pushTrail([p]);
    redraw();
    await new Promise((resolve) => setTimeout(resolve, delay));
  }
}

async function applyGateText(text: string): Promise<void> {
  showError("");
  try {
    const points = await session.applyGate(text);
    await animate(points);
  } catch (err) {
    if (err instanceof ServiceError) showError(`${err.status}: ${err.message}`);
    else showError(String(err));
  }
  redraw();
}

function buildPalette(): void {
  const host = el<HTMLDivElement>("palette");
  for (const def of GATE_DEFS) {
    const button = document.createElement("button");
    button.textContent = def.name;
    button.onclick = () => {
      const t1 = Number(el<HTMLSelectElement>("target1").value);
      const t2 = Number(el<HTMLSelectElement>("target2").value);
      const angle = Number(el<HTMLInputElement>("angle").value);
      const targets = def.arity === 1 ? [t1] : [t1, t2];
      try {
        void applyGateText(gateText(def, targets, angle));
      } catch (err) {
        showError(String(err));
      }
    };
    host.appendChild(button);
  }
}

async function loadSpec(spec: string, intoCompare = false): Promise<void> {
  showError("");
  try {
    const model = intoCompare ? compare : session;
    await model.loadSpec(spec);
    if (!intoCompare) {
      trail = {};
      view = defaultView(model.currentCoords?.num_qubits ?? 3);
    }
    redraw();
  } catch (err) {
    if (err instanceof ServiceError) showError(`${err.status}: ${err.message}`);
    else showError(String(err));
  }
}

async function init(): Promise<void> {
  const names = await api.named();
  const picker = el<HTMLSelectElement>("named-picker");
  for (const n of names) {
    const opt = document.createElement("option");
    opt.value = n.name;
    opt.textContent = `${n.name} (${n.num_qubits}q)`;
    picker.appendChild(opt);
  }
  picker.onchange = () => void loadSpec(picker.value);
  el<HTMLButtonElement>("load-spec").onclick = () =>
    void loadSpec(el<HTMLInputElement>("spec-input").value);
  el<HTMLButtonElement>("undo").onclick = () => {
    if (session.undo()) redraw();
  };
  el<HTMLInputElement>("speed").oninput = (ev) => {
    session.animationSpeed = Number((ev.target as HTMLInputElement).value);
  };
  el<HTMLInputElement>("trail-length").oninput = (ev) => {
    view = setTrail(view, Number((ev.target as HTMLInputElement).value));
    redraw();
  };
  el<HTMLInputElement>("rz-slider").oninput = (ev) => {
    const theta = Number((ev.target as HTMLInputElement).value);
    const target = Number(el<HTMLSelectElement>("target1").value);
    void applyGateText(`RZ(${theta.toPrecision(8)})@${target}`);
  };
  el<HTMLInputElement>("compare-toggle").onchange = (ev) => {
    compareEnabled = (ev.target as HTMLInputElement).checked;
    if (compareEnabled) {
      void loadSpec(el<HTMLInputElement>("compare-spec").value || "w", true);
    } else {
      redraw();
    }
  };
  buildPalette();
  await loadSpec("ghz");
}

if (typeof document !== "undefined" && document.getElementById("spheres")) {
  void init();
}
