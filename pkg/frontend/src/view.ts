/** Presentation-only state: camera angles, plane zoom, trail length.

Never touches the session numerics.
*/

export interface Camera {
  azimuth: number;
  elevation: number;
}

export interface ViewState {
  cameras: Camera[];
  planeZoom: number;
  trailLength: number;
}

export function defaultView(numQubits: number): ViewState {
  return {
    cameras: Array.from({ length: numQubits }, () => ({ azimuth: -0.5, elevation: 0.35 })),
    planeZoom: 1.0,
    trailLength: 48,
  };
}

export function rotateCamera(view: ViewState, qubit: number, dAzim: number, dElev: number): ViewState {
  const cameras = view.cameras.map((c, i) =>
    i === qubit
      ? {
          azimuth: c.azimuth + dAzim,
          elevation: Math.max(-1.4, Math.min(1.4, c.elevation + dElev)),
        }
      : c,
  );
  return { ...view, cameras };
}

export function setZoom(view: ViewState, zoom: number): ViewState {
  return { ...view, planeZoom: Math.max(0.5, Math.min(4.0, zoom)) };
}

export function setTrail(view: ViewState, length: number): ViewState {
  return { ...view, trailLength: Math.max(0, Math.min(512, Math.round(length))) };
}
