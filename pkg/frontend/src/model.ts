/** Session state: the current amplitudes, gate history, and undo.

The client owns all session state; the server is a pure evaluator.  Undo
restores the stored pre-gate amplitudes and coordinates verbatim, so the
marker returns bit-identically.  Requests are serialized through a promise
queue so at most one apply is in flight.
*/
import { ApiClient } from "./api.js";
import type { CoordinateSetJson, Pair, TrajectoryPointJson } from "./types.js";

export interface HistoryEntry {
  gateText: string;
  beforeState: Pair[];
  beforeCoords: CoordinateSetJson;
  points: TrajectoryPointJson[];
}

export class SessionModel {
  initialState: Pair[] = [];
  initialCoords: CoordinateSetJson | null = null;
  currentState: Pair[] = [];
  currentCoords: CoordinateSetJson | null = null;
  history: HistoryEntry[] = [];
  selectedNamed = "";
  animationSpeed = 1.0;
  stepsPerGate = 8;

  private queue: Promise<unknown> = Promise.resolve();

  constructor(public api: ApiClient) {}

  /** Serialize service calls: later actions wait for the one in flight. */
  private enqueue<T>(fn: () => Promise<T>): Promise<T> {
    const next = this.queue.then(fn, fn);
    this.queue = next.catch(() => undefined);
    return next;
  }

  loadSpec(spec: string): Promise<void> {
    return this.enqueue(async () => {
      const resp = await this.api.analyzeSpec(spec);
      this.initialState = resp.state;
      this.initialCoords = resp.coordinates;
      this.currentState = resp.state;
      this.currentCoords = resp.coordinates;
      this.history = [];
    });
  }

  applyGate(gateText: string): Promise<TrajectoryPointJson[]> {
    return this.enqueue(async () => {
      if (!this.currentCoords) throw new Error("no state loaded");
      const before = this.currentState;
      const beforeCoords = this.currentCoords;
      const resp = await this.api.apply(
        before,
        gateText,
        this.stepsPerGate,
        beforeCoords,
      );
      const points = resp.trajectory;
      const last = points[points.length - 1];
      this.history.push({ gateText, beforeState: before, beforeCoords, points });
      this.currentState = last.state;
      this.currentCoords = last.coordinates;
      return points;
    });
  }

  /** Pop exactly one gate; the pre-gate snapshot comes back verbatim. */
  undo(): boolean {
    const entry = this.history.pop();
    if (!entry) return false;
    this.currentState = entry.beforeState;
    this.currentCoords = entry.beforeCoords;
    return true;
  }

  gateTexts(): string[] {
    return this.history.map((h) => h.gateText);
  }

  /** Replay the whole history server-side; the drift must stay below tol. */
  replayDrift(): Promise<number> {
    return this.enqueue(async () => {
      let state = this.initialState;
      let coords = this.initialCoords;
      for (const entry of this.history) {
        const resp = await this.api.apply(state, entry.gateText, this.stepsPerGate, coords);
        const last = resp.trajectory[resp.trajectory.length - 1];
        state = last.state;
        coords = last.coordinates;
      }
      let worst = 0.0;
      for (let i = 0; i < state.length; i += 1) {
        worst = Math.max(
          worst,
          Math.abs(state[i][0] - this.currentState[i][0]),
          Math.abs(state[i][1] - this.currentState[i][1]),
        );
      }
      return worst;
    });
  }
}
