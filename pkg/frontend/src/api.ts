/** Thin fetch client for the qcoords service; all math stays server-side. */
import type {
  AnalyzeResponse,
  ApplyResponse,
  CoordinateSetJson,
  NamedState,
  Pair,
} from "./types.js";

export class ServiceError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function expectJson<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    let detail = `${resp.status}`;
    try {
      const body = await resp.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      /* keep the status text */
    }
    throw new ServiceError(resp.status, detail);
  }
  return (await resp.json()) as T;
}

export class ApiClient {
  constructor(private base: string = "") {}

  async analyzeSpec(spec: string): Promise<AnalyzeResponse> {
    const resp = await fetch(`${this.base}/api/analyze`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ state_spec: spec }),
    });
    return expectJson<AnalyzeResponse>(resp);
  }

  async apply(
    state: Pair[],
    gates: string,
    stepsPerGate: number,
    prevCoordinates: CoordinateSetJson | null,
  ): Promise<ApplyResponse> {
    const body: Record<string, unknown> = {
      state,
      gates,
      steps_per_gate: stepsPerGate,
    };
    if (prevCoordinates) body.prev_coordinates = prevCoordinates;
    const resp = await fetch(`${this.base}/api/apply`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return expectJson<ApplyResponse>(resp);
  }

  async named(): Promise<NamedState[]> {
    return expectJson<NamedState[]>(await fetch(`${this.base}/api/named`));
  }
}
