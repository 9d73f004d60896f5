/** Thin client over the pipeline API. fetch is injectable for tests. */

import type {
  FieldError,
  MatrixPayload,
  ScenariosPayload,
  SimRequest,
  SimResponse,
  TopicsPayload,
} from "./types";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  status: number;
  fields: FieldError[];

  constructor(status: number, detail: string | FieldError[]) {
    super(
      typeof detail === "string"
        ? detail
        : detail.map((f) => `${f.field}: ${f.message}`).join("; ")
    );
    this.status = status;
    this.fields = typeof detail === "string" ? [] : detail;
  }
}

async function raiseFor(res: Response): Promise<never> {
  let detail: string | FieldError[] = `HTTP ${res.status}`;
  try {
    const body = await res.json();
    if (body && body.detail !== undefined) detail = body.detail;
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(res.status, detail);
}

export function createApi(base = "", fetchFn: FetchLike = (url, init) => fetch(url, init)) {
  async function getJson<T>(path: string): Promise<T> {
    const res = await fetchFn(`${base}${path}`);
    if (!res.ok) await raiseFor(res);
    return res.json() as Promise<T>;
  }

  return {
    health: () => getJson<{ status: string }>("/api/health"),
    topics: () => getJson<TopicsPayload>("/api/topics"),
    matrix: () => getJson<MatrixPayload>("/api/matrix"),
    scenarios: () => getJson<ScenariosPayload>("/api/scenarios"),

    simulate: async (req: SimRequest): Promise<SimResponse> => {
      const res = await fetchFn(`${base}/api/simulate`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(req),
      });
      if (!res.ok) await raiseFor(res);
      return res.json() as Promise<SimResponse>;
    },
  };
}

export type Api = ReturnType<typeof createApi>;
