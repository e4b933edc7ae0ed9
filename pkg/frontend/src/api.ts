/** Thin typed client over the annotation service.
 *
 * Every write carries the last revision the client saw in an If-Match
 * header; the service answers 409 stale_revision on conflicts, which
 * callers surface as a reload prompt (never a silent overwrite).
 */

import type {
  AlignmentDraftPayload,
  ApiErrorBody,
  PairDetail,
  PairSummary,
  PasBatchPayload,
  Registry,
} from "./types";

export class ApiError extends Error {
  status: number;
  code: string;
  details: ApiErrorBody["details"];

  constructor(body: ApiErrorBody) {
    super(body.message);
    this.status = body.status;
    this.code = body.code;
    this.details = body.details ?? [];
  }

  get stale(): boolean {
    return this.code === "stale_revision";
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let body: ApiErrorBody;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    body = {
      status: response.status,
      code: "http_error",
      message: response.statusText,
      details: [],
    };
  }
  return new ApiError(body);
}

export class ApiClient {
  constructor(private base: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.base + path);
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  private async send<T>(
    method: string,
    path: string,
    body: unknown,
    revision: number | null,
  ): Promise<T> {
    const headers: Record<string, string> = { "Content-Type": "application/json" };
    if (revision !== null) headers["If-Match"] = String(revision);
    const response = await fetch(this.base + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  listPairs(): Promise<PairSummary[]> {
    return this.get("/api/pairs");
  }

  getPair(pairId: string): Promise<PairDetail> {
    return this.get(`/api/pairs/${encodeURIComponent(pairId)}`);
  }

  getRegistry(): Promise<Registry> {
    return this.get("/api/registry");
  }

  postAlignment(
    pairId: string,
    draft: AlignmentDraftPayload,
    revision: number,
  ): Promise<{ alignment_id: string; revision: number }> {
    return this.send("POST", `/api/pairs/${encodeURIComponent(pairId)}/alignments`, draft, revision);
  }

  postPas(
    pairId: string,
    batch: PasBatchPayload,
    revision: number,
  ): Promise<{ created: { predicates: string[]; arguments: string[] }; revision: number }> {
    return this.send("POST", `/api/pairs/${encodeURIComponent(pairId)}/pas`, batch, revision);
  }

  deleteAlignment(pairId: string, alignmentId: string, revision: number): Promise<{ revision: number }> {
    return this.send(
      "DELETE",
      `/api/pairs/${encodeURIComponent(pairId)}/alignments/${encodeURIComponent(alignmentId)}`,
      undefined,
      revision,
    );
  }

  deletePas(
    pairId: string,
    instanceId: string,
    revision: number,
  ): Promise<{ removed: string[]; revision: number }> {
    return this.send(
      "DELETE",
      `/api/pairs/${encodeURIComponent(pairId)}/pas/${encodeURIComponent(instanceId)}`,
      undefined,
      revision,
    );
  }
}
