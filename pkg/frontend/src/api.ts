import type {
  BackendChoice,
  MergeReport,
  SessionInfo,
  SignatureView,
  StageView,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function toApiError(response: Response): Promise<ApiError> {
  let code = `HTTP_${response.status}`;
  let message = response.statusText || "request failed";
  try {
    const body = await response.json();
    if (body && typeof body === "object" && body.detail) {
      if (typeof body.detail === "object" && body.detail.code) {
        code = body.detail.code;
        message = body.detail.message ?? message;
      } else if (typeof body.detail === "string") {
        message = body.detail;
      }
    }
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(code, message, response.status);
}

/** Thin typed client over the session API; every mutation round-trips. */
export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  private async requestJson<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, init);
    } catch (error) {
      throw new ApiError("NETWORK", String(error), 0);
    }
    if (!response.ok) {
      throw await toApiError(response);
    }
    return (await response.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.requestJson<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  createSession(ontology?: string): Promise<SessionInfo> {
    return this.post<SessionInfo>("/sessions", ontology ? { ontology } : {});
  }

  signature(sessionId: string): Promise<SignatureView> {
    return this.requestJson<SignatureView>(`/sessions/${sessionId}/signature`);
  }

  async ontologyText(sessionId: string): Promise<string> {
    let response: Response;
    try {
      response = await fetch(`${this.baseUrl}/sessions/${sessionId}/ontology`);
    } catch (error) {
      throw new ApiError("NETWORK", String(error), 0);
    }
    if (!response.ok) {
      throw await toApiError(response);
    }
    return response.text();
  }

  translate(
    sessionId: string,
    sentence: string,
    backend: BackendChoice,
  ): Promise<StageView> {
    return this.post<StageView>(`/sessions/${sessionId}/translate`, {
      sentence,
      backend,
    });
  }

  stages(sessionId: string): Promise<{ stages: StageView[] }> {
    return this.requestJson<{ stages: StageView[] }>(`/sessions/${sessionId}/stages`);
  }

  decide(sessionId: string, stageId: string, accept: number[]): Promise<MergeReport> {
    return this.post<MergeReport>(
      `/sessions/${sessionId}/stages/${stageId}/decision`,
      { accept },
    );
  }
}
