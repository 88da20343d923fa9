import type { CorrectResponse, RulesResponse } from "./types";

export class ApiError extends Error {
  constructor(message: string, readonly status: number | null) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseOrThrow<T>(res: Response): Promise<T> {
  if (!res.ok) {
    let detail = `HTTP ${res.status}`;
    try {
      const body = await res.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(detail, res.status);
  }
  return (await res.json()) as T;
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  private async post<T>(path: string, payload: unknown): Promise<T> {
    let res: Response;
    try {
      res = await fetch(this.baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
      });
    } catch {
      throw new ApiError("service unreachable", null);
    }
    return parseOrThrow<T>(res);
  }

  async correct(text: string): Promise<CorrectResponse> {
    return this.post<CorrectResponse>("/api/correct", { text, source: "web" });
  }

  async rules(): Promise<RulesResponse> {
    let res: Response;
    try {
      res = await fetch(this.baseUrl + "/api/rules");
    } catch {
      throw new ApiError("service unreachable", null);
    }
    return parseOrThrow<RulesResponse>(res);
  }

  async sendSessionFeedback(sessionId: string, correctedText: string): Promise<void> {
    await this.post(`/api/sessions/${encodeURIComponent(sessionId)}/feedback`, {
      corrected_text: correctedText,
    });
  }

  async sendGeneralFeedback(message: string): Promise<void> {
    await this.post("/api/feedback", { message });
  }
}
