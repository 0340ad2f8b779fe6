/** Typed client for the co-writing service HTTP API. */

export interface TemplateInfo {
  template_id: string;
  kinds: string[];
  composite: boolean;
  seen: boolean;
  paraphrases: string[];
}

export interface InstructionView {
  request_id: string;
  text: string;
  template_id: string | null;
  arguments: string[];
}

export interface SuggestionView {
  suggestion_id: string;
  request_id: string;
  text: string;
  backend_id: string;
  passed: boolean;
  flags: string[];
  accepted: boolean;
}

export interface SessionView {
  session_id: string;
  title: string;
  finalized: boolean;
  next_ordinal: number;
  draft: string[];
  instructions: InstructionView[];
  suggestions: SuggestionView[];
  accepted: string[];
}

export interface SessionSummary {
  session_id: string;
  title: string;
  finalized: boolean;
  lines: number;
}

export interface LineCredit {
  line_index: number;
  score: number;
  suggestion_id: string | null;
}

export interface SessionAnalytics {
  session_id: string;
  title: string;
  finalized: boolean;
  lines: number;
  instructions: number;
  suggestions_shown: number;
  accepted: number;
  edits: number;
  histogram: Record<string, number>;
  poem_rouge_l: number;
  line_credits: LineCredit[];
  distinct_unigram_ratio: number;
}

export interface ParsedConstraint {
  kind: string;
  argument: string;
}

export interface InstructionOutcome {
  request_id: string;
  parsed: {
    template_id: string;
    paraphrase_index: number;
    constraints: ParsedConstraint[];
  } | null;
  suggestions: {
    suggestion_id: string;
    text: string;
    backend_id: string;
    passed: boolean;
    flags: string[];
  }[];
  next_ordinal: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: unknown,
  ) {
    super(`service responded ${status}`);
  }

  /** Human-readable form of the error detail the service returned. */
  describe(): string {
    if (typeof this.detail === "string") return this.detail;
    if (this.detail && typeof this.detail === "object") {
      const record = this.detail as Record<string, unknown>;
      if (typeof record.reason === "string") {
        return `${record.reason} (expected ${record.expected}, got ${record.got})`;
      }
    }
    return `request failed with status ${this.status}`;
  }
}

export class Client {
  constructor(readonly base: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await fetch(this.base + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await response.text();
    const payload: unknown = text ? JSON.parse(text) : null;
    if (!response.ok) {
      const detail =
        payload && typeof payload === "object" && "detail" in payload
          ? (payload as { detail: unknown }).detail
          : payload;
      throw new ApiError(response.status, detail);
    }
    return payload as T;
  }

  health(): Promise<{ status: string; backend: string }> {
    return this.request("GET", "/healthz");
  }

  templates(): Promise<{ templates: TemplateInfo[] }> {
    return this.request("GET", "/templates");
  }

  listSessions(): Promise<{ sessions: SessionSummary[] }> {
    return this.request("GET", "/sessions");
  }

  createSession(title: string): Promise<SessionView> {
    return this.request("POST", "/sessions", { title });
  }

  getSession(id: string): Promise<SessionView> {
    return this.request("GET", `/sessions/${encodeURIComponent(id)}`);
  }

  analytics(id: string): Promise<SessionAnalytics> {
    return this.request("GET", `/sessions/${encodeURIComponent(id)}/analytics`);
  }

  instruct(id: string, text: string, clientOrdinal: number): Promise<InstructionOutcome> {
    return this.request("POST", `/sessions/${encodeURIComponent(id)}/instructions`, {
      text,
      client_ordinal: clientOrdinal,
    });
  }

  accept(id: string, suggestionId: string, clientOrdinal: number): Promise<SessionView> {
    return this.request("POST", `/sessions/${encodeURIComponent(id)}/accept`, {
      suggestion_id: suggestionId,
      client_ordinal: clientOrdinal,
    });
  }

  saveDraft(id: string, lines: string[], clientOrdinal: number): Promise<SessionView> {
    return this.request("PUT", `/sessions/${encodeURIComponent(id)}/draft`, {
      lines,
      client_ordinal: clientOrdinal,
    });
  }

  finalize(id: string, clientOrdinal: number): Promise<SessionView> {
    return this.request("POST", `/sessions/${encodeURIComponent(id)}/finalize`, {
      client_ordinal: clientOrdinal,
    });
  }
}
