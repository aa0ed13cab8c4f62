/**
 * Thin HTTP client for the ilc JSON service.
 *
 * Every method is one POST. Domain failures (a program that does not parse,
 * a delta that does not fit, an endpoint that gets stuck) come back as
 * ordinary return values because the service reports them with status 200;
 * only transport problems and malformed requests throw.
 */
import {
  ApplyResponse,
  decodeApplyResponse,
  decodeDeltaEvalResponse,
  decodeDiffResponse,
  decodeEvalResponse,
  decodeParseDeltaResponse,
  decodeParseTermResponse,
  DeltaEvalResponse,
  DeltaNode,
  OutcomeNode,
  ParseResponse,
  TermNode,
} from "./wire.js";

/** A non-200 answer from the service (bad request, unknown route, crash). */
export class ServiceError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ServiceError";
  }
}

/** The slice of the client the playground session depends on. */
export interface PlaygroundService {
  parseTerm(text: string, signal?: AbortSignal): Promise<ParseResponse<TermNode>>;
  parseDelta(text: string, signal?: AbortSignal): Promise<ParseResponse<DeltaNode>>;
  applyDelta(term: TermNode, delta: DeltaNode, signal?: AbortSignal): Promise<ApplyResponse>;
  deltaEval(delta: DeltaNode, fuel?: number, signal?: AbortSignal): Promise<DeltaEvalResponse>;
}

export class ServiceClient implements PlaygroundService {
  constructor(readonly baseUrl: string) {}

  private async post(path: string, body: unknown, signal?: AbortSignal): Promise<unknown> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
    const payload: unknown = await response.json();
    if (!response.ok) {
      const detail =
        typeof payload === "object" && payload !== null && "error" in payload
          ? String((payload as { error: unknown }).error)
          : response.statusText;
      throw new ServiceError(response.status, `${path}: ${detail}`);
    }
    return payload;
  }

  async evalTerm(term: TermNode, fuel?: number, signal?: AbortSignal): Promise<OutcomeNode> {
    const body = fuel === undefined ? { term } : { term, fuel };
    return decodeEvalResponse(await this.post("/eval", body, signal)).outcome;
  }

  async deltaEval(
    delta: DeltaNode,
    fuel?: number,
    signal?: AbortSignal
  ): Promise<DeltaEvalResponse> {
    const body = fuel === undefined ? { delta } : { delta, fuel };
    return decodeDeltaEvalResponse(await this.post("/delta-eval", body, signal));
  }

  async diff(from: TermNode, to: TermNode, signal?: AbortSignal): Promise<DeltaNode> {
    return decodeDiffResponse(await this.post("/diff", { from, to }, signal)).delta;
  }

  async applyDelta(
    term: TermNode,
    delta: DeltaNode,
    signal?: AbortSignal
  ): Promise<ApplyResponse> {
    return decodeApplyResponse(await this.post("/apply", { term, delta }, signal));
  }

  async parseTerm(text: string, signal?: AbortSignal): Promise<ParseResponse<TermNode>> {
    return decodeParseTermResponse(await this.post("/parse", { text, kind: "term" }, signal));
  }

  async parseDelta(text: string, signal?: AbortSignal): Promise<ParseResponse<DeltaNode>> {
    return decodeParseDeltaResponse(await this.post("/parse", { text, kind: "delta" }, signal));
  }
}
