/** Thin typed client for the scenario service. All engine math lives on the
 * server; this module only moves JSON. Scenario evaluations keep at most one
 * request in flight: a newer evaluation aborts the superseded one. */

import type {
  CurveDto,
  CurveRequestDto,
  RateRequestDto,
  ResultsDto,
  ScenarioConfigDto,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly field: string | null,
    message: string,
  ) {
    super(message);
  }
}

export class SupersededError extends Error {
  constructor() {
    super("evaluation superseded by a newer request");
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function readError(response: Response): Promise<ApiError> {
  let field: string | null = null;
  let message = `${response.status}`;
  try {
    const body = (await response.json()) as Record<string, unknown>;
    if (typeof body.field === "string") field = body.field;
    if (typeof body.message === "string") message = body.message;
    else if (typeof body.error_code === "string") message = body.error_code;
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(response.status, field, message);
}

export class ApiClient {
  private inflightScenario: AbortController | null = null;

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async getDefaults(): Promise<Record<string, ScenarioConfigDto>> {
    const response = await this.fetchFn(`${this.baseUrl}/defaults`);
    if (!response.ok) throw await readError(response);
    return (await response.json()) as Record<string, ScenarioConfigDto>;
  }

  /** POST /scenario with cancellation of any older in-flight evaluation. */
  async evaluateScenario(config: ScenarioConfigDto): Promise<ResultsDto> {
    if (this.inflightScenario !== null) this.inflightScenario.abort();
    const controller = new AbortController();
    this.inflightScenario = controller;
    try {
      const response = await this.fetchFn(`${this.baseUrl}/scenario`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(config),
        signal: controller.signal,
      });
      if (!response.ok) throw await readError(response);
      return (await response.json()) as ResultsDto;
    } catch (error) {
      if (controller.signal.aborted) throw new SupersededError();
      throw error;
    } finally {
      if (this.inflightScenario === controller) this.inflightScenario = null;
    }
  }

  async contractCurve(request: CurveRequestDto): Promise<CurveDto> {
    const response = await this.fetchFn(`${this.baseUrl}/contracts/curve`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!response.ok) throw await readError(response);
    return (await response.json()) as CurveDto;
  }

  async financingRate(request: RateRequestDto): Promise<{ rate: number }> {
    const response = await this.fetchFn(`${this.baseUrl}/financing/rate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!response.ok) throw await readError(response);
    return (await response.json()) as { rate: number };
  }
}
