// Thin typed client for the /v1 JSON API. The UI consumes nothing else.

import type {
  ApiError,
  BundleSummary,
  DemandRecord,
  EvaluationResult,
  IncentivePackage,
  RouteId,
} from './types.js';

export class ServiceError extends Error {
  readonly status: number;
  readonly body: ApiError;

  constructor(status: number, body: ApiError) {
    super(body.message);
    this.status = status;
    this.body = body;
  }
}

async function parseOrThrow<T>(response: Response): Promise<T> {
  if (response.ok) {
    return response.json() as Promise<T>;
  }
  let body: ApiError;
  try {
    body = (await response.json()) as ApiError;
  } catch {
    body = { code: 'unreachable', message: `HTTP ${response.status}`, field: null };
  }
  throw new ServiceError(response.status, body);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  getBundle(): Promise<BundleSummary> {
    return this.fetchImpl(`${this.baseUrl}/v1/bundle`).then((r) =>
      parseOrThrow<BundleSummary>(r),
    );
  }

  evaluate(route: RouteId, pkg: IncentivePackage): Promise<EvaluationResult> {
    return this.fetchImpl(`${this.baseUrl}/v1/evaluate`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ route, package: pkg }),
    }).then((r) => parseOrThrow<EvaluationResult>(r));
  }

  demandSeries(policy: string, bound: string): Promise<DemandRecord[]> {
    const params = new URLSearchParams({ policy, bound });
    return this.fetchImpl(`${this.baseUrl}/v1/demand?${params}`)
      .then((r) => parseOrThrow<{ records: DemandRecord[] }>(r))
      .then((body) => body.records);
  }
}
