// Recorded API exchanges (captured from the live service) used as snapshots.

import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import type { ApiError, BundleSummary, DemandRecord, EvaluationResult } from '../src/types.js';

const here = dirname(fileURLToPath(import.meta.url));

function load<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, 'fixtures', name), 'utf-8')) as T;
}

export const bundle = load<BundleSummary>('bundle.json');

export const PRESETS = ['base', 's1', 's2'] as const;
export const ROUTES = ['hefa', 'atj'] as const;

export function evaluation(preset: string, route: string): EvaluationResult {
  return load<EvaluationResult>(`evaluate_${preset}_${route}.json`);
}

export const demandLower = load<{ records: DemandRecord[] }>('demand_total_lower.json').records;
export const demandHigher = load<{ records: DemandRecord[] }>('demand_total_higher.json').records;
export const taxDiscountError = load<ApiError>('error_tax_discount.json');

/** Every numeric leaf in a JSON payload. */
export function numericLeaves(value: unknown, into: Set<number> = new Set()): Set<number> {
  if (typeof value === 'number') {
    into.add(value);
  } else if (Array.isArray(value)) {
    for (const item of value) numericLeaves(item, into);
  } else if (typeof value === 'object' && value !== null) {
    for (const item of Object.values(value)) numericLeaves(item, into);
  }
  return into;
}
