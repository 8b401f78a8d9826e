// Scenario file export/import. The file is the engine's scenario.json shape
// (the five levers), so an exported file feeds straight into
// `safscen evaluate --package FILE`. Import validation mirrors the engine's
// messages exactly so the UI and the CLI reject a bad file with the same text.

import { LEVER_ORDER, type LeverName } from './state.js';
import type { IncentivePackage } from './types.js';

/** Format a number the way the engine prints it (integers carry a .0). */
function engineNumber(value: number): string {
  return Number.isInteger(value) ? `${value}.0` : `${value}`;
}

export function exportScenario(levers: IncentivePackage): string {
  const ordered: Record<string, number> = {};
  for (const lever of LEVER_ORDER) {
    ordered[lever] = levers[lever];
  }
  return JSON.stringify(ordered, null, 2) + '\n';
}

export type ImportOutcome =
  | { ok: true; levers: IncentivePackage }
  | { ok: false; field: string; message: string };

export function importScenario(text: string): ImportOutcome {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch {
    return { ok: false, field: 'file', message: 'scenario file is not valid JSON' };
  }
  if (typeof raw !== 'object' || raw === null || Array.isArray(raw)) {
    return { ok: false, field: 'file', message: 'scenario file must be a JSON object' };
  }
  const data = raw as Record<string, unknown>;
  const known = new Set<string>(LEVER_ORDER);
  const unknown = Object.keys(data).filter((k) => !known.has(k)).sort();
  if (unknown.length > 0) {
    return {
      ok: false,
      field: unknown[0],
      message: `unknown package field '${unknown[0]}'`,
    };
  }
  const levers = {} as IncentivePackage;
  for (const lever of LEVER_ORDER) {
    const value = data[lever] ?? 0;
    if (typeof value !== 'number' || Number.isNaN(value)) {
      return { ok: false, field: lever, message: `${lever} must be a number` };
    }
    levers[lever as LeverName] = value;
  }
  if (levers.tax_discount < 0 || levers.tax_discount > 1) {
    return {
      ok: false,
      field: 'tax_discount',
      message: `tax_discount ${engineNumber(levers.tax_discount)} outside [0, 1]`,
    };
  }
  for (const lever of ['carbon_price', 'saf_premium', 'byproduct_premium',
                       'capital_grant'] as const) {
    if (levers[lever] < 0) {
      return {
        ok: false,
        field: lever,
        message: `${lever} ${engineNumber(levers[lever])} must be >= 0`,
      };
    }
  }
  return { ok: true, levers };
}
