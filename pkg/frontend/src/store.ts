// Request sequencing and result retention: at most one applied response per
// route per sequence number, stale responses discarded, last good result kept
// through errors so the console never blanks out mid-drag.

import type { ApiError, EvaluationResult, RouteId } from './types.js';

export class RequestTracker {
  private nextToken = 1;
  private latestIssued: Record<RouteId, number> = { hefa: 0, atj: 0 };
  private latestApplied: Record<RouteId, number> = { hefa: 0, atj: 0 };

  issue(route: RouteId): number {
    const token = this.nextToken++;
    this.latestIssued[route] = token;
    return token;
  }

  /** True only for the most recently issued, not-yet-superseded request. */
  shouldApply(route: RouteId, token: number): boolean {
    return token === this.latestIssued[route] && token > this.latestApplied[route];
  }

  markApplied(route: RouteId, token: number): void {
    if (token > this.latestApplied[route]) {
      this.latestApplied[route] = token;
    }
  }

  inFlight(route: RouteId): boolean {
    return this.latestIssued[route] > this.latestApplied[route];
  }
}

export interface RouteSlot {
  lastGood: EvaluationResult | null;
  stale: boolean;
}

export interface ConsoleState {
  slots: Record<RouteId, RouteSlot>;
  banner: string | null;
}

export function initialConsoleState(): ConsoleState {
  return {
    slots: {
      hefa: { lastGood: null, stale: false },
      atj: { lastGood: null, stale: false },
    },
    banner: null,
  };
}

export function beginRequest(state: ConsoleState, route: RouteId): ConsoleState {
  return {
    ...state,
    slots: { ...state.slots, [route]: { ...state.slots[route], stale: true } },
  };
}

export function applyResult(
  state: ConsoleState,
  tracker: RequestTracker,
  route: RouteId,
  token: number,
  result: EvaluationResult,
): ConsoleState {
  if (!tracker.shouldApply(route, token)) {
    return state; // superseded while in flight; discard
  }
  tracker.markApplied(route, token);
  return {
    banner: null,
    slots: { ...state.slots, [route]: { lastGood: result, stale: false } },
  };
}

export function applyError(
  state: ConsoleState,
  tracker: RequestTracker,
  route: RouteId,
  token: number,
  error: ApiError,
): ConsoleState {
  if (!tracker.shouldApply(route, token)) {
    return state;
  }
  tracker.markApplied(route, token);
  const suffix = error.field ? ` (field: ${error.field})` : '';
  return {
    banner: `${error.code}: ${error.message}${suffix}`,
    slots: {
      ...state.slots,
      // last good result retained; only the stale flag clears
      [route]: { ...state.slots[route], stale: false },
    },
  };
}
