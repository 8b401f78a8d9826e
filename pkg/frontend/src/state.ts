// Lever panel state: bounds come from GET /v1/bundle, never from UI constants.

import type {
  BundleSummary,
  IncentivePackage,
  LeverBound,
  PresetName,
  RouteSelection,
} from './types.js';

export const LEVER_ORDER = [
  'tax_discount',
  'carbon_price',
  'saf_premium',
  'byproduct_premium',
  'capital_grant',
] as const;

export type LeverName = (typeof LEVER_ORDER)[number];

export interface LeverPanelState {
  levers: IncentivePackage;
  route: RouteSelection;
}

export interface SliderConfig {
  lever: LeverName;
  min: number;
  max?: number;
  step?: number;
}

/** Slider configs mirror the service-published bounds exactly. */
export function panelConfig(bundle: BundleSummary): SliderConfig[] {
  return LEVER_ORDER.map((lever) => {
    const bound: LeverBound | undefined = bundle.lever_bounds[lever];
    if (!bound) {
      throw new Error(`service did not publish bounds for lever ${lever}`);
    }
    return { lever, min: bound.min, max: bound.max, step: bound.step };
  });
}

export function initialState(): LeverPanelState {
  return {
    levers: {
      tax_discount: 0,
      carbon_price: 0,
      saf_premium: 0,
      byproduct_premium: 0,
      capital_grant: 0,
    },
    route: 'both',
  };
}

/** Clamp one lever into its published bounds (sliders cannot leave them anyway). */
export function setLever(
  state: LeverPanelState,
  bundle: BundleSummary,
  lever: LeverName,
  value: number,
): LeverPanelState {
  const bound = bundle.lever_bounds[lever];
  let clamped = Math.max(bound.min, value);
  if (bound.max !== undefined) {
    clamped = Math.min(bound.max, clamped);
  }
  return { ...state, levers: { ...state.levers, [lever]: clamped } };
}

/** Presets set all five levers atomically. */
export function applyPreset(
  state: LeverPanelState,
  bundle: BundleSummary,
  preset: PresetName,
): LeverPanelState {
  return { ...state, levers: { ...bundle.scenario_presets[preset] } };
}

export function setRoute(state: LeverPanelState, route: RouteSelection): LeverPanelState {
  return { ...state, route };
}

export function activeRoutes(state: LeverPanelState): Array<'hefa' | 'atj'> {
  return state.route === 'both' ? ['hefa', 'atj'] : [state.route];
}

/** Name of the preset the current levers equal, if any. */
export function matchingPreset(
  state: LeverPanelState,
  bundle: BundleSummary,
): PresetName | null {
  const names: PresetName[] = ['base', 's1', 's2'];
  for (const name of names) {
    const preset = bundle.scenario_presets[name];
    if (LEVER_ORDER.every((lever) => preset[lever] === state.levers[lever])) {
      return name;
    }
  }
  return null;
}
