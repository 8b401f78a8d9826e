// Wire types mirroring the engine's /v1 JSON schemas.

export type RouteId = 'hefa' | 'atj';
export type PresetName = 'base' | 's1' | 's2';
export type Currency = 'usd' | 'brl';
export type RouteSelection = RouteId | 'both';

export interface IncentivePackage {
  tax_discount: number;
  carbon_price: number;
  saf_premium: number;
  byproduct_premium: number;
  capital_grant: number;
}

export interface ApiError {
  code: string;
  message: string;
  field: string | null;
}

export interface LeverBound {
  min: number;
  max?: number;
  step?: number;
}

export interface BundleSummary {
  bundle_version: number;
  fx_brl_per_usd: number;
  routes: Record<RouteId, {
    byproduct_yield: number;
    consumption: Record<string, number>;
  }>;
  carbon: {
    fossil_jet_ci: number;
    hefa_ci: number;
    atj_ci: number;
    lhv_mj_per_kg: number;
  };
  scenario_presets: Record<PresetName, IncentivePackage>;
  lever_bounds: Record<string, LeverBound>;
  capex_references_usd: Record<string, Record<RouteId, number>>;
  buildout_scenarios: Array<{
    id: string;
    description: string;
    capex_brl_low: number;
    capex_brl_high: number;
  }>;
  demand_years: number[];
}

export interface CostLine {
  commodity: string;
  quantity: number;
  unit_price: number;
  pre_tax_cost: number;
  tax_cost: number;
}

export interface MarginStatement {
  route: RouteId;
  currency: Currency;
  revenue: { saf: number; byproduct: number; carbon: number; total: number };
  cost: {
    lines: CostLine[];
    other_variable: number;
    other_variable_tax: number;
    total_variable: number;
  };
  contribution_margin: number;
  fixed_cost: number;
  net_margin: number;
}

export interface WaterfallStep {
  lever: string;
  delta: number;
}

export interface EvaluationResult {
  route: RouteId;
  package_name: string | null;
  package: IncentivePackage;
  margin: MarginStatement;
  dcf: {
    npv: number;
    irr: number | null;
    max_capex: number;
    currency: Currency;
    annual_free_cash_flow: number;
    cbios_per_year: number;
  };
  waterfall: WaterfallStep[];
  deviations: Array<{
    target: string;
    published: number;
    computed: number;
    rel_error: number;
  }>;
}

export interface DemandRecord {
  year: number;
  policy: string;
  ci_bound: string;
  volume_kt: number;
  source: 'paper' | 'interpolated';
}
