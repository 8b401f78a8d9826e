// View model assembly. Every number here is the service's number verbatim;
// the only transform ever applied is the labeled BRL display conversion
// (value x fx from the bundle). No engine math is recomputed client-side.

import type {
  BundleSummary,
  Currency,
  DemandRecord,
  EvaluationResult,
  RouteId,
} from './types.js';

export interface GaugeReference {
  label: string;
  value: number;
}

export interface RouteViewModel {
  route: RouteId;
  presetName: string | null;
  stale: boolean;
  currency: Currency;
  maxCapex: number;
  annualFreeCashFlow: number;
  npvAtReference: number;
  irrAtReference: number | null;
  cbiosPerYear: number;
  contributionMargin: number;
  fixedCost: number;
  netMargin: number;
  revenue: { saf: number; byproduct: number; carbon: number; total: number };
  costLines: Array<{ commodity: string; preTaxCost: number; taxCost: number }>;
  otherVariable: number;
  otherVariableTax: number;
  totalVariableCost: number;
  waterfall: Array<{ lever: string; delta: number }>;
  deviations: Array<{ target: string; published: number; computed: number }>;
  gauge: { value: number; references: GaugeReference[] };
}

export interface DemandViewModel {
  years: number[];
  lowerKt: number[];
  higherKt: number[];
}

function displayScale(currency: Currency, fxBrlPerUsd: number): number {
  return currency === 'brl' ? fxBrlPerUsd : 1;
}

export function currencyNote(currency: Currency, fxBrlPerUsd: number): string {
  return currency === 'brl'
    ? `displayed in BRL (USD values x ${fxBrlPerUsd} bundle FX rate)`
    : 'displayed in USD (engine currency)';
}

/** Reference lines for the max-CAPEX gauge, from the bundle summary. */
export function gaugeReferences(
  bundle: BundleSummary,
  route: RouteId,
  currency: Currency,
): GaugeReference[] {
  const scale = displayScale(currency, bundle.fx_brl_per_usd);
  const refs: GaugeReference[] = [];
  for (const [name, perRoute] of Object.entries(bundle.capex_references_usd)) {
    refs.push({ label: `reference ${name}`, value: perRoute[route] * scale });
  }
  for (const scenario of bundle.buildout_scenarios) {
    // buildout figures are published in BRL; convert to the display currency
    const usd = scenario.capex_brl_low / bundle.fx_brl_per_usd;
    refs.push({ label: `buildout ${scenario.id}`, value: usd * scale });
  }
  return refs;
}

export function buildRouteViewModel(
  result: EvaluationResult,
  bundle: BundleSummary,
  currency: Currency,
  stale = false,
): RouteViewModel {
  const scale = displayScale(currency, bundle.fx_brl_per_usd);
  const margin = result.margin;
  return {
    route: result.route,
    presetName: result.package_name,
    stale,
    currency,
    maxCapex: result.dcf.max_capex * scale,
    annualFreeCashFlow: result.dcf.annual_free_cash_flow * scale,
    npvAtReference: result.dcf.npv * scale,
    irrAtReference: result.dcf.irr,
    cbiosPerYear: result.dcf.cbios_per_year,
    contributionMargin: margin.contribution_margin * scale,
    fixedCost: margin.fixed_cost * scale,
    netMargin: margin.net_margin * scale,
    revenue: {
      saf: margin.revenue.saf * scale,
      byproduct: margin.revenue.byproduct * scale,
      carbon: margin.revenue.carbon * scale,
      total: margin.revenue.total * scale,
    },
    costLines: margin.cost.lines.map((line) => ({
      commodity: line.commodity,
      preTaxCost: line.pre_tax_cost * scale,
      taxCost: line.tax_cost * scale,
    })),
    otherVariable: margin.cost.other_variable * scale,
    otherVariableTax: margin.cost.other_variable_tax * scale,
    totalVariableCost: margin.cost.total_variable * scale,
    waterfall: result.waterfall.map((step) => ({
      lever: step.lever,
      delta: step.delta * scale,
    })),
    deviations: result.deviations.map((d) => ({
      target: d.target,
      published: d.published * scale,
      computed: d.computed * scale,
    })),
    gauge: {
      value: result.dcf.max_capex * scale,
      references: gaugeReferences(bundle, result.route, currency),
    },
  };
}

export function buildDemandViewModel(
  lower: DemandRecord[],
  higher: DemandRecord[],
): DemandViewModel {
  return {
    years: lower.map((r) => r.year),
    lowerKt: lower.map((r) => r.volume_kt),
    higherKt: higher.map((r) => r.volume_kt),
  };
}

/** All numbers a view model renders; used by the provenance test. */
export function renderedNumbers(vm: RouteViewModel): number[] {
  const values: number[] = [
    vm.maxCapex,
    vm.annualFreeCashFlow,
    vm.npvAtReference,
    vm.cbiosPerYear,
    vm.contributionMargin,
    vm.fixedCost,
    vm.netMargin,
    vm.revenue.saf,
    vm.revenue.byproduct,
    vm.revenue.carbon,
    vm.revenue.total,
    vm.otherVariable,
    vm.otherVariableTax,
    vm.totalVariableCost,
  ];
  if (vm.irrAtReference !== null) {
    values.push(vm.irrAtReference);
  }
  for (const line of vm.costLines) {
    values.push(line.preTaxCost, line.taxCost);
  }
  for (const step of vm.waterfall) {
    values.push(step.delta);
  }
  for (const dev of vm.deviations) {
    values.push(dev.published, dev.computed);
  }
  values.push(vm.gauge.value);
  return values;
}
