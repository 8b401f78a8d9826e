// DOM wiring for the what-if console. All engine math comes from the service;
// this file only moves values between controls, requests and SVG.

import { ApiClient, ServiceError } from './api.js';
import { demandSvg, fmtMoney, gaugeSvg, waterfallSvg } from './charts.js';
import { DEBOUNCE_MS, debounce } from './debounce.js';
import { exportScenario, importScenario } from './export.js';
import {
  activeRoutes,
  applyPreset,
  initialState,
  matchingPreset,
  panelConfig,
  setLever,
  setRoute,
  type LeverName,
  type LeverPanelState,
} from './state.js';
import {
  RequestTracker,
  applyError,
  applyResult,
  beginRequest,
  initialConsoleState,
  type ConsoleState,
} from './store.js';
import type { BundleSummary, Currency, DemandRecord, PresetName } from './types.js';
import { buildRouteViewModel, currencyNote } from './viewmodel.js';

const api = new ApiClient(
  new URLSearchParams(location.search).get('api') ?? 'http://127.0.0.1:8000',
);

const $ = <T extends HTMLElement>(selector: string): T => {
  const el = document.querySelector<T>(selector);
  if (!el) throw new Error(`missing element ${selector}`);
  return el;
};

let bundle: BundleSummary;
let panel: LeverPanelState = initialState();
let consoleState: ConsoleState = initialConsoleState();
let currency: Currency = 'usd';
let demandLower: DemandRecord[] = [];
let demandHigher: DemandRecord[] = [];
const tracker = new RequestTracker();

async function boot(): Promise<void> {
  bundle = await api.getBundle();
  [demandLower, demandHigher] = await Promise.all([
    api.demandSeries('total', 'lower'),
    api.demandSeries('total', 'higher'),
  ]);
  buildLeverControls();
  bindButtons();
  renderDemand();
  refresh();
}

function buildLeverControls(): void {
  const host = $('#levers');
  for (const config of panelConfig(bundle)) {
    const row = document.createElement('label');
    row.className = 'lever-row';
    const name = document.createElement('span');
    name.textContent = config.lever.replace(/_/g, ' ');
    const input = document.createElement('input');
    input.dataset.lever = config.lever;
    if (config.max !== undefined) {
      input.type = 'range';
      input.min = String(config.min);
      input.max = String(config.max);
      input.step = String(config.step ?? 'any');
    } else {
      input.type = 'number';
      input.min = String(config.min);
      input.step = '1000000';
    }
    input.value = String(panel.levers[config.lever]);
    const value = document.createElement('output');
    value.dataset.lever = config.lever;
    value.textContent = input.value;
    input.addEventListener('input', () => {
      panel = setLever(panel, bundle, config.lever, Number(input.value));
      value.textContent = String(panel.levers[config.lever]);
      markPresetButtons();
      debouncedRefresh();
    });
    row.append(name, input, value);
    host.append(row);
  }
}

function bindButtons(): void {
  for (const preset of ['base', 's1', 's2'] as PresetName[]) {
    $(`#preset-${preset}`).addEventListener('click', () => {
      panel = applyPreset(panel, bundle, preset);
      syncLeverControls();
      markPresetButtons();
      refresh(); // presets apply atomically and immediately
    });
  }
  for (const route of ['hefa', 'atj', 'both'] as const) {
    $(`#route-${route}`).addEventListener('click', () => {
      panel = setRoute(panel, route);
      markRouteButtons();
      refresh();
    });
  }
  $('#currency-toggle').addEventListener('click', () => {
    currency = currency === 'usd' ? 'brl' : 'usd';
    $('#currency-toggle').textContent = currency.toUpperCase();
    render();
  });
  $('#export').addEventListener('click', () => {
    const blob = new Blob([exportScenario(panel.levers)], { type: 'application/json' });
    const link = document.createElement('a');
    link.href = URL.createObjectURL(blob);
    link.download = 'scenario.json';
    link.click();
    URL.revokeObjectURL(link.href);
  });
  $('#import').addEventListener('change', async (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    const outcome = importScenario(await file.text());
    if (!outcome.ok) {
      showBanner(`invalid scenario file: ${outcome.message}`);
      return;
    }
    panel = { ...panel, levers: outcome.levers };
    syncLeverControls();
    markPresetButtons();
    refresh();
    input.value = '';
  });
}

function syncLeverControls(): void {
  document.querySelectorAll<HTMLInputElement>('#levers input').forEach((input) => {
    const lever = input.dataset.lever as LeverName;
    input.value = String(panel.levers[lever]);
  });
  document.querySelectorAll<HTMLOutputElement>('#levers output').forEach((output) => {
    const lever = output.dataset.lever as LeverName;
    output.textContent = String(panel.levers[lever]);
  });
}

function markPresetButtons(): void {
  const active = matchingPreset(panel, bundle);
  for (const preset of ['base', 's1', 's2'] as PresetName[]) {
    $(`#preset-${preset}`).classList.toggle('active', preset === active);
  }
}

function markRouteButtons(): void {
  for (const route of ['hefa', 'atj', 'both'] as const) {
    $(`#route-${route}`).classList.toggle('active', panel.route === route);
  }
}

const debouncedRefresh = debounce(() => refresh(), DEBOUNCE_MS);

function refresh(): void {
  for (const route of activeRoutes(panel)) {
    const token = tracker.issue(route);
    consoleState = beginRequest(consoleState, route);
    render();
    api
      .evaluate(route, panel.levers)
      .then((result) => {
        consoleState = applyResult(consoleState, tracker, route, token, result);
        render();
      })
      .catch((error: unknown) => {
        const body = error instanceof ServiceError
          ? error.body
          : { code: 'unreachable', message: String(error), field: null };
        consoleState = applyError(consoleState, tracker, route, token, body);
        render();
      });
  }
}

function showBanner(message: string | null): void {
  const banner = $('#banner');
  banner.textContent = message ?? '';
  banner.classList.toggle('hidden', message === null);
}

function render(): void {
  showBanner(consoleState.banner);
  $('#currency-note').textContent = currencyNote(currency, bundle.fx_brl_per_usd);
  const host = $('#routes');
  host.innerHTML = '';
  for (const route of activeRoutes(panel)) {
    const slot = consoleState.slots[route];
    if (!slot.lastGood) continue;
    const vm = buildRouteViewModel(slot.lastGood, bundle, currency, slot.stale);
    const card = document.createElement('section');
    card.className = `route-card${vm.stale ? ' stale' : ''}`;
    card.innerHTML = `
      <h2>${route.toUpperCase()}${vm.presetName ? ` - ${vm.presetName}` : ''}
        ${vm.stale ? '<span class="stale-tag">updating...</span>' : ''}</h2>
      <div class="figures">
        <div><dt>max CAPEX at NPV=0</dt><dd>${fmtMoney(vm.maxCapex)}</dd></div>
        <div><dt>net margin /kg</dt><dd>${vm.netMargin.toFixed(4)}</dd></div>
        <div><dt>contribution /kg</dt><dd>${vm.contributionMargin.toFixed(4)}</dd></div>
        <div><dt>CBIOs /y</dt><dd>${Math.round(vm.cbiosPerYear).toLocaleString('en-US')}</dd></div>
      </div>
      <h3>margin waterfall</h3>
      <div class="chart waterfall">${waterfallSvg(vm.waterfall)}</div>
      <h3>max CAPEX vs published references</h3>
      <div class="chart gauge">${gaugeSvg(vm.gauge.value, vm.gauge.references)}</div>
    `;
    host.append(card);
  }
}

function renderDemand(): void {
  $('#demand-chart').innerHTML = demandSvg(
    demandLower.map((r) => r.year),
    demandLower.map((r) => r.volume_kt),
    demandHigher.map((r) => r.volume_kt),
  );
}

boot().catch((error) => showBanner(`service unreachable: ${String(error)}`));
