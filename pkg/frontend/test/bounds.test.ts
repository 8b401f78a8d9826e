// Slider bounds must equal the bounds the service publishes, field for field.

import { describe, expect, it } from 'vitest';

import { LEVER_ORDER, panelConfig } from '../src/state.js';
import { bundle } from './fixtures.js';

describe('lever panel bounds', () => {
  it('slider configs equal GET /v1/bundle lever_bounds exactly', () => {
    const configs = panelConfig(bundle);
    expect(configs.map((c) => c.lever)).toEqual([...LEVER_ORDER]);
    for (const config of configs) {
      const published = bundle.lever_bounds[config.lever];
      expect(config.min).toBe(published.min);
      expect(config.max).toBe(published.max);
      expect(config.step).toBe(published.step);
    }
  });

  it('published bounds cover the scenario presets', () => {
    for (const preset of Object.values(bundle.scenario_presets)) {
      for (const config of panelConfig(bundle)) {
        const value = preset[config.lever];
        expect(value).toBeGreaterThanOrEqual(config.min);
        if (config.max !== undefined) {
          expect(value).toBeLessThanOrEqual(config.max);
        }
      }
    }
  });

  it('a bundle missing a lever bound is rejected', () => {
    const broken = {
      ...bundle,
      lever_bounds: { tax_discount: bundle.lever_bounds.tax_discount },
    };
    expect(() => panelConfig(broken)).toThrowError(/carbon_price/);
  });
});
