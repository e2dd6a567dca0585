/**
 * Axis scales, tick selection, and the sequential colormap.
 *
 * Phonon-number heatmaps span two to three decades, so the color scale is
 * logarithmic by default; spectra and profiles use log axes where the data
 * are positive.
 */

export interface Scale {
  (value: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0;
  const fn = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  fn.range = range;
  return fn;
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  if (d0 <= 0 || d1 <= 0) throw new Error(`log scale needs a positive domain, got [${d0}, ${d1}]`);
  const l0 = Math.log10(d0);
  const span = Math.log10(d1) - l0;
  const [r0, r1] = range;
  const fn = ((value: number) => r0 + ((Math.log10(value) - l0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  fn.range = range;
  return fn;
}

/** Round-numbered ticks covering the domain, about `count` of them. */
export function linearTicks(lo: number, hi: number, count = 6): number[] {
  const rawStep = (hi - lo) / Math.max(1, count);
  const mag = 10 ** Math.floor(Math.log10(rawStep));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => (hi - lo) / s <= count) ?? mag * 10;
  const first = Math.ceil(lo / step) * step;
  const ticks: number[] = [];
  for (let v = first; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : Number(v.toPrecision(12)));
  }
  return ticks;
}

/** Decade ticks (powers of ten) inside the domain. */
export function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.ceil(Math.log10(lo) - 1e-9); 10 ** e <= hi * (1 + 1e-9); e++) {
    ticks.push(10 ** e);
  }
  return ticks;
}

export function tickLabel(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 0.001 && abs < 10000) {
    return String(Number(value.toPrecision(6)));
  }
  const e = Math.floor(Math.log10(abs));
  const mantissa = Number((value / 10 ** e).toPrecision(3));
  return mantissa === 1 ? `1e${e}` : `${mantissa}e${e}`;
}

// dark-blue -> teal -> green -> yellow sequential ramp (perceptual-ish,
// fixed byte constants so output never depends on a library version)
const RAMP: Array<[number, number, number]> = [
  [68, 1, 84],
  [71, 44, 122],
  [59, 81, 139],
  [44, 113, 142],
  [33, 144, 141],
  [39, 173, 129],
  [92, 200, 99],
  [170, 220, 50],
  [253, 231, 37],
];

/** Map t in [0,1] onto the ramp; clamps outside. */
export function rampColor(t: number): string {
  const clamped = Math.min(1, Math.max(0, t));
  const pos = clamped * (RAMP.length - 1);
  const k = Math.min(RAMP.length - 2, Math.floor(pos));
  const frac = pos - k;
  const a = RAMP[k]!;
  const b = RAMP[k + 1]!;
  const mix = (i: number): number => Math.round(a[i]! + frac * (b[i]! - a[i]!));
  const hex = (v: number): string => v.toString(16).padStart(2, "0");
  return `#${hex(mix(0))}${hex(mix(1))}${hex(mix(2))}`;
}

/** Log-scaled color for a positive value over [lo, hi]. */
export function logColor(value: number, lo: number, hi: number): string {
  const t = (Math.log10(value) - Math.log10(lo)) / (Math.log10(hi) - Math.log10(lo));
  return rampColor(t);
}
