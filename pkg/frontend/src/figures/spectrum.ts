/**
 * Two-panel force-noise spectrum, windowed around the dominant peak at
 * positive frequency and its mirror at negative frequency. The asymmetry
 * between the panels is the whole point of the figure, so both share one
 * logarithmic value axis.
 */

import { InputError, loadTable, num, requireColumns } from "../csv.js";
import { FigureRecipe } from "../recipe.js";
import { SvgDocument, SvgElement, fmt } from "../svg.js";
import { linearScale, linearTicks, logScale, logTicks, Scale } from "../scale.js";
import { axisTitles, figureTitle, FONT, frame, xAxis, yAxis, PlotArea } from "../axes.js";

const WIDTH = 760;
const HEIGHT = 420;
const LEFT: PlotArea = { x0: 70, y0: 46, x1: 392, y1: 356 };
const RIGHT: PlotArea = { x0: 412, y0: 46, x1: 734, y1: 356 };

const SERIES = [
  { column: "gnn_bare", label: "bare", stroke: "#999999", width: 1.2, dash: "" },
  { column: "gnn_optical_part", label: "optical part", stroke: "#d62728", width: 1.4, dash: "6 3" },
  { column: "gnn_thermal_part", label: "thermal part", stroke: "#1f77b4", width: 1.4, dash: "2 3" },
  { column: "gnn_full", label: "full", stroke: "#1a1a1a", width: 1.8, dash: "" },
] as const;

interface Samples {
  omega: number[];
  series: Map<string, number[]>;
}

function segmentedPath(points: Array<{ x: number; y: number } | null>): string {
  const parts: string[] = [];
  let open = false;
  for (const p of points) {
    if (p === null) {
      open = false;
    } else {
      parts.push(`${open ? "L" : "M"}${fmt(p.x)} ${fmt(p.y)}`);
      open = true;
    }
  }
  return parts.join("");
}

function windowIndices(omega: number[], center: number, radius: number): number[] {
  const idx: number[] = [];
  for (let k = 0; k < omega.length; k++) {
    if (omega[k]! >= center - radius && omega[k]! <= center + radius) idx.push(k);
  }
  if (idx.length < 2) {
    throw new InputError(
      `too few spectrum samples within ${fmt(radius)} of frequency ${fmt(center)}`,
    );
  }
  return idx;
}

export function renderSpectrum(recipe: FigureRecipe): string {
  const table = loadTable(recipe.input);
  const columns = SERIES.map((s) => s.column);
  requireColumns(table, [recipe.xColumn, ...columns]);

  const order = table.rows
    .map((row, k) => ({ k, omega: num(row, recipe.xColumn) }))
    .sort((a, b) => a.omega - b.omega);
  const data: Samples = {
    omega: order.map((o) => o.omega),
    series: new Map(
      columns.map((c) => [c, order.map((o) => num(table.rows[o.k]!, c))]),
    ),
  };

  const full = data.series.get("gnn_full")!;
  let peakIdx = 0;
  for (let k = 1; k < full.length; k++) {
    if (full[k]! > full[peakIdx]!) peakIdx = k;
  }
  const peakOmega = Math.abs(data.omega[peakIdx]!);
  if (!(peakOmega > 0)) {
    throw new InputError("spectrum peak sits at zero frequency; cannot window the panels");
  }
  const radius = 0.2 * peakOmega;
  const windows = [
    { area: LEFT, center: -peakOmega, idx: windowIndices(data.omega, -peakOmega, radius) },
    { area: RIGHT, center: peakOmega, idx: windowIndices(data.omega, peakOmega, radius) },
  ];

  // shared log range over everything plotted in either window
  let hi = -Infinity;
  let loSeen = Infinity;
  for (const w of windows) {
    for (const col of columns) {
      const values = data.series.get(col)!;
      for (const k of w.idx) {
        const v = values[k]!;
        if (Number.isFinite(v) && v > 0) {
          if (v > hi) hi = v;
          if (v < loSeen) loSeen = v;
        }
      }
    }
  }
  if (!Number.isFinite(hi)) {
    throw new InputError("no positive spectrum values inside the panel windows");
  }
  // deep interference nulls can reach ~1e-17; clamp the axis, not the data file
  const lo = Math.max(loSeen, hi * 1e-10);
  const loDec = 10 ** Math.floor(Math.log10(lo));
  const hiDec = 10 ** Math.ceil(Math.log10(hi) - 1e-12);
  const sy = logScale([loDec, hiDec === loDec ? loDec * 10 : hiDec], [LEFT.y1, LEFT.y0]);
  const floor = sy.domain[0];

  const doc = new SvgDocument(WIDTH, HEIGHT);
  doc.root.leaf("rect", { x: 0, y: 0, width: WIDTH, height: HEIGHT, fill: "#ffffff" });

  for (const w of windows) {
    const panel = doc.root.child("g", { "data-role": "panel" });
    const sxp = linearScale([w.center - radius, w.center + radius], [w.area.x0, w.area.x1]);
    drawSeries(panel, w.idx, data, sxp, sy, floor);
    frame(panel, w.area);
    xAxis(panel, w.area, sxp, linearTicks(w.center - radius, w.center + radius, 4));
    yAxis(panel, w.area, sy, w.area === LEFT ? logTicks(sy.domain[0], sy.domain[1]) : []);
    panel.text(w.center < 0 ? "ω < 0" : "ω > 0", {
      x: (w.area.x0 + w.area.x1) / 2, y: w.area.y0 + 16,
      "text-anchor": "middle", "font-family": FONT, "font-size": 12, fill: "#555555",
    });
  }

  const whole: PlotArea = { x0: LEFT.x0, y0: LEFT.y0, x1: RIGHT.x1, y1: LEFT.y1 };
  const labels = doc.root.child("g", {});
  axisTitles(labels, { ...whole, x1: LEFT.x1 + 0 }, "", recipe.yLabel);
  axisTitles(labels, whole, recipe.xLabel, "");
  figureTitle(labels, whole, recipe.title);
  drawLegend(doc.root, RIGHT);

  return doc.serialize();
}

function drawSeries(
  panel: SvgElement,
  idx: number[],
  data: Samples,
  sxp: Scale,
  sy: Scale,
  floor: number,
): void {
  for (const spec of SERIES) {
    const values = data.series.get(spec.column)!;
    const points = idx.map((k) => {
      const v = values[k]!;
      if (!Number.isFinite(v) || v <= 0) return null;
      return { x: sxp(data.omega[k]!), y: sy(Math.max(v, floor)) };
    });
    const d = segmentedPath(points);
    if (!d) continue;
    const attrs: Record<string, string | number> = {
      d,
      fill: "none",
      stroke: spec.stroke,
      "stroke-width": spec.width,
      "data-series": spec.column,
    };
    if (spec.dash) attrs["stroke-dasharray"] = spec.dash;
    panel.leaf("path", attrs);
  }
}

function drawLegend(root: SvgElement, area: PlotArea): void {
  const x = area.x0 + 14;
  let y = area.y0 + 30;
  const legend = root.child("g", { "data-role": "legend" });
  for (const spec of SERIES) {
    const attrs: Record<string, string | number> = {
      x1: x, y1: y - 4, x2: x + 26, y2: y - 4,
      stroke: spec.stroke, "stroke-width": spec.width,
    };
    if (spec.dash) attrs["stroke-dasharray"] = spec.dash;
    legend.leaf("line", attrs);
    legend.text(spec.label, {
      x: x + 32, y: y,
      "font-family": FONT, "font-size": 11, fill: "#333333",
    });
    y += 16;
  }
}
