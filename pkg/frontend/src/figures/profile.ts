/**
 * Residual occupation against the dispersive coupling on log-log axes.
 * Unstable sweep points arrive masked (empty cells) and show up as gaps;
 * the weak-coupling prediction is overlaid dashed when the file has it,
 * along with the per-source contributions.
 */

import { columnValues, InputError, loadTable, num, requireColumns } from "../csv.js";
import { FigureRecipe } from "../recipe.js";
import { SvgDocument, fmt } from "../svg.js";
import { logScale, logTicks } from "../scale.js";
import { axisTitles, figureTitle, FONT, frame, xAxis, yAxis, PlotArea } from "../axes.js";

const WIDTH = 640;
const HEIGHT = 440;
const AREA: PlotArea = { x0: 76, y0: 46, x1: 600, y1: 380 };

const OVERLAYS = [
  { column: "n0_qnoise", label: "weak-coupling prediction", stroke: "#d62728", width: 1.4, dash: "6 3" },
  { column: "n0_drive", label: "drive noise", stroke: "#888888", width: 1.0, dash: "2 3" },
  { column: "n0_local", label: "local bath", stroke: "#2ca02c", width: 1.0, dash: "2 3" },
  { column: "n0_ancilla", label: "ancilla bath", stroke: "#9467bd", width: 1.0, dash: "2 3" },
] as const;

export function renderProfile(recipe: FigureRecipe): string {
  const table = loadTable(recipe.input);
  requireColumns(table, [recipe.xColumn, recipe.valueColumn]);

  const order = table.rows
    .map((row, k) => ({ k, x: num(row, recipe.xColumn) }))
    .sort((a, b) => a.x - b.x);
  const xs = order.map((o) => o.x);
  if (xs.some((x) => !(x > 0))) {
    throw new InputError(`column ${recipe.xColumn} must be positive for a log axis`);
  }

  const present = OVERLAYS.filter(
    (o) => o.column !== recipe.valueColumn && table.columns.includes(o.column),
  );
  const seriesValues = new Map<string, number[]>();
  seriesValues.set(recipe.valueColumn, order.map((o) => num(table.rows[o.k]!, recipe.valueColumn)));
  for (const o of present) {
    seriesValues.set(o.column, order.map((r) => num(table.rows[r.k]!, o.column)));
  }

  const positives = [...seriesValues.values()].flat().filter((v) => Number.isFinite(v) && v > 0);
  if (positives.length === 0) {
    throw new InputError(`column ${recipe.valueColumn} has no positive values to plot`);
  }
  const lo = 10 ** Math.floor(Math.log10(Math.min(...positives)));
  let hi = 10 ** Math.ceil(Math.log10(Math.max(...positives)) - 1e-12);
  if (hi === lo) hi = lo * 10;

  const sx = logScale([xs[0]!, xs[xs.length - 1]!], [AREA.x0, AREA.x1]);
  const sy = logScale([lo, hi], [AREA.y1, AREA.y0]);

  const doc = new SvgDocument(WIDTH, HEIGHT);
  doc.root.leaf("rect", { x: 0, y: 0, width: WIDTH, height: HEIGHT, fill: "#ffffff" });
  const plot = doc.root.child("g", {});

  const pathFor = (values: number[]): string => {
    const parts: string[] = [];
    let open = false;
    for (let k = 0; k < xs.length; k++) {
      const v = values[k]!;
      if (!Number.isFinite(v) || v <= 0) {
        open = false; // masked or unplottable point breaks the line
        continue;
      }
      parts.push(`${open ? "L" : "M"}${fmt(sx(xs[k]!))} ${fmt(sy(v))}`);
      open = true;
    }
    return parts.join("");
  };

  for (const o of present) {
    const d = pathFor(seriesValues.get(o.column)!);
    if (!d) continue;
    plot.leaf("path", {
      d, fill: "none", stroke: o.stroke, "stroke-width": o.width,
      "stroke-dasharray": o.dash, "data-series": o.column,
    });
  }
  const main = seriesValues.get(recipe.valueColumn)!;
  const mainPath = pathFor(main);
  if (mainPath) {
    plot.leaf("path", {
      d: mainPath, fill: "none", stroke: "#1a1a1a", "stroke-width": 1.8,
      "data-series": recipe.valueColumn,
    });
  }
  for (let k = 0; k < xs.length; k++) {
    const v = main[k]!;
    if (!Number.isFinite(v) || v <= 0) continue;
    plot.leaf("circle", {
      cx: sx(xs[k]!), cy: sy(v), r: 2.4, fill: "#1a1a1a", "data-series": recipe.valueColumn,
    });
  }

  const axes = doc.root.child("g", {});
  frame(axes, AREA);
  xAxis(axes, AREA, sx, logTicks(sx.domain[0], sx.domain[1]));
  yAxis(axes, AREA, sy, logTicks(lo, hi));
  axisTitles(axes, AREA, recipe.xLabel, recipe.yLabel);
  figureTitle(axes, AREA, recipe.title);

  if (present.length > 0) {
    const legend = doc.root.child("g", { "data-role": "legend" });
    let y = AREA.y0 + 18;
    const x = AREA.x0 + 14;
    legend.leaf("line", {
      x1: x, y1: y - 4, x2: x + 26, y2: y - 4, stroke: "#1a1a1a", "stroke-width": 1.8,
    });
    legend.text("steady state", {
      x: x + 32, y, "font-family": FONT, "font-size": 11, fill: "#333333",
    });
    y += 16;
    for (const o of present) {
      legend.leaf("line", {
        x1: x, y1: y - 4, x2: x + 26, y2: y - 4,
        stroke: o.stroke, "stroke-width": o.width, "stroke-dasharray": o.dash,
      });
      legend.text(o.label, {
        x: x + 32, y, "font-family": FONT, "font-size": 11, fill: "#333333",
      });
      y += 16;
    }
  }

  return doc.serialize();
}
