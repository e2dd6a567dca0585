/**
 * Sweep heatmap: a quantity over a 2-D parameter grid, colored on a log
 * scale, with masked (unstable) cells hatched, iso-level contours of the
 * region below each threshold, and a vertical marker at half the
 * mechanical frequency where sideband cooling is strongest.
 */

import { InputError, loadTable } from "../csv.js";
import { assembleGrid, constantColumn } from "../grid.js";
import { requireColumns } from "../csv.js";
import { isoRings, Ring } from "../contour.js";
import { FigureRecipe } from "../recipe.js";
import { SvgDocument, pathData } from "../svg.js";
import { linearScale, linearTicks, logColor, logTicks, rampColor, tickLabel } from "../scale.js";
import { axisTitles, figureTitle, FONT, frame, xAxis, yAxis, PlotArea } from "../axes.js";

const WIDTH = 640;
const HEIGHT = 480;
const AREA: PlotArea = { x0: 70, y0: 46, x1: 500, y1: 420 };

/** Cell boundaries around grid nodes; end cells extend half a spacing. */
function cellEdges(nodes: number[]): number[] {
  const n = nodes.length;
  const edges = [nodes[0]! - (nodes[1]! - nodes[0]!) / 2];
  for (let k = 0; k + 1 < n; k++) edges.push((nodes[k]! + nodes[k + 1]!) / 2);
  edges.push(nodes[n - 1]! + (nodes[n - 1]! - nodes[n - 2]!) / 2);
  return edges;
}

/** Data coordinate of a fractional grid index (contours live in index space). */
function fracCoord(nodes: number[], t: number): number {
  const k = Math.min(nodes.length - 2, Math.max(0, Math.floor(t)));
  return nodes[k]! + (t - k) * (nodes[k + 1]! - nodes[k]!);
}

export function renderHeatmap(recipe: FigureRecipe): string {
  const table = loadTable(recipe.input);
  const needed = [recipe.xColumn, recipe.yColumn, recipe.valueColumn];
  if (recipe.detuningMarker) needed.push("omega0");
  requireColumns(table, needed);
  const grid = assembleGrid(table, recipe.xColumn, recipe.yColumn, recipe.valueColumn);

  const finite = grid.values.flat().filter((v) => Number.isFinite(v) && v > 0);
  if (finite.length === 0) {
    throw new InputError(`column ${recipe.valueColumn} has no positive finite values to color`);
  }
  let lo = Math.min(...finite);
  let hi = Math.max(...finite);
  if (lo === hi) hi = lo * 10; // degenerate range; keep the log scale usable

  const xEdges = cellEdges(grid.xs);
  const yEdges = cellEdges(grid.ys);
  const sx = linearScale([xEdges[0]!, xEdges[xEdges.length - 1]!], [AREA.x0, AREA.x1]);
  const sy = linearScale([yEdges[0]!, yEdges[yEdges.length - 1]!], [AREA.y1, AREA.y0]);

  const doc = new SvgDocument(WIDTH, HEIGHT);
  const defs = doc.root.child("defs", {});
  const pattern = defs.child("pattern", {
    id: "masked-hatch",
    width: 6,
    height: 6,
    patternUnits: "userSpaceOnUse",
    patternTransform: "rotate(45)",
  });
  pattern.leaf("rect", { x: 0, y: 0, width: 6, height: 6, fill: "#d9d9d9" });
  pattern.leaf("line", { x1: 0, y1: 0, x2: 0, y2: 6, stroke: "#777777", "stroke-width": 2 });

  doc.root.leaf("rect", { x: 0, y: 0, width: WIDTH, height: HEIGHT, fill: "#ffffff" });

  const cells = doc.root.child("g", { "shape-rendering": "crispEdges" });
  for (let j = 0; j < grid.ys.length; j++) {
    for (let i = 0; i < grid.xs.length; i++) {
      const v = grid.values[j]![i]!;
      const px = sx(xEdges[i]!);
      const py = sy(yEdges[j + 1]!);
      const attrs = {
        x: px,
        y: py,
        width: sx(xEdges[i + 1]!) - px,
        height: sy(yEdges[j]!) - py,
        fill: Number.isNaN(v) ? "url(#masked-hatch)" : logColor(v, lo, hi),
      };
      if (Number.isNaN(v)) {
        cells.leaf("rect", { ...attrs, "data-role": "masked-cell" });
      } else {
        cells.leaf("rect", attrs);
      }
    }
  }

  // iso-level rings come back in fractional index space
  const toPixels = (ring: Ring): Array<{ x: number; y: number }> =>
    ring.map((p) => ({ x: sx(fracCoord(grid.xs, p.x)), y: sy(fracCoord(grid.ys, p.y)) }));
  const contours = doc.root.child("g", { fill: "none", stroke: "#ffffff" });
  recipe.levels.forEach((level, rank) => {
    for (const ring of isoRings(grid.values, level)) {
      if (ring.length < 2) continue;
      const first = ring[0]!;
      const last = ring[ring.length - 1]!;
      const closed = ring.length > 2 && first.x === last.x && first.y === last.y;
      const points = toPixels(closed ? ring.slice(0, -1) : ring);
      const attrs: Record<string, string | number> = {
        d: pathData(points, closed),
        "stroke-width": 1.6,
        "data-level": String(level),
      };
      if (rank > 0) attrs["stroke-dasharray"] = "5 3";
      contours.leaf("path", attrs);
    }
  });

  if (recipe.detuningMarker) {
    const markerX = constantColumn(table, "omega0") / 2;
    if (markerX >= xEdges[0]! && markerX <= xEdges[xEdges.length - 1]!) {
      doc.root.leaf("line", {
        x1: sx(markerX), y1: AREA.y0, x2: sx(markerX), y2: AREA.y1,
        stroke: "#ff4444", "stroke-width": 1.4, "stroke-dasharray": "6 4",
        "data-role": "detuning-marker",
      });
    }
  }

  const axes = doc.root.child("g", {});
  frame(axes, AREA);
  xAxis(axes, AREA, sx, linearTicks(grid.xs[0]!, grid.xs[grid.xs.length - 1]!));
  yAxis(axes, AREA, sy, linearTicks(grid.ys[0]!, grid.ys[grid.ys.length - 1]!));
  axisTitles(axes, AREA, recipe.xLabel, recipe.yLabel);
  figureTitle(axes, AREA, recipe.title);

  drawColorbar(doc, lo, hi, recipe.levels);
  return doc.serialize();
}

function drawColorbar(doc: SvgDocument, lo: number, hi: number, levels: number[]): void {
  const barX = AREA.x1 + 26;
  const barW = 16;
  const slabs = 64;
  const scale = linearScale([0, slabs], [AREA.y1, AREA.y0]);
  const bar = doc.root.child("g", { "shape-rendering": "crispEdges" });
  for (let k = 0; k < slabs; k++) {
    const yTop = scale(k + 1);
    bar.leaf("rect", {
      x: barX, y: yTop, width: barW, height: scale(k) - yTop,
      fill: rampColor((k + 0.5) / slabs),
    });
  }
  bar.leaf("rect", {
    x: barX, y: AREA.y0, width: barW, height: AREA.y1 - AREA.y0,
    fill: "none", stroke: "#333333", "stroke-width": 1,
  });
  const logPos = (v: number): number =>
    AREA.y1 - ((Math.log10(v) - Math.log10(lo)) / (Math.log10(hi) - Math.log10(lo))) * (AREA.y1 - AREA.y0);
  for (const tick of logTicks(lo, hi)) {
    const py = logPos(tick);
    bar.leaf("line", {
      x1: barX + barW, y1: py, x2: barX + barW + 4, y2: py,
      stroke: "#333333", "stroke-width": 1,
    });
    bar.text(tickLabel(tick), {
      x: barX + barW + 7, y: py + 4,
      "font-family": FONT, "font-size": 11, fill: "#333333",
    });
  }
  for (const level of levels) {
    if (level < lo || level > hi) continue;
    const py = logPos(level);
    bar.leaf("line", {
      x1: barX, y1: py, x2: barX + barW, y2: py,
      stroke: "#ffffff", "stroke-width": 1.6, "data-role": "colorbar-level",
    });
  }
}
