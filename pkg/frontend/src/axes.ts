/**
 * Shared axis/frame drawing for the figure modules.
 *
 * Everything funnels through SvgElement so tick placement and label
 * formatting stay deterministic across renders.
 */

import { Scale, tickLabel } from "./scale.js";
import { SvgElement } from "./svg.js";

export interface PlotArea {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export const FONT = "sans-serif";
const AXIS_COLOR = "#333333";

export function frame(g: SvgElement, area: PlotArea): void {
  g.leaf("rect", {
    x: area.x0,
    y: area.y0,
    width: area.x1 - area.x0,
    height: area.y1 - area.y0,
    fill: "none",
    stroke: AXIS_COLOR,
    "stroke-width": 1,
  });
}

export function xAxis(g: SvgElement, area: PlotArea, scale: Scale, ticks: number[]): void {
  for (const t of ticks) {
    const px = scale(t);
    if (px < area.x0 - 0.5 || px > area.x1 + 0.5) continue;
    g.leaf("line", {
      x1: px, y1: area.y1, x2: px, y2: area.y1 + 5,
      stroke: AXIS_COLOR, "stroke-width": 1,
    });
    g.text(tickLabel(t), {
      x: px, y: area.y1 + 18,
      "text-anchor": "middle", "font-family": FONT, "font-size": 11, fill: AXIS_COLOR,
    });
  }
}

export function yAxis(g: SvgElement, area: PlotArea, scale: Scale, ticks: number[]): void {
  for (const t of ticks) {
    const py = scale(t);
    if (py < area.y0 - 0.5 || py > area.y1 + 0.5) continue;
    g.leaf("line", {
      x1: area.x0 - 5, y1: py, x2: area.x0, y2: py,
      stroke: AXIS_COLOR, "stroke-width": 1,
    });
    g.text(tickLabel(t), {
      x: area.x0 - 8, y: py + 4,
      "text-anchor": "end", "font-family": FONT, "font-size": 11, fill: AXIS_COLOR,
    });
  }
}

export function axisTitles(
  g: SvgElement,
  area: PlotArea,
  xLabel: string,
  yLabel: string,
): void {
  const cx = (area.x0 + area.x1) / 2;
  const cy = (area.y0 + area.y1) / 2;
  if (xLabel) {
    g.text(xLabel, {
      x: cx, y: area.y1 + 38,
      "text-anchor": "middle", "font-family": FONT, "font-size": 13, fill: AXIS_COLOR,
    });
  }
  if (yLabel) {
    g.text(yLabel, {
      x: area.x0 - 44, y: cy,
      transform: `rotate(-90 ${area.x0 - 44} ${cy})`,
      "text-anchor": "middle", "font-family": FONT, "font-size": 13, fill: AXIS_COLOR,
    });
  }
}

export function figureTitle(g: SvgElement, area: PlotArea, text: string): void {
  if (!text) return;
  g.text(text, {
    x: (area.x0 + area.x1) / 2, y: area.y0 - 12,
    "text-anchor": "middle", "font-family": FONT, "font-size": 15, fill: AXIS_COLOR,
  });
}
