/**
 * Recipe dispatch. The SVG text is built completely before the output
 * file is opened, so a bad input never leaves a truncated image behind.
 */

import { mkdirSync, writeFileSync } from "node:fs";
import { dirname } from "node:path";
import { FigureRecipe } from "./recipe.js";
import { renderHeatmap } from "./figures/heatmap.js";
import { renderSpectrum } from "./figures/spectrum.js";
import { renderProfile } from "./figures/profile.js";

export function renderFigure(recipe: FigureRecipe): string {
  switch (recipe.kind) {
    case "heatmap":
      return renderHeatmap(recipe);
    case "spectrum":
      return renderSpectrum(recipe);
    case "g0-profile":
      return renderProfile(recipe);
  }
}

export function renderToFile(recipe: FigureRecipe): void {
  const svg = renderFigure(recipe);
  mkdirSync(dirname(recipe.output), { recursive: true });
  writeFileSync(recipe.output, svg, "utf-8");
}
