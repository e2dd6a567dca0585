#!/usr/bin/env node
/**
 * Figure renderer for the cooling solver's CSV outputs.
 *
 * A figure is described by a JSON recipe file, by flags, or both; flags
 * win over the file. Exit codes: 0 drawn, 2 bad input or usage.
 */

import { readFileSync } from "node:fs";
import { parseArgs } from "node:util";
import { pathToFileURL } from "node:url";
import { InputError } from "./csv.js";
import { buildRecipe, parseRecipeRaw, RecipeError, FIGURE_KINDS } from "./recipe.js";
import { renderToFile } from "./render.js";

const USAGE = `usage: dissipcool-render render [options]

Render an SVG figure from a solver CSV file.

options:
  --recipe FILE         JSON recipe; any flag below overrides its fields
  --kind KIND           ${FIGURE_KINDS.join(" | ")}
  --input FILE          input CSV path
  --output FILE         output SVG path
  --levels L1,L2        contour levels for heatmaps (default 0.05,0.1)
  --value-column NAME   column to color or plot
  --x-column NAME       abscissa column
  --y-column NAME       ordinate column (heatmap)
  --title TEXT          figure title
  --x-label TEXT        x axis label
  --y-label TEXT        y axis label
  --marker / --no-marker
                        force the half-frequency detuning marker on or off
  -h, --help            show this message
`;

const OPTIONS = {
  recipe: { type: "string" },
  kind: { type: "string" },
  input: { type: "string" },
  output: { type: "string" },
  levels: { type: "string" },
  title: { type: "string" },
  "x-label": { type: "string" },
  "y-label": { type: "string" },
  "x-column": { type: "string" },
  "y-column": { type: "string" },
  "value-column": { type: "string" },
  marker: { type: "boolean" },
  "no-marker": { type: "boolean" },
  help: { type: "boolean", short: "h" },
} as const;

function parseLevelsFlag(text: string): number[] {
  const parts = text.split(",").map((p) => p.trim()).filter((p) => p !== "");
  const levels = parts.map(Number);
  if (parts.length === 0 || levels.some((v) => Number.isNaN(v))) {
    throw new RecipeError(`--levels expects comma-separated numbers, got ${JSON.stringify(text)}`);
  }
  return levels;
}

function parseCommandLine(argv: string[]) {
  return parseArgs({ args: argv, options: OPTIONS, allowPositionals: true });
}

export function main(argv: string[]): number {
  let parsed: ReturnType<typeof parseCommandLine>;
  try {
    parsed = parseCommandLine(argv);
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n${USAGE}`);
    return 2;
  }
  const { values, positionals } = parsed;
  if (values.help) {
    process.stdout.write(USAGE);
    return 0;
  }
  if (positionals.length !== 1 || positionals[0] !== "render") {
    process.stderr.write(`error: expected the render subcommand\n${USAGE}`);
    return 2;
  }

  try {
    let raw: Record<string, unknown> = {};
    if (values.recipe !== undefined) {
      let text: string;
      try {
        text = readFileSync(values.recipe, "utf-8");
      } catch (err) {
        throw new RecipeError(`cannot read recipe ${values.recipe}: ${(err as Error).message}`);
      }
      raw = parseRecipeRaw(text, values.recipe);
    }
    if (values.kind !== undefined) raw["kind"] = values.kind;
    if (values.input !== undefined) raw["input"] = values.input;
    if (values.output !== undefined) raw["output"] = values.output;
    if (values.levels !== undefined) raw["levels"] = parseLevelsFlag(values.levels);
    if (values.title !== undefined) raw["title"] = values.title;
    if (values["x-label"] !== undefined) raw["xLabel"] = values["x-label"];
    if (values["y-label"] !== undefined) raw["yLabel"] = values["y-label"];
    if (values["x-column"] !== undefined) raw["xColumn"] = values["x-column"];
    if (values["y-column"] !== undefined) raw["yColumn"] = values["y-column"];
    if (values["value-column"] !== undefined) raw["valueColumn"] = values["value-column"];
    if (values.marker) raw["detuningMarker"] = true;
    if (values["no-marker"]) raw["detuningMarker"] = false;

    const recipe = buildRecipe(raw);
    renderToFile(recipe);
    process.stdout.write(`wrote ${recipe.output}\n`);
    return 0;
  } catch (err) {
    if (err instanceof InputError || err instanceof RecipeError) {
      process.stderr.write(`error: ${err.message}\n`);
      return 2;
    }
    throw err;
  }
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exit(main(process.argv.slice(2)));
}
