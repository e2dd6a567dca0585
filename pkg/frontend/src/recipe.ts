/**
 * Figure recipes: what to read, what kind of figure, where to write.
 *
 * A recipe file is a JSON object with these fields; the CLI can also
 * assemble one from flags. Column names default to the solver's CSV
 * headers but stay overridable so derived files keep working.
 */

export const FIGURE_KINDS = ["spectrum", "heatmap", "g0-profile"] as const;
export type FigureKind = (typeof FIGURE_KINDS)[number];

export class RecipeError extends Error {}

export interface FigureRecipe {
  kind: FigureKind;
  /** Input CSV path. */
  input: string;
  /** Output SVG path. */
  output: string;
  /** Threshold contour levels for heatmaps (all positive). */
  levels: number[];
  title: string;
  xLabel: string;
  yLabel: string;
  /** Swept columns (heatmap) or abscissa column (profile). */
  xColumn: string;
  yColumn: string;
  /** Which quantity to color / plot. */
  valueColumn: string;
  /** Heatmap only: draw the half-frequency detuning marker line. */
  detuningMarker: boolean;
}

const DEFAULTS: Record<FigureKind, Partial<FigureRecipe>> = {
  spectrum: {
    levels: [],
    xLabel: "frequency",
    yLabel: "photon-number noise",
    xColumn: "omega",
    yColumn: "",
    valueColumn: "gnn_full",
    detuningMarker: false,
  },
  heatmap: {
    levels: [0.05, 0.1],
    xLabel: "detuning",
    yLabel: "dissipative coupling",
    xColumn: "delta",
    yColumn: "g1as",
    valueColumn: "n0_qnoise",
    detuningMarker: true,
  },
  "g0-profile": {
    levels: [],
    xLabel: "dispersive coupling",
    yLabel: "steady phonon number",
    xColumn: "g0as",
    yColumn: "",
    valueColumn: "n0",
    detuningMarker: false,
  },
};

export function buildRecipe(raw: Record<string, unknown>): FigureRecipe {
  const kind = raw["kind"];
  if (typeof kind !== "string" || !(FIGURE_KINDS as readonly string[]).includes(kind)) {
    throw new RecipeError(
      `kind must be one of ${FIGURE_KINDS.join(", ")}, got ${JSON.stringify(kind)}`,
    );
  }
  const defaults = DEFAULTS[kind as FigureKind];
  const str = (name: string, fallback: string): string => {
    const v = raw[name];
    if (v === undefined) return fallback;
    if (typeof v !== "string") throw new RecipeError(`${name} must be a string`);
    return v;
  };
  const input = str("input", "");
  const output = str("output", "");
  if (!input) throw new RecipeError("input CSV path is required");
  if (!output) throw new RecipeError("output image path is required");

  let levels = defaults.levels ?? [];
  if (raw["levels"] !== undefined) {
    const v = raw["levels"];
    if (!Array.isArray(v) || !v.every((x) => typeof x === "number" && Number.isFinite(x))) {
      throw new RecipeError("levels must be an array of numbers");
    }
    levels = v as number[];
  }
  if (levels.some((lv) => lv <= 0)) {
    throw new RecipeError("contour levels must be positive");
  }

  const marker = raw["detuningMarker"];
  if (marker !== undefined && typeof marker !== "boolean") {
    throw new RecipeError("detuningMarker must be a boolean");
  }

  return {
    kind: kind as FigureKind,
    input,
    output,
    levels: [...levels].sort((a, b) => a - b),
    title: str("title", ""),
    xLabel: str("xLabel", defaults.xLabel ?? ""),
    yLabel: str("yLabel", defaults.yLabel ?? ""),
    xColumn: str("xColumn", defaults.xColumn ?? ""),
    yColumn: str("yColumn", defaults.yColumn ?? ""),
    valueColumn: str("valueColumn", defaults.valueColumn ?? ""),
    detuningMarker: marker === undefined ? (defaults.detuningMarker ?? false) : marker,
  };
}

/** Raw recipe object from JSON text; validation happens in buildRecipe. */
export function parseRecipeRaw(text: string, source: string): Record<string, unknown> {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (err) {
    throw new RecipeError(`recipe ${source} is not valid JSON: ${(err as Error).message}`);
  }
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new RecipeError(`recipe ${source} must be a JSON object`);
  }
  return raw as Record<string, unknown>;
}
