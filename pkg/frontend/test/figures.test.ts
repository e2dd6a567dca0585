import { readFileSync } from "node:fs";
import { join } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";
import { InputError, loadTable } from "../src/csv.js";
import { assembleGrid } from "../src/grid.js";
import { isoRings, pointInRings } from "../src/contour.js";
import { buildRecipe } from "../src/recipe.js";
import { renderFigure } from "../src/render.js";

const DATA = fileURLToPath(new URL("../testdata", import.meta.url));
const SWEEP = join(DATA, "fig6_sweep.csv");
const SPECTRUM = join(DATA, "fig3_spectrum.csv");
const PROFILE = join(DATA, "fig5_profile.csv");

function count(haystack: string, needle: string): number {
  return haystack.split(needle).length - 1;
}

function heatmapRecipe(overrides: Record<string, unknown> = {}) {
  return buildRecipe({ kind: "heatmap", input: SWEEP, output: "unused.svg", ...overrides });
}

describe("heatmap figure", () => {
  const svg = renderFigure(heatmapRecipe());

  it("hatches exactly the masked sweep points", () => {
    const table = loadTable(SWEEP);
    const masked = table.rows.filter((r) => r["n0_qnoise"] === "").length;
    expect(masked).toBeGreaterThan(0);
    expect(count(svg, 'data-role="masked-cell"')).toBe(masked);
  });

  it("draws contours for both default levels", () => {
    expect(count(svg, 'data-level="0.05"')).toBeGreaterThanOrEqual(1);
    expect(count(svg, 'data-level="0.1"')).toBeGreaterThanOrEqual(1);
  });

  it("marks half the mechanical frequency on the detuning axis", () => {
    expect(count(svg, 'data-role="detuning-marker"')).toBe(1);
    const off = renderFigure(heatmapRecipe({ detuningMarker: false }));
    expect(count(off, 'data-role="detuning-marker"')).toBe(0);
  });

  it("encloses the below-threshold cells of the real sweep", () => {
    const grid = assembleGrid(loadTable(SWEEP), "delta", "g1as", "n0_qnoise");
    for (const level of [0.05, 0.1]) {
      const rings = isoRings(grid.values, level);
      expect(rings.length).toBeGreaterThan(0);
      let below = 0;
      for (let j = 0; j + 1 < grid.ys.length; j++) {
        for (let i = 0; i + 1 < grid.xs.length; i++) {
          const corners = [
            grid.values[j]![i]!, grid.values[j]![i + 1]!,
            grid.values[j + 1]![i]!, grid.values[j + 1]![i + 1]!,
          ];
          if (corners.every((v) => v < level)) {
            below += 1;
            expect(pointInRings(rings, i + 0.5, j + 0.5)).toBe(true);
          }
        }
      }
      expect(below).toBeGreaterThan(0);
    }
  });

  it("renders byte-identically", () => {
    expect(renderFigure(heatmapRecipe())).toBe(svg);
  });

  it("does not modify its input", () => {
    const before = readFileSync(SWEEP);
    renderFigure(heatmapRecipe());
    expect(readFileSync(SWEEP).equals(before)).toBe(true);
  });

  it("can color a different column", () => {
    const exact = renderFigure(heatmapRecipe({ valueColumn: "n0" }));
    expect(exact).not.toBe(svg);
    expect(count(exact, 'data-role="masked-cell"')).toBe(count(svg, 'data-role="masked-cell"'));
  });

  it("refuses a spectrum file: no grid columns", () => {
    expect(() => renderFigure(heatmapRecipe({ input: SPECTRUM }))).toThrowError(InputError);
    expect(() => renderFigure(heatmapRecipe({ input: SPECTRUM }))).toThrowError(
      /missing required column\(s\).*delta, g1as, n0_qnoise, omega0/,
    );
  });
});

describe("spectrum figure", () => {
  const svg = renderFigure(
    buildRecipe({ kind: "spectrum", input: SPECTRUM, output: "unused.svg" }),
  );

  it("draws two panels", () => {
    expect(count(svg, 'data-role="panel"')).toBe(2);
  });

  it("overlays all four series in each panel", () => {
    for (const series of ["gnn_full", "gnn_bare", "gnn_optical_part", "gnn_thermal_part"]) {
      expect(count(svg, `data-series="${series}"`)).toBe(2);
    }
  });

  it("dashes the split-source overlays", () => {
    const optical = svg.indexOf('data-series="gnn_optical_part"');
    const pathStart = svg.lastIndexOf("<path", optical);
    const pathEnd = svg.indexOf("/>", optical);
    const tag = svg.slice(pathStart, pathEnd);
    expect(tag).toContain('stroke-dasharray="6 3"');
  });

  it("renders byte-identically", () => {
    const again = renderFigure(
      buildRecipe({ kind: "spectrum", input: SPECTRUM, output: "unused.svg" }),
    );
    expect(again).toBe(svg);
  });
});

describe("profile figure", () => {
  const svg = renderFigure(
    buildRecipe({ kind: "g0-profile", input: PROFILE, output: "unused.svg" }),
  );

  it("marks one point per stable sweep row", () => {
    const table = loadTable(PROFILE);
    const stable = table.rows.filter((r) => r["stable"] === "true").length;
    expect(stable).toBeGreaterThan(0);
    expect(count(svg, "<circle ")).toBe(stable);
  });

  it("overlays the weak-coupling prediction dashed", () => {
    expect(count(svg, 'data-series="n0_qnoise"')).toBe(1);
  });

  it("keeps the steady-state curve above the overlays in paint order", () => {
    const main = svg.indexOf('data-series="n0"');
    const overlay = svg.indexOf('data-series="n0_qnoise"');
    expect(main).toBeGreaterThan(overlay);
  });
});
