import { existsSync, mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";
import { main } from "../src/cli.js";

const DATA = fileURLToPath(new URL("../testdata", import.meta.url));
const SWEEP = join(DATA, "fig6_sweep.csv");
const SPECTRUM = join(DATA, "fig3_spectrum.csv");

let dir: string;
let stdout: string[];
let stderr: string[];

beforeEach(() => {
  dir = mkdtempSync(join(tmpdir(), "cli-test-"));
  stdout = [];
  stderr = [];
  vi.spyOn(process.stdout, "write").mockImplementation((chunk) => {
    stdout.push(String(chunk));
    return true;
  });
  vi.spyOn(process.stderr, "write").mockImplementation((chunk) => {
    stderr.push(String(chunk));
    return true;
  });
});

afterEach(() => {
  vi.restoreAllMocks();
  rmSync(dir, { recursive: true, force: true });
});

describe("render subcommand", () => {
  it("renders from a recipe file", () => {
    const out = join(dir, "fig.svg");
    const recipe = join(dir, "recipe.json");
    writeFileSync(recipe, JSON.stringify({ kind: "heatmap", input: SWEEP, output: out }));
    expect(main(["render", "--recipe", recipe])).toBe(0);
    expect(stdout.join("")).toContain(`wrote ${out}`);
    const svg = readFileSync(out, "utf-8");
    expect(svg.startsWith('<?xml version="1.0"')).toBe(true);
    expect(svg).toContain("</svg>");
  });

  it("lets flags override recipe fields", () => {
    const outA = join(dir, "a.svg");
    const outB = join(dir, "b.svg");
    const recipe = join(dir, "recipe.json");
    writeFileSync(
      recipe,
      JSON.stringify({ kind: "heatmap", input: SWEEP, output: outA, valueColumn: "n0_qnoise" }),
    );
    expect(main(["render", "--recipe", recipe])).toBe(0);
    expect(main(["render", "--recipe", recipe, "--output", outB, "--value-column", "n0"])).toBe(0);
    expect(readFileSync(outA, "utf-8")).not.toBe(readFileSync(outB, "utf-8"));
  });

  it("works from flags alone", () => {
    const out = join(dir, "spec.svg");
    const code = main([
      "render", "--kind", "spectrum", "--input", SPECTRUM, "--output", out,
      "--title", "noise spectrum", "--y-label", "S[omega]",
    ]);
    expect(code).toBe(0);
    expect(readFileSync(out, "utf-8")).toContain("noise spectrum");
  });

  it("reports missing columns by name and writes nothing", () => {
    const out = join(dir, "bad.svg");
    const code = main(["render", "--kind", "heatmap", "--input", SPECTRUM, "--output", out]);
    expect(code).toBe(2);
    expect(stderr.join("")).toMatch(/error: missing required column\(s\).*delta, g1as, n0_qnoise, omega0/);
    expect(existsSync(out)).toBe(false);
  });

  it("rejects a header-only CSV and writes nothing", () => {
    const csv = join(dir, "empty.csv");
    writeFileSync(csv, "delta,g1as,n0_qnoise,omega0\n");
    const out = join(dir, "empty.svg");
    const code = main(["render", "--kind", "heatmap", "--input", csv, "--output", out]);
    expect(code).toBe(2);
    expect(stderr.join("")).toMatch(/no data rows/);
    expect(existsSync(out)).toBe(false);
  });

  it("rejects unknown flags with usage help", () => {
    expect(main(["render", "--frobnicate"])).toBe(2);
    expect(stderr.join("")).toContain("usage: dissipcool-render");
  });

  it("requires the render subcommand", () => {
    expect(main([])).toBe(2);
    expect(stderr.join("")).toContain("expected the render subcommand");
  });

  it("prints usage on --help", () => {
    expect(main(["--help"])).toBe(0);
    expect(stdout.join("")).toContain("usage: dissipcool-render");
  });

  it("rejects a malformed recipe file", () => {
    const recipe = join(dir, "broken.json");
    writeFileSync(recipe, "{ not json");
    expect(main(["render", "--recipe", recipe])).toBe(2);
    expect(stderr.join("")).toMatch(/error: recipe .*not valid JSON/);
  });

  it("rejects a missing recipe file", () => {
    expect(main(["render", "--recipe", join(dir, "absent.json")])).toBe(2);
    expect(stderr.join("")).toMatch(/error: cannot read recipe/);
  });

  it("rejects bad level lists", () => {
    const base = ["render", "--kind", "heatmap", "--input", SWEEP, "--output", join(dir, "x.svg")];
    expect(main([...base, "--levels", "0.05,abc"])).toBe(2);
    expect(stderr.join("")).toMatch(/--levels expects comma-separated numbers/);
    expect(main([...base, "--levels=-0.1"])).toBe(2);
    expect(stderr.join("")).toMatch(/levels must be positive/);
  });

  it("rejects an unknown figure kind", () => {
    const code = main([
      "render", "--kind", "pie", "--input", SWEEP, "--output", join(dir, "pie.svg"),
    ]);
    expect(code).toBe(2);
    expect(stderr.join("")).toMatch(/kind must be one of spectrum, heatmap, g0-profile/);
  });

  it("requires input and output paths", () => {
    expect(main(["render", "--kind", "heatmap"])).toBe(2);
    expect(stderr.join("")).toMatch(/input CSV path is required/);
  });

  it("turns the detuning marker off on request", () => {
    const withMarker = join(dir, "m1.svg");
    const without = join(dir, "m2.svg");
    const base = ["render", "--kind", "heatmap", "--input", SWEEP];
    expect(main([...base, "--output", withMarker])).toBe(0);
    expect(main([...base, "--output", without, "--no-marker"])).toBe(0);
    expect(readFileSync(withMarker, "utf-8")).toContain("detuning-marker");
    expect(readFileSync(without, "utf-8")).not.toContain("detuning-marker");
  });
});
