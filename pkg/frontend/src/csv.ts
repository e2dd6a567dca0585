/**
 * CSV input layer for the solver's outputs.
 *
 * Dialect: comma-separated UTF-8 with LF line endings and a mandatory
 * header row. Floats are decimal with `.`, booleans are `true`/`false`,
 * missing values are empty fields. Everything beyond that (which columns
 * a figure needs) is the caller's contract, enforced by `requireColumns`.
 */

import { readFileSync } from "node:fs";
import Papa from "papaparse";

export class InputError extends Error {}

export interface Table {
  /** Source path, used in error messages. */
  path: string;
  columns: string[];
  rows: Record<string, string>[];
}

export function loadTable(path: string): Table {
  let text: string;
  try {
    text = readFileSync(path, "utf-8");
  } catch (err) {
    throw new InputError(`cannot read ${path}: ${(err as Error).message}`);
  }
  const parsed = Papa.parse<Record<string, string>>(text, {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0]!;
    throw new InputError(`malformed CSV in ${path}: ${first.message}`);
  }
  const columns = (parsed.meta.fields ?? []).map((c) => c.trim());
  if (columns.length === 0) {
    throw new InputError(`no header row in ${path}`);
  }
  if (parsed.data.length === 0) {
    throw new InputError(`no data rows in ${path} (header only)`);
  }
  return { path, columns, rows: parsed.data };
}

/** Fail with a message that names every missing column at once. */
export function requireColumns(table: Table, needed: string[]): void {
  const have = new Set(table.columns);
  const missing = needed.filter((c) => !have.has(c));
  if (missing.length > 0) {
    throw new InputError(
      `missing required column(s) in ${table.path}: ${missing.join(", ")}`,
    );
  }
}

/** Numeric cell; empty fields become NaN (masked points). */
export function num(row: Record<string, string>, column: string): number {
  const raw = row[column];
  if (raw === undefined || raw === "") return NaN;
  const value = Number(raw);
  if (Number.isNaN(value)) {
    throw new InputError(`non-numeric value ${JSON.stringify(raw)} in column ${column}`);
  }
  return value;
}

export function bool(row: Record<string, string>, column: string): boolean | null {
  const raw = row[column];
  if (raw === undefined || raw === "") return null;
  if (raw === "true") return true;
  if (raw === "false") return false;
  throw new InputError(`non-boolean value ${JSON.stringify(raw)} in column ${column}`);
}

/** Whole column as numbers, same order as the rows. */
export function columnValues(table: Table, column: string): number[] {
  return table.rows.map((row) => num(row, column));
}
