/**
 * Rebuild the rectangular sweep grid from flat CSV rows.
 *
 * Sweep files carry one row per grid point with the swept parameters
 * echoed in their columns, so the axes are recovered from the distinct
 * values. Rectangularity is checked; a sweep with holes is not a grid.
 */

import { InputError, num, Table } from "./csv.js";

export interface Grid {
  /** Ascending axis values. */
  xs: number[];
  ys: number[];
  /** values[j][i] belongs to (xs[i], ys[j]); NaN marks a masked point. */
  values: number[][];
}

function distinctSorted(raw: number[]): number[] {
  const seen = new Set<number>();
  for (const v of raw) {
    if (Number.isNaN(v)) throw new InputError("axis column contains empty cells");
    seen.add(v);
  }
  return [...seen].sort((a, b) => a - b);
}

export function assembleGrid(
  table: Table,
  xColumn: string,
  yColumn: string,
  valueColumn: string,
): Grid {
  const xs = distinctSorted(table.rows.map((r) => num(r, xColumn)));
  const ys = distinctSorted(table.rows.map((r) => num(r, yColumn)));
  if (xs.length < 2 || ys.length < 2) {
    throw new InputError(
      `need at least a 2x2 grid over (${xColumn}, ${yColumn}), got ${xs.length}x${ys.length}`,
    );
  }
  if (xs.length * ys.length !== table.rows.length) {
    throw new InputError(
      `sweep over (${xColumn}, ${yColumn}) is not rectangular: ` +
        `${xs.length}x${ys.length} axes but ${table.rows.length} rows`,
    );
  }
  const xIndex = new Map(xs.map((v, i) => [v, i]));
  const yIndex = new Map(ys.map((v, j) => [v, j]));
  const values: number[][] = ys.map(() => xs.map(() => NaN));
  const filled: boolean[][] = ys.map(() => xs.map(() => false));
  for (const row of table.rows) {
    const i = xIndex.get(num(row, xColumn))!;
    const j = yIndex.get(num(row, yColumn))!;
    if (filled[j]![i]) {
      throw new InputError(`duplicate grid point at ${xColumn}=${row[xColumn]}, ${yColumn}=${row[yColumn]}`);
    }
    filled[j]![i] = true;
    values[j]![i] = num(row, valueColumn);
  }
  return { xs, ys, values };
}

/** Constant-column helper: the single value a column holds everywhere. */
export function constantColumn(table: Table, column: string): number {
  const values = table.rows.map((r) => num(r, column));
  const first = values[0]!;
  if (!values.every((v) => v === first)) {
    throw new InputError(`column ${column} is not constant across the sweep`);
  }
  return first;
}
