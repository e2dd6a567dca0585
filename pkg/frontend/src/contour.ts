/**
 * Marching-squares iso-contours of the region {value < level}.
 *
 * The grid is padded with a ring of +Infinity before scanning, so every
 * contour comes back as a closed ring even where the region touches the
 * data boundary: the padding cannot be "below" any finite level. Masked
 * points (NaN) are treated the same way, which excludes them from the
 * region instead of poisoning the interpolation.
 *
 * Coordinates are fractional grid indices: x in [0, ncols-1], y in
 * [0, nrows-1], matching values[y][x]. Crossings are interpolated in a
 * fixed edge direction so shared edges of adjacent cells yield
 * bit-identical points; ring order is a deterministic function of the
 * input alone.
 */

export interface Point {
  x: number;
  y: number;
}

/** Closed polyline: last point equals the first. */
export type Ring = Point[];

interface Segment {
  p0: Point;
  p1: Point;
}

function key(p: Point): string {
  return `${p.x.toFixed(9)}|${p.y.toFixed(9)}`;
}

/**
 * Crossing of the level on the edge a->b (canonical direction). Infinite
 * corners pin the crossing to the finite end instead of interpolating.
 */
function crossing(
  ax: number, ay: number, av: number,
  bx: number, by: number, bv: number,
  level: number,
): Point {
  if (!Number.isFinite(av)) return { x: bx, y: by };
  if (!Number.isFinite(bv)) return { x: ax, y: ay };
  const s = (level - av) / (bv - av);
  return { x: ax + s * (bx - ax), y: ay + s * (by - ay) };
}

export function isoRings(values: number[][], level: number): Ring[] {
  const nrows = values.length;
  const ncols = nrows > 0 ? values[0]!.length : 0;
  if (nrows < 2 || ncols < 2) return [];

  // padded lookup; NaN counts as +Infinity (outside the region)
  const at = (i: number, j: number): number => {
    if (i < 1 || j < 1 || i > ncols || j > nrows) return Infinity;
    const v = values[j - 1]![i - 1]!;
    return Number.isNaN(v) ? Infinity : v;
  };

  const segments: Segment[] = [];
  for (let j = 0; j <= nrows; j++) {
    for (let i = 0; i <= ncols; i++) {
      const v0 = at(i, j); // (i, j)
      const v1 = at(i + 1, j); // (i+1, j)
      const v2 = at(i + 1, j + 1); // (i+1, j+1)
      const v3 = at(i, j + 1); // (i, j+1)
      const caseIndex =
        (v0 < level ? 1 : 0) |
        (v1 < level ? 2 : 0) |
        (v2 < level ? 4 : 0) |
        (v3 < level ? 8 : 0);
      if (caseIndex === 0 || caseIndex === 15) continue;

      // canonical edge crossings: bottom/top left->right, left/right bottom->up
      const e = (which: number): Point => {
        switch (which) {
          case 0: return crossing(i, j, v0, i + 1, j, v1, level);
          case 1: return crossing(i + 1, j, v1, i + 1, j + 1, v2, level);
          case 2: return crossing(i, j + 1, v3, i + 1, j + 1, v2, level);
          default: return crossing(i, j, v0, i, j + 1, v3, level);
        }
      };
      const add = (ea: number, eb: number): void => {
        const p0 = e(ea);
        const p1 = e(eb);
        if (key(p0) !== key(p1)) segments.push({ p0, p1 });
      };

      switch (caseIndex) {
        case 1: add(3, 0); break;
        case 2: add(0, 1); break;
        case 3: add(3, 1); break;
        case 4: add(1, 2); break;
        case 5: {
          // saddle: connect through the cell center when it is below
          const center = (v0 + v1 + v2 + v3) / 4;
          if (center < level) { add(0, 1); add(2, 3); }
          else { add(3, 0); add(1, 2); }
          break;
        }
        case 6: add(0, 2); break;
        case 7: add(3, 2); break;
        case 8: add(2, 3); break;
        case 9: add(0, 2); break;
        case 10: {
          const center = (v0 + v1 + v2 + v3) / 4;
          if (center < level) { add(3, 0); add(1, 2); }
          else { add(0, 1); add(2, 3); }
          break;
        }
        case 11: add(1, 2); break;
        case 12: add(1, 3); break;
        case 13: add(0, 1); break;
        case 14: add(3, 0); break;
      }
    }
  }

  // chain segments into closed rings by endpoint identity
  const byEndpoint = new Map<string, number[]>();
  segments.forEach((seg, idx) => {
    for (const p of [seg.p0, seg.p1]) {
      const k = key(p);
      const list = byEndpoint.get(k);
      if (list) list.push(idx);
      else byEndpoint.set(k, [idx]);
    }
  });

  const used = new Array<boolean>(segments.length).fill(false);
  const rings: Ring[] = [];
  for (let start = 0; start < segments.length; start++) {
    if (used[start]) continue;
    used[start] = true;
    const first = segments[start]!;
    const ring: Ring = [first.p0, first.p1];
    const headKey = key(first.p0);
    let tail = first.p1;
    while (key(tail) !== headKey) {
      const candidates = byEndpoint.get(key(tail)) ?? [];
      let advanced = false;
      for (const idx of candidates) {
        if (used[idx]) continue;
        const seg = segments[idx]!;
        used[idx] = true;
        tail = key(seg.p0) === key(tail) ? seg.p1 : seg.p0;
        ring.push(tail);
        advanced = true;
        break;
      }
      if (!advanced) break; // defensive: degenerate vertex, emit as-is
    }
    // shift out of padded coordinates into data coordinates
    rings.push(ring.map((p) => ({ x: p.x - 1, y: p.y - 1 })));
  }
  return rings;
}

/** Even-odd test against the union of rings. */
export function pointInRings(rings: Ring[], x: number, y: number): boolean {
  let inside = false;
  for (const ring of rings) {
    for (let k = 0; k + 1 < ring.length; k++) {
      const a = ring[k]!;
      const b = ring[k + 1]!;
      if (a.y > y !== b.y > y) {
        const xCross = a.x + ((y - a.y) / (b.y - a.y)) * (b.x - a.x);
        if (x < xCross) inside = !inside;
      }
    }
  }
  return inside;
}
