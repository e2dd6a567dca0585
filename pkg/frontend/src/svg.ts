/**
 * Minimal deterministic SVG writer.
 *
 * Attributes are emitted in insertion order and numbers through a single
 * fixed formatter, so identical draw calls produce identical bytes.
 */

export function fmt(value: number): string {
  if (!Number.isFinite(value)) throw new Error(`non-finite coordinate: ${value}`);
  const rounded = value.toFixed(2);
  // normalize negative zero and strip a trailing ".00"/".x0"
  const clean = rounded.replace(/\.?0+$/, "");
  return clean === "-0" || clean === "" ? "0" : clean;
}

export function escapeText(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export type Attrs = Record<string, string | number>;

function attrString(attrs: Attrs): string {
  const parts: string[] = [];
  for (const [name, value] of Object.entries(attrs)) {
    const text = typeof value === "number" ? fmt(value) : value;
    parts.push(` ${name}="${escapeText(text)}"`);
  }
  return parts.join("");
}

export class SvgElement {
  private children: Array<string | SvgElement> = [];

  constructor(
    private readonly tag: string,
    private readonly attrs: Attrs,
  ) {}

  /** Nested container element (g, defs, pattern, ...). */
  child(tag: string, attrs: Attrs): SvgElement {
    const el = new SvgElement(tag, attrs);
    this.children.push(el);
    return el;
  }

  /** Self-closing element (rect, line, path, ...). */
  leaf(tag: string, attrs: Attrs): void {
    this.children.push(`<${tag}${attrString(attrs)}/>`);
  }

  text(content: string, attrs: Attrs): void {
    this.children.push(`<text${attrString(attrs)}>${escapeText(content)}</text>`);
  }

  serialize(): string {
    if (this.children.length === 0) {
      return `<${this.tag}${attrString(this.attrs)}/>`;
    }
    const inner = this.children
      .map((c) => (typeof c === "string" ? c : c.serialize()))
      .join("");
    return `<${this.tag}${attrString(this.attrs)}>${inner}</${this.tag}>`;
  }
}

export class SvgDocument {
  readonly root: SvgElement;

  constructor(
    readonly width: number,
    readonly height: number,
  ) {
    this.root = new SvgElement("svg", {
      xmlns: "http://www.w3.org/2000/svg",
      width: String(width),
      height: String(height),
      viewBox: `0 0 ${width} ${height}`,
    });
  }

  serialize(): string {
    return `<?xml version="1.0" encoding="UTF-8"?>\n${this.root.serialize()}\n`;
  }
}

/** Polyline path data; `close` appends Z. */
export function pathData(points: Array<{ x: number; y: number }>, close = false): string {
  if (points.length === 0) return "";
  const parts = [`M${fmt(points[0]!.x)} ${fmt(points[0]!.y)}`];
  for (let k = 1; k < points.length; k++) {
    parts.push(`L${fmt(points[k]!.x)} ${fmt(points[k]!.y)}`);
  }
  if (close) parts.push("Z");
  return parts.join("");
}
