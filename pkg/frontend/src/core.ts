/** Pure grid-entry state: typing, wrap, masking, and serialization.
 *
 * This module has no DOM or network dependencies so its behaviour can be
 * checked cell-for-cell against the backend's entry session.
 */

/** The 94 printable non-space ASCII characters, the service's grid alphabet. */
export const DEFAULT_ALPHABET: string = Array.from({ length: 94 }, (_, i) =>
  String.fromCharCode(33 + i),
).join("");

export type DirectionName = "N" | "NE" | "E" | "SE" | "S" | "SW" | "W" | "NW";

export const DIRECTIONS: Record<DirectionName, { dr: number; dc: number }> = {
  N: { dr: -1, dc: 0 },
  NE: { dr: -1, dc: 1 },
  E: { dr: 0, dc: 1 },
  SE: { dr: 1, dc: 1 },
  S: { dr: 1, dc: 0 },
  SW: { dr: 1, dc: -1 },
  W: { dr: 0, dc: -1 },
  NW: { dr: -1, dc: -1 },
};

export interface Cell {
  row: number;
  col: number;
}

export class NoCursorError extends Error {}
export class BadCharError extends Error {}

export type Visibility = "empty" | "plain" | "masked";

/** Grid distance that respects edge wrapping in both axes. */
export function torusChebyshev(a: Cell, b: Cell, rows: number, cols: number): number {
  const dr = Math.abs(a.row - b.row);
  const dc = Math.abs(a.col - b.col);
  return Math.max(Math.min(dr, rows - dr), Math.min(dc, cols - dc));
}

export class EntryState {
  readonly rows: number;
  readonly cols: number;
  readonly alphabet: string;
  cursor: Cell | null = null;
  direction: DirectionName = "E";
  private cells: Map<number, string> = new Map();

  constructor(rows: number, cols: number, alphabet: string = DEFAULT_ALPHABET) {
    if (rows < 1 || cols < 1) throw new Error("grid needs at least one cell");
    this.rows = rows;
    this.cols = cols;
    this.alphabet = alphabet;
  }

  private index(row: number, col: number): number {
    if (row < 0 || row >= this.rows || col < 0 || col >= this.cols) {
      throw new Error(`cell (${row},${col}) outside ${this.rows}x${this.cols}`);
    }
    return row * this.cols + col;
  }

  setCursor(row: number, col: number): void {
    this.index(row, col);
    this.cursor = { row, col };
  }

  setDirection(name: DirectionName): void {
    if (!(name in DIRECTIONS)) throw new Error(`unknown direction ${name}`);
    this.direction = name;
  }

  /** Place one character at the cursor, then advance with wrap.
   * Later characters overwrite earlier ones on revisited cells. */
  typeChar(ch: string): void {
    if (this.cursor === null) {
      throw new NoCursorError("select a start cell before typing");
    }
    if (ch.length !== 1 || !this.alphabet.includes(ch)) {
      throw new BadCharError(`character ${JSON.stringify(ch)} is not in the grid alphabet`);
    }
    this.cells.set(this.index(this.cursor.row, this.cursor.col), ch);
    const { dr, dc } = DIRECTIONS[this.direction];
    this.cursor = {
      row: (this.cursor.row + dr + this.rows) % this.rows,
      col: (this.cursor.col + dc + this.cols) % this.cols,
    };
  }

  typeString(text: string): void {
    for (const ch of text) this.typeChar(ch);
  }

  /** Remove the character under the cursor, if any. The cursor stays put. */
  eraseAtCursor(): void {
    if (this.cursor === null) throw new NoCursorError("no cursor to erase at");
    this.cells.delete(this.index(this.cursor.row, this.cursor.col));
  }

  clear(): void {
    this.cells.clear();
  }

  charAt(row: number, col: number): string | null {
    return this.cells.get(this.index(row, col)) ?? null;
  }

  placedCount(): number {
    return this.cells.size;
  }

  /** Placed characters in reading order (top-to-bottom, left-to-right). */
  entries(): Array<{ row: number; col: number; ch: string }> {
    return [...this.cells.entries()]
      .sort(([a], [b]) => a - b)
      .map(([index, ch]) => ({
        row: Math.floor(index / this.cols),
        col: index % this.cols,
        ch,
      }));
  }

  /** Serialize to the wire form: 1-based coordinates, each zero-padded to
   * the width of the larger grid dimension, concatenated in reading order. */
  toTagged(): string {
    const width = String(Math.max(this.rows, this.cols)).length;
    const pad = (n: number) => String(n).padStart(width, "0");
    return this.entries()
      .map(({ row, col, ch }) => pad(row + 1) + pad(col + 1) + ch)
      .join("");
  }

  /** Per-cell display rule: filled cells within one step of the cursor
   * (eight neighbours plus the cursor cell) show their character, other
   * filled cells show a mask; hovering a filled cell always reveals it.
   * Empty cells show nothing. */
  visibility(row: number, col: number, hovered = false): Visibility {
    if (this.charAt(row, col) === null) return "empty";
    if (hovered) return "plain";
    if (
      this.cursor !== null &&
      torusChebyshev({ row, col }, this.cursor, this.rows, this.cols) <= 1
    ) {
      return "plain";
    }
    return "masked";
  }
}
