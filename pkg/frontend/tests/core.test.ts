import { describe, expect, it } from "vitest";

import {
  BadCharError,
  DEFAULT_ALPHABET,
  EntryState,
  NoCursorError,
  torusChebyshev,
} from "../src/core.js";

function typed(rows: number, cols: number, start: [number, number], text: string): EntryState {
  const state = new EntryState(rows, cols);
  state.setCursor(start[0], start[1]);
  state.typeString(text);
  return state;
}

describe("alphabet", () => {
  it("holds the 94 printable non-space characters", () => {
    expect(DEFAULT_ALPHABET).toHaveLength(94);
    expect(DEFAULT_ALPHABET[0]).toBe("!");
    expect(DEFAULT_ALPHABET[93]).toBe("~");
    expect(DEFAULT_ALPHABET).not.toContain(" ");
  });
});

describe("typing", () => {
  it("advances east and wraps at the right edge", () => {
    const state = typed(3, 4, [0, 2], "ab");
    expect(state.charAt(0, 2)).toBe("a");
    expect(state.charAt(0, 3)).toBe("b");
    expect(state.cursor).toEqual({ row: 0, col: 0 });
  });

  it("wraps vertically and diagonally", () => {
    const south = new EntryState(3, 4);
    south.setCursor(2, 1);
    south.setDirection("S");
    south.typeChar("x");
    expect(south.cursor).toEqual({ row: 0, col: 1 });

    const corner = new EntryState(3, 4);
    corner.setCursor(0, 0);
    corner.setDirection("NW");
    corner.typeChar("y");
    expect(corner.cursor).toEqual({ row: 2, col: 3 });
  });

  it("overwrites on revisit, keeping the most recent character", () => {
    const state = new EntryState(2, 4);
    state.setCursor(0, 0);
    state.typeString("abcde");
    expect(state.charAt(0, 0)).toBe("e");
    expect(state.placedCount()).toBe(4);
  });

  it("rejects characters outside the alphabet without changing state", () => {
    const state = typed(3, 4, [1, 1], "a");
    const before = state.cursor;
    expect(() => state.typeChar(" ")).toThrow(BadCharError);
    expect(() => state.typeChar("é")).toThrow(BadCharError);
    expect(state.placedCount()).toBe(1);
    expect(state.cursor).toEqual(before);
  });

  it("requires a cursor before typing", () => {
    const state = new EntryState(3, 3);
    expect(() => state.typeChar("a")).toThrow(NoCursorError);
  });

  it("erases under the cursor and leaves the cursor in place", () => {
    const state = typed(3, 4, [0, 0], "ab");
    state.setCursor(0, 1);
    state.eraseAtCursor();
    expect(state.charAt(0, 1)).toBeNull();
    expect(state.cursor).toEqual({ row: 0, col: 1 });
    state.eraseAtCursor();
    expect(state.placedCount()).toBe(1);
  });
});

describe("serialization", () => {
  it("uses 1-based coordinates, single digit on small grids", () => {
    const state = typed(4, 4, [0, 0], "a");
    expect(state.toTagged()).toBe("11a");
  });

  it("zero-pads to the width of the larger dimension", () => {
    const twelve = typed(12, 12, [0, 0], "a");
    expect(twelve.toTagged()).toBe("0101a");
    const tall = typed(10, 3, [8, 1], "x");
    expect(tall.toTagged()).toBe("0902x");
  });

  it("emits reading order regardless of typing order", () => {
    const state = new EntryState(4, 4);
    state.setCursor(2, 2);
    state.typeChar("z");
    state.setCursor(0, 1);
    state.typeChar("a");
    expect(state.toTagged()).toBe("12a33z");
  });

  it("round-trips an english word typed with a turn", () => {
    const state = new EntryState(9, 9);
    state.setCursor(1, 2);
    state.typeString("Pass");
    state.setDirection("S");
    state.typeString("word");
    expect(state.toTagged()).toBe("23P24a25s26s27w37o47r57d");
  });
});

describe("masking", () => {
  it("masks cells more than one step from the cursor", () => {
    const state = typed(6, 6, [0, 0], "abc");
    expect(state.cursor).toEqual({ row: 0, col: 3 });
    expect(state.visibility(0, 0)).toBe("masked");
    expect(state.visibility(0, 1)).toBe("masked");
    expect(state.visibility(0, 2)).toBe("plain");
  });

  it("treats the eight neighbours and the cursor cell as near", () => {
    const state = new EntryState(6, 6);
    state.setCursor(3, 3);
    for (const [r, c] of [[2, 2], [2, 3], [2, 4], [3, 2], [3, 4], [4, 2], [4, 3], [4, 4]]) {
      state.setCursor(r, c);
      state.typeChar("x");
      state.setCursor(3, 3);
      expect(state.visibility(r, c)).toBe("plain");
    }
    state.setCursor(3, 3);
    state.typeChar("x");
    state.setCursor(3, 3);
    expect(state.visibility(3, 3)).toBe("plain");
  });

  it("adjacency wraps across the grid edges", () => {
    const state = new EntryState(12, 12);
    state.setCursor(0, 11);
    state.typeChar("q");
    state.setCursor(0, 0);
    expect(torusChebyshev({ row: 0, col: 11 }, { row: 0, col: 0 }, 12, 12)).toBe(1);
    expect(state.visibility(0, 11)).toBe("plain");
  });

  it("hover reveals a masked cell", () => {
    const state = typed(6, 6, [0, 0], "abc");
    expect(state.visibility(0, 0, true)).toBe("plain");
    expect(state.visibility(0, 0, false)).toBe("masked");
  });

  it("empty cells are never masked", () => {
    const state = new EntryState(6, 6);
    state.setCursor(0, 0);
    expect(state.visibility(5, 5)).toBe("empty");
    expect(state.visibility(5, 5, true)).toBe("empty");
  });

  it("masks everything placed when no cursor is set", () => {
    const state = typed(6, 6, [0, 0], "ab");
    state.cursor = null;
    expect(state.visibility(0, 0)).toBe("masked");
    expect(state.visibility(0, 1)).toBe("masked");
  });
});

describe("clearing", () => {
  it("clear removes every character but keeps the grid usable", () => {
    const state = typed(6, 6, [2, 2], "abcd");
    state.clear();
    expect(state.placedCount()).toBe(0);
    expect(state.toTagged()).toBe("");
    state.setCursor(0, 0);
    state.typeChar("z");
    expect(state.toTagged()).toBe("11z");
  });
});
