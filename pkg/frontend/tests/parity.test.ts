import { execFileSync } from "node:child_process";

import { describe, expect, it } from "vitest";

import { EntryState, type DirectionName } from "../src/core.js";

/** One scripted user interaction: a click, a direction change, or typed text. */
type UiEvent =
  | { kind: "click"; row: number; col: number }
  | { kind: "direction"; name: DirectionName }
  | { kind: "type"; text: string };

function driveWidget(rows: number, cols: number, events: UiEvent[]): string {
  const state = new EntryState(rows, cols);
  for (const event of events) {
    if (event.kind === "click") state.setCursor(event.row, event.col);
    else if (event.kind === "direction") state.setDirection(event.name);
    else state.typeString(event.text);
  }
  return state.toTagged();
}

function driveBackend(rows: number, cols: number, events: UiEvent[]): string {
  const script = `
import json, sys
from spartan.codec import to_tagged
from spartan.grid import Coord, Direction, EntrySession, GridSpec

spec = json.load(sys.stdin)
session = EntrySession(GridSpec(spec["rows"], spec["cols"]))
for event in spec["events"]:
    if event["kind"] == "click":
        session.set_cursor(Coord(event["row"], event["col"]))
    elif event["kind"] == "direction":
        session.set_direction(Direction[event["name"]])
    else:
        session.type_string(event["text"])
sys.stdout.write(to_tagged(session.placement()))
`;
  return execFileSync("python3", ["-c", script], {
    input: JSON.stringify({ rows, cols, events }),
    encoding: "utf8",
  });
}

describe("serialization parity with the backend session", () => {
  it("agrees byte-for-byte on click, direction, 8 chars, one turn", () => {
    const events: UiEvent[] = [
      { kind: "click", row: 2, col: 1 },
      { kind: "direction", name: "E" },
      { kind: "type", text: "wand" },
      { kind: "direction", name: "S" },
      { kind: "type", text: "erer" },
    ];
    const ours = driveWidget(12, 12, events);
    expect(ours).toBe(driveBackend(12, 12, events));
    expect(ours).toBe("0302w0303a0304n0305d0306e0406r0506e0606r");
  });

  it("agrees across wrapping, overwriting, and re-clicks", () => {
    const events: UiEvent[] = [
      { kind: "click", row: 11, col: 10 },
      { kind: "type", text: "ab" },
      { kind: "direction", name: "SE" },
      { kind: "type", text: "cd" },
      { kind: "click", row: 11, col: 10 },
      { kind: "type", text: "Z" },
      { kind: "click", row: 0, col: 0 },
      { kind: "direction", name: "W" },
      { kind: "type", text: "!?" },
    ];
    expect(driveWidget(12, 12, events)).toBe(driveBackend(12, 12, events));
  });

  it("agrees on a single-digit grid", () => {
    const events: UiEvent[] = [
      { kind: "click", row: 1, col: 2 },
      { kind: "type", text: "Pass" },
      { kind: "direction", name: "S" },
      { kind: "type", text: "word" },
    ];
    expect(driveWidget(9, 9, events)).toBe(driveBackend(9, 9, events));
  });
});
