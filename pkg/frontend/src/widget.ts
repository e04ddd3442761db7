/** Interactive grid-entry widget.
 *
 * Renders the server-colorized grid, a d-pad for the typing direction
 * (keyboard arrows work too), and a register/login form. One click selects
 * a cell; typing places characters that wrap at the edges; characters far
 * from the cursor are masked and can be revealed by hovering.
 */

import { fetchGridConfig, login, register, type ApiOutcome, type GridConfig } from "./api.js";
import {
  BadCharError,
  DIRECTIONS,
  EntryState,
  NoCursorError,
  type DirectionName,
} from "./core.js";

export const MASK_GLYPH = "●";

const DIRECTION_GLYPHS: Record<DirectionName, string> = {
  N: "↑",
  NE: "↗",
  E: "→",
  SE: "↘",
  S: "↓",
  SW: "↙",
  W: "←",
  NW: "↖",
};

const ARROW_KEYS: Record<string, DirectionName> = {
  ArrowUp: "N",
  ArrowRight: "E",
  ArrowDown: "S",
  ArrowLeft: "W",
};

// d-pad layout rows; null is the centre indicator slot
const DPAD_LAYOUT: Array<DirectionName | null> = [
  "NW", "N", "NE",
  "W", null, "E",
  "SW", "S", "SE",
];

export type Mode = "register" | "login";

export class GridWidget {
  readonly root: HTMLElement;
  readonly base: string;
  state: EntryState | null = null;
  config: GridConfig | null = null;
  mode: Mode = "register";

  private username = "";
  private busy = false;
  private hoveredIndex: number | null = null;
  private cellButtons: HTMLButtonElement[] = [];
  private statusEl!: HTMLElement;
  private dirEl!: HTMLElement;
  private submitBtn!: HTMLButtonElement;

  constructor(root: HTMLElement, base = "") {
    this.root = root;
    this.base = base;
  }

  async load(username: string): Promise<void> {
    this.username = username;
    let config: GridConfig;
    try {
      config = await fetchGridConfig(this.base, username);
    } catch {
      this.renderRetry();
      return;
    }
    this.config = config;
    const state = new EntryState(config.rows, config.cols);
    state.setCursor(config.defaultStart.row, config.defaultStart.col);
    state.setDirection(config.defaultDirection as DirectionName);
    this.state = state;
    this.build();
    this.refresh();
  }

  private renderRetry(): void {
    this.root.textContent = "";
    const note = document.createElement("p");
    note.className = "gpw-error";
    note.textContent = "could not load your grid";
    const retry = document.createElement("button");
    retry.type = "button";
    retry.className = "gpw-retry";
    retry.textContent = "retry";
    retry.addEventListener("click", () => void this.load(this.username));
    this.root.append(note, retry);
  }

  private build(): void {
    const { config, state } = this;
    if (!config || !state) return;
    this.root.textContent = "";
    this.root.classList.add("gpw");

    const gridEl = document.createElement("div");
    gridEl.className = "gpw-grid";
    gridEl.tabIndex = 0;
    gridEl.style.setProperty("--gpw-cols", String(config.cols));
    this.cellButtons = [];
    for (let row = 0; row < config.rows; row++) {
      for (let col = 0; col < config.cols; col++) {
        const index = row * config.cols + col;
        const cell = document.createElement("button");
        cell.type = "button";
        cell.className = `gpw-cell gpw-color-${config.cellColors[index]}`;
        cell.dataset.row = String(row);
        cell.dataset.col = String(col);
        cell.setAttribute("aria-label", `cell ${row + 1},${col + 1}`);
        cell.addEventListener("click", () => this.selectCell(row, col));
        cell.addEventListener("mouseenter", () => {
          this.hoveredIndex = index;
          this.refresh();
        });
        cell.addEventListener("mouseleave", () => {
          this.hoveredIndex = null;
          this.refresh();
        });
        this.cellButtons.push(cell);
        gridEl.appendChild(cell);
      }
    }
    gridEl.addEventListener("keydown", (event) => this.onKey(event));

    const side = document.createElement("div");
    side.className = "gpw-side";

    const dpad = document.createElement("div");
    dpad.className = "gpw-dpad";
    for (const slot of DPAD_LAYOUT) {
      if (slot === null) {
        this.dirEl = document.createElement("span");
        this.dirEl.className = "gpw-direction";
        dpad.appendChild(this.dirEl);
        continue;
      }
      const btn = document.createElement("button");
      btn.type = "button";
      btn.className = "gpw-dpad-btn";
      btn.dataset.dir = slot;
      btn.textContent = DIRECTION_GLYPHS[slot];
      btn.setAttribute("aria-label", `type towards ${slot}`);
      btn.addEventListener("click", () => this.setDirection(slot));
      dpad.appendChild(btn);
    }

    const modes = document.createElement("div");
    modes.className = "gpw-modes";
    for (const mode of ["register", "login"] as Mode[]) {
      const label = document.createElement("label");
      const radio = document.createElement("input");
      radio.type = "radio";
      radio.name = "gpw-mode";
      radio.value = mode;
      radio.checked = mode === this.mode;
      radio.addEventListener("change", () => {
        this.mode = mode;
        this.refresh();
      });
      label.append(radio, document.createTextNode(mode));
      modes.appendChild(label);
    }

    this.submitBtn = document.createElement("button");
    this.submitBtn.type = "button";
    this.submitBtn.className = "gpw-submit";
    this.submitBtn.textContent = "submit";
    this.submitBtn.addEventListener("click", () => void this.submit());

    this.statusEl = document.createElement("p");
    this.statusEl.className = "gpw-status";
    this.statusEl.setAttribute("role", "status");

    side.append(dpad, modes, this.submitBtn, this.statusEl);
    this.root.append(gridEl, side);
  }

  private selectCell(row: number, col: number): void {
    if (this.busy || !this.state) return;
    this.state.setCursor(row, col);
    this.refresh();
  }

  private setDirection(name: DirectionName): void {
    if (this.busy || !this.state) return;
    this.state.setDirection(name);
    this.refresh();
  }

  private onKey(event: KeyboardEvent): void {
    if (this.busy || !this.state) return;
    const arrow = ARROW_KEYS[event.key];
    if (arrow) {
      event.preventDefault();
      this.setDirection(arrow);
      return;
    }
    if (event.key === "Backspace") {
      event.preventDefault();
      try {
        this.state.eraseAtCursor();
      } catch (err) {
        if (!(err instanceof NoCursorError)) throw err;
      }
      this.refresh();
      return;
    }
    if (event.key.length === 1 && !event.ctrlKey && !event.metaKey && !event.altKey) {
      event.preventDefault();
      try {
        this.state.typeChar(event.key);
        this.setStatus("");
      } catch (err) {
        if (err instanceof NoCursorError || err instanceof BadCharError) {
          this.setStatus(err.message);
        } else {
          throw err;
        }
      }
      this.refresh();
    }
  }

  private async submit(): Promise<void> {
    const { state } = this;
    if (this.busy || !state) return;
    if (this.mode === "register" && state.placedCount() < 8) {
      this.setStatus("place at least 8 characters before registering");
      return;
    }
    this.busy = true;
    this.submitBtn.disabled = true;
    try {
      const call = this.mode === "register" ? register : login;
      const outcome = await call(this.base, this.username, state.toTagged());
      this.setStatus(this.describe(outcome));
    } catch {
      this.setStatus("network error, please try again");
    } finally {
      state.clear();
      this.busy = false;
      this.submitBtn.disabled = false;
      this.refresh();
    }
  }

  private describe(outcome: ApiOutcome): string {
    const attempts = outcome.body["attempt_count"];
    switch (outcome.status) {
      case 201:
        return "registered, switch to login and re-enter your password";
      case 200:
        return `login succeeded (attempt ${attempts})`;
      case 401:
        return `login failed (attempt ${attempts})`;
      case 409:
        return "that username is already registered";
      case 422:
        return `rejected: ${outcome.body["error"]}`;
      case 429:
        return "too many attempts, wait a minute and try again";
      default:
        return `unexpected response (${outcome.status})`;
    }
  }

  private setStatus(text: string): void {
    if (this.statusEl) this.statusEl.textContent = text;
  }

  private refresh(): void {
    const { state, config } = this;
    if (!state || !config) return;
    for (let index = 0; index < this.cellButtons.length; index++) {
      const row = Math.floor(index / config.cols);
      const col = index % config.cols;
      const button = this.cellButtons[index];
      const visibility = state.visibility(row, col, this.hoveredIndex === index);
      if (visibility === "empty") {
        button.textContent = "";
      } else if (visibility === "plain") {
        button.textContent = state.charAt(row, col);
      } else {
        button.textContent = MASK_GLYPH;
      }
      const isCursor =
        state.cursor !== null && state.cursor.row === row && state.cursor.col === col;
      button.classList.toggle("is-cursor", isCursor);
    }
    if (this.dirEl) this.dirEl.textContent = DIRECTION_GLYPHS[state.direction];
  }
}
