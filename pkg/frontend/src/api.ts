/** Thin JSON client for the auth service. */

export interface GridConfig {
  rows: number;
  cols: number;
  paletteSize: number;
  colorSeed: string;
  cellColors: number[];
  defaultStart: { row: number; col: number };
  defaultDirection: string;
}

export interface ApiOutcome {
  status: number;
  body: Record<string, unknown>;
}

async function postJson(url: string, payload: unknown): Promise<ApiOutcome> {
  const resp = await fetch(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
  return { status: resp.status, body: (await resp.json()) as Record<string, unknown> };
}

export async function fetchGridConfig(base: string, username: string): Promise<GridConfig> {
  const resp = await fetch(`${base}/api/grid?username=${encodeURIComponent(username)}`);
  if (!resp.ok) {
    throw new Error(`grid config request failed with status ${resp.status}`);
  }
  const raw = (await resp.json()) as Record<string, any>;
  return {
    rows: raw.rows,
    cols: raw.cols,
    paletteSize: raw.palette_size,
    colorSeed: raw.color_seed,
    cellColors: raw.cell_colors,
    defaultStart: raw.default_start,
    defaultDirection: raw.default_direction,
  };
}

export function register(base: string, username: string, taggedPassword: string): Promise<ApiOutcome> {
  return postJson(`${base}/api/register`, {
    username,
    tagged_password: taggedPassword,
  });
}

export function login(base: string, username: string, taggedPassword: string): Promise<ApiOutcome> {
  return postJson(`${base}/api/login`, {
    username,
    tagged_password: taggedPassword,
  });
}
