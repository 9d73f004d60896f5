/** Pure model for the scenario explorer form.
 *
 * Submission is gated on validateForm returning no errors; the DOM layer
 * only mirrors this module's verdicts. Driver levels A and R must sit in
 * [0, 1] in every mode, matching the server's 400 rules, so no state with
 * an out-of-range driver can produce a request.
 */

import type { FieldError, ScenarioPreset, SimRequest } from "./types";

export type FormMode = "preset" | "custom";

export interface FormState {
  mode: FormMode;
  scenarioName: string;
  A: number;
  R: number;
  sigma: number;
  kE: number;
  kS: number;
  kT: number;
  t0: number;
  horizon: number;
  dt: number;
  runs: number;
  seed: number;
}

export const MAX_RUNS = 10000;

export const DEFAULT_FORM: FormState = {
  mode: "custom",
  scenarioName: "",
  A: 0.5,
  R: 0.5,
  sigma: 0.05,
  kE: 1.0,
  kS: 1.0,
  kT: 1.0,
  t0: 5.0,
  horizon: 10.0,
  dt: 0.1,
  runs: 100,
  seed: 0,
};

const NUMERIC_FIELDS = [
  "A", "R", "sigma", "kE", "kS", "kT", "t0", "horizon", "dt", "runs", "seed",
] as const;

const finite = Number.isFinite;

export function validateForm(s: FormState): FieldError[] {
  const errors: FieldError[] = [];
  if (s.mode === "preset" && s.scenarioName.trim() === "") {
    errors.push({ field: "scenarioName", message: "choose a preset scenario" });
  }
  for (const field of ["A", "R"] as const) {
    const v = s[field];
    if (!finite(v) || v < 0 || v > 1) {
      errors.push({ field, message: "must be in [0, 1]" });
    }
  }
  if (!finite(s.sigma) || s.sigma < 0) {
    errors.push({ field: "sigma", message: "must be >= 0" });
  }
  for (const field of ["kE", "kS", "kT"] as const) {
    const v = s[field];
    if (!finite(v) || v <= 0) {
      errors.push({ field, message: "must be > 0" });
    }
  }
  if (!finite(s.t0)) {
    errors.push({ field: "t0", message: "must be a number" });
  }
  for (const field of ["horizon", "dt"] as const) {
    const v = s[field];
    if (!finite(v) || v <= 0) {
      errors.push({ field, message: "must be > 0" });
    }
  }
  if (!Number.isInteger(s.runs) || s.runs < 1 || s.runs > MAX_RUNS) {
    errors.push({ field: "runs", message: `must be an integer in [1, ${MAX_RUNS}]` });
  }
  if (!Number.isInteger(s.seed) || s.seed < 0) {
    errors.push({ field: "seed", message: "must be an integer >= 0" });
  }
  return errors;
}

export function canSubmit(s: FormState): boolean {
  return validateForm(s).length === 0;
}

/** Copy a preset's name and documented driver levels into the form. */
export function applyPreset(s: FormState, preset: ScenarioPreset): FormState {
  return {
    ...s,
    mode: "preset",
    scenarioName: preset.name,
    A: preset.drivers.A,
    R: preset.drivers.R,
  };
}

/** Map a valid form to a simulate request; throws on any invalid field. */
export function buildRequest(s: FormState): SimRequest {
  const errors = validateForm(s);
  if (errors.length > 0) {
    const fields = errors.map((e) => e.field).join(", ");
    throw new Error(`form has invalid fields: ${fields}`);
  }
  const base = {
    params: {
      sigma_E: s.sigma,
      sigma_S: s.sigma,
      sigma_T: s.sigma,
      k_E: s.kE,
      k_S: s.kS,
      k_T: s.kT,
      t0_E: s.t0,
      t0_S: s.t0,
      t0_T: s.t0,
    },
    horizon: s.horizon,
    dt: s.dt,
    runs: s.runs,
    seed: s.seed,
  };
  return s.mode === "preset"
    ? { scenario: s.scenarioName, ...base }
    : { drivers: { A: s.A, R: s.R }, ...base };
}

/** Query-string encoding for shareable state. Numbers round-trip exactly. */
export function encodeForm(s: FormState): string {
  const q = new URLSearchParams();
  q.set("mode", s.mode);
  if (s.scenarioName) q.set("scenario", s.scenarioName);
  for (const field of NUMERIC_FIELDS) {
    q.set(field, String(s[field]));
  }
  return q.toString();
}

export function parseForm(query: string, fallback: FormState = DEFAULT_FORM): FormState {
  const q = new URLSearchParams(query);
  const s: FormState = { ...fallback };
  const mode = q.get("mode");
  if (mode === "preset" || mode === "custom") s.mode = mode;
  const name = q.get("scenario");
  if (name !== null) s.scenarioName = name;
  for (const field of NUMERIC_FIELDS) {
    const raw = q.get(field);
    if (raw === null) continue;
    const v = Number(raw);
    if (!Number.isNaN(v) || raw === "NaN") s[field] = v;
  }
  return s;
}
