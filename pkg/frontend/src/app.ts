/** DOM wiring for the explorer page. All logic lives in the pure modules
 * (form, chart, views); this file only moves values between them and the
 * document.
 */

import { ApiError, createApi } from "./api";
import type { ChartInput } from "./chart";
import { renderChart } from "./chart";
import type { FormState } from "./form";
import {
  DEFAULT_FORM,
  applyPreset,
  buildRequest,
  canSubmit,
  encodeForm,
  parseForm,
  validateForm,
} from "./form";
import type { ScenarioPreset } from "./types";
import { renderMatrixView, renderTopicsView } from "./views";

const api = createApi();

let form: FormState = { ...DEFAULT_FORM };
let presets: ScenarioPreset[] = [];
let current: ChartInput | null = null;
let pinned: ChartInput | null = null;
let seq = 0; // stale simulate responses are discarded by sequence number

function $<T extends HTMLElement>(sel: string): T {
  const el = document.querySelector<T>(sel);
  if (!el) throw new Error(`missing element ${sel}`);
  return el;
}

const NUMBER_INPUTS = [
  "A", "R", "sigma", "kE", "kS", "kT", "t0", "horizon", "dt", "runs", "seed",
] as const;

function syncFormToDom(): void {
  (document.querySelector(
    `input[name="mode"][value="${form.mode}"]`
  ) as HTMLInputElement).checked = true;
  ($("#scenario") as HTMLSelectElement).value = form.scenarioName;
  for (const field of NUMBER_INPUTS) {
    const input = $<HTMLInputElement>(`#${field}`);
    input.value = String(form[field]);
    const display = document.querySelector(`[data-value-for="${field}"]`);
    if (display) display.textContent = String(form[field]);
  }
  renderValidation();
  renderNarratives();
}

function readFormFromDom(): void {
  const mode = (document.querySelector(
    'input[name="mode"]:checked'
  ) as HTMLInputElement | null)?.value;
  form.mode = mode === "preset" ? "preset" : "custom";
  form.scenarioName = ($("#scenario") as HTMLSelectElement).value;
  for (const field of NUMBER_INPUTS) {
    form[field] = $<HTMLInputElement>(`#${field}`).valueAsNumber;
  }
}

function renderValidation(): void {
  const errors = validateForm(form);
  for (const span of document.querySelectorAll<HTMLElement>("[data-error-for]")) {
    const field = span.dataset.errorFor ?? "";
    const err = errors.find((e) => e.field === field);
    span.textContent = err ? err.message : "";
  }
  $<HTMLButtonElement>("#run").disabled = !canSubmit(form);
}

function renderNarratives(): void {
  const box = $("#narratives");
  const preset = presets.find((p) => p.name === form.scenarioName);
  if (form.mode !== "preset" || !preset) {
    box.innerHTML = "";
    return;
  }
  box.innerHTML = Object.entries(preset.narratives)
    .map(([dim, cell]) => `<p><strong>${dim}</strong>: ${cell}</p>`)
    .join("\n");
}

function renderResults(): void {
  const inputs: ChartInput[] = [];
  if (current) inputs.push(current);
  if (pinned) inputs.push(pinned);
  $("#chart").innerHTML = renderChart(inputs);
  $<HTMLButtonElement>("#pin").disabled = current === null;
}

function showBanner(text: string): void {
  const banner = $("#banner");
  banner.textContent = text;
  banner.hidden = false;
}

function clearBanner(): void {
  $("#banner").hidden = true;
}

function toast(text: string): void {
  const el = $("#toast");
  el.textContent = text;
  el.hidden = false;
  setTimeout(() => {
    el.hidden = true;
  }, 4000);
}

function syncUrl(): void {
  history.replaceState(null, "", `?${encodeForm(form)}`);
}

function onFormChanged(): void {
  readFormFromDom();
  syncFormToDom();
  syncUrl();
}

async function runSimulation(): Promise<void> {
  let request;
  try {
    request = buildRequest(form);
  } catch {
    renderValidation();
    return;
  }
  clearBanner();
  const mySeq = ++seq;
  const label =
    form.mode === "preset" ? form.scenarioName : `A=${form.A}, R=${form.R}`;
  try {
    const result = await api.simulate(request);
    if (mySeq !== seq) return; // a newer submit superseded this one
    current = { label, result };
    renderResults();
  } catch (err) {
    if (mySeq !== seq) return;
    if (err instanceof ApiError && err.status === 400 && err.fields.length > 0) {
      for (const fe of err.fields) {
        const span = document.querySelector<HTMLElement>(
          `[data-error-for="${fe.field.replace(/^drivers\./, "")}"]`
        );
        if (span) span.textContent = fe.message;
      }
      return;
    }
    if (err instanceof ApiError && err.status === 409) {
      showBanner(err.message);
      return;
    }
    toast(`simulation failed: ${err instanceof Error ? err.message : err}`);
  }
}

function pinCurrent(): void {
  if (!current) return;
  pinned = { ...current, label: `pinned: ${current.label}` };
  renderResults();
}

async function loadPresets(): Promise<void> {
  const select = $<HTMLSelectElement>("#scenario");
  try {
    const payload = await api.scenarios();
    presets = payload.scenarios;
    select.innerHTML =
      '<option value=""></option>' +
      presets
        .map((p) => `<option value="${p.name}">${p.name}</option>`)
        .join("");
    select.value = form.scenarioName;
    clearBanner();
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      showBanner(err.message);
    } else {
      showBanner(`cannot reach the API: ${err instanceof Error ? err.message : err}`);
    }
  }
}

async function loadViews(): Promise<void> {
  try {
    $("#topics-view").innerHTML = renderTopicsView(await api.topics());
  } catch (err) {
    $("#topics-view").textContent =
      err instanceof ApiError ? err.message : "topics unavailable";
  }
  try {
    $("#matrix-view").innerHTML = renderMatrixView(await api.matrix());
  } catch (err) {
    $("#matrix-view").textContent =
      err instanceof ApiError ? err.message : "matrix unavailable";
  }
}

function wireTabs(): void {
  for (const button of document.querySelectorAll<HTMLButtonElement>("[data-tab]")) {
    button.addEventListener("click", () => {
      for (const other of document.querySelectorAll<HTMLButtonElement>("[data-tab]")) {
        other.classList.toggle("active", other === button);
      }
      for (const section of document.querySelectorAll<HTMLElement>("[data-view]")) {
        section.hidden = section.dataset.view !== button.dataset.tab;
      }
    });
  }
}

function main(): void {
  form = parseForm(location.search.replace(/^\?/, ""));
  wireTabs();
  syncFormToDom();
  renderResults();

  for (const field of NUMBER_INPUTS) {
    $<HTMLInputElement>(`#${field}`).addEventListener("input", onFormChanged);
  }
  for (const radio of document.querySelectorAll('input[name="mode"]')) {
    radio.addEventListener("change", onFormChanged);
  }
  $<HTMLSelectElement>("#scenario").addEventListener("change", () => {
    readFormFromDom();
    const preset = presets.find((p) => p.name === form.scenarioName);
    if (preset) form = applyPreset(form, preset);
    syncFormToDom();
    syncUrl();
  });
  $("#run").addEventListener("click", () => void runSimulation());
  $("#pin").addEventListener("click", pinCurrent);
  $("#retry").addEventListener("click", () => void loadPresets());

  void loadPresets();
  void loadViews();
}

document.addEventListener("DOMContentLoaded", main);
