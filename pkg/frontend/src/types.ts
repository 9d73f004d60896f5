/** Payload shapes mirrored from the pipeline HTTP API. */

export type IndexName = "E" | "S" | "T";

export interface Drivers {
  A: number;
  R: number;
}

export interface ScenarioPreset {
  name: string;
  drivers: Drivers;
  narratives: Record<string, string>;
}

export interface ScenariosPayload {
  dimensions: string[];
  scenarios: ScenarioPreset[];
}

export interface TopicSummary {
  topic: number;
  top_words: string[];
  categories: string[];
}

export interface TrendBlock {
  years: number[];
  weights: number[][];
}

export interface TopicsPayload {
  n_docs: number;
  topics: TopicSummary[];
  trends: TrendBlock;
}

export interface FactorPayload {
  name: string;
  impact: string;
  uncertainty: string;
  implications: string;
  strategies: string;
  linked_topic: number | null;
}

export interface MatrixPayload {
  factors: FactorPayload[];
  relevance: Record<string, string>;
}

export interface SeriesStats {
  mean: number[];
  std: number[];
  q05: number[];
  q50: number[];
  q95: number[];
}

export interface SimRequest {
  scenario?: string;
  drivers?: Drivers;
  params?: Record<string, number>;
  horizon: number;
  dt: number;
  runs: number;
  seed: number;
}

export interface SimResponse {
  times: number[];
  n_runs: number;
  base_seed: number;
  drivers: Drivers;
  scenario: string | null;
  stats: Record<IndexName, SeriesStats>;
}

export interface FieldError {
  field: string;
  message: string;
}
