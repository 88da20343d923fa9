export interface Annotation {
  in_start: number;
  in_end: number;
  out_start: number;
  out_end: number;
  original_text: string;
  replacement: string;
  rule_id: number;
  category: string;
  color: string;
  title: string;
  explanation: string;
}

export interface CorrectResponse {
  session_id: string | null;
  original: string;
  corrected: string;
  markup: string;
  annotations: Annotation[];
  engine_version: string;
  lexicon_version: string;
  elapsed_ms: number;
  warnings?: string[];
}

export interface RuleSpec {
  rule_id: number;
  mnemonic: string;
  category: string;
  color: string;
  description_tr: string;
  description_en: string;
  example_before: string;
  example_after: string;
}

export interface RulesResponse {
  version: string;
  rules: RuleSpec[];
}

export interface SessionState {
  sessionId: string | null;
  corrected: string;
  annotations: Annotation[];
}

export type Language = "tr" | "en";
