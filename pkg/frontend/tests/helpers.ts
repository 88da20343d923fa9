import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { Annotation, CorrectResponse, RuleSpec } from "../src/types";

const here = dirname(fileURLToPath(import.meta.url));

/** Mount the real page body (scripts stripped) into the test document. */
export function mountPage(): void {
  const html = readFileSync(join(here, "..", "index.html"), "utf-8");
  const body = html.slice(html.indexOf("<body>") + 6, html.indexOf("</body>"));
  document.body.innerHTML = body.replace(/<script[\s\S]*?<\/script>/g, "");
}

export const RULES: RuleSpec[] = [
  {
    rule_id: 102,
    mnemonic: "QUES_CLITIC_SEP",
    category: "QUESTION",
    color: "green",
    description_tr: "Soru eki ayrı yazılır.",
    description_en: "The question particle is written separately.",
    example_before: "istiyormusun",
    example_after: "istiyor musun",
  },
  {
    rule_id: 200,
    mnemonic: "SPELL",
    category: "SPELL",
    color: "gray",
    description_tr: "Yazım hatası düzeltildi.",
    description_en: "Spelling corrected.",
    example_before: "yapmk",
    example_after: "yapmak",
  },
];

export function twoErrorResponse(): CorrectResponse {
  const corrected = "Bu projeyi yapmak istiyor musun?";
  const annotations: Annotation[] = [
    {
      in_start: 11, in_end: 16, out_start: 11, out_end: 17,
      original_text: "yapmk", replacement: "yapmak",
      rule_id: 200, category: "SPELL", color: "gray",
      title: "SPELL", explanation: "Spelling corrected.",
    },
    {
      in_start: 17, in_end: 29, out_start: 18, out_end: 31,
      original_text: "istiyormusun", replacement: "istiyor musun",
      rule_id: 102, category: "QUESTION", color: "green",
      title: "QUES_CLITIC_SEP",
      explanation: "The question particle is written separately.",
    },
  ];
  return {
    session_id: "abc123",
    original: "Bu projeyi yapmk istiyormusun?",
    corrected,
    markup: "",
    annotations,
    engine_version: "0.1.0",
    lexicon_version: "1.0.0",
    elapsed_ms: 3.2,
  };
}

type Handler = (url: string, init?: RequestInit) => { status: number; body: unknown } | null;

export function stubFetch(handler: Handler): { calls: Array<[string, RequestInit | undefined]> } {
  const calls: Array<[string, RequestInit | undefined]> = [];
  const fake = async (url: string, init?: RequestInit): Promise<Response> => {
    calls.push([url, init]);
    const result = handler(url, init);
    if (!result) throw new TypeError("fetch failed");
    return {
      ok: result.status >= 200 && result.status < 300,
      status: result.status,
      json: async () => result.body,
    } as Response;
  };
  globalThis.fetch = fake as typeof fetch;
  return { calls };
}

export function stubClipboard(): { written: string[] } {
  const written: string[] = [];
  Object.defineProperty(navigator, "clipboard", {
    configurable: true,
    value: { writeText: async (text: string) => void written.push(text) },
  });
  return { written };
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
