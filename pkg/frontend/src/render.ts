import type { Annotation, RuleSpec } from "./types";

export type ColorMap = Map<number, RuleSpec>;

export function buildColorMap(rules: RuleSpec[]): ColorMap {
  return new Map(rules.map((r) => [r.rule_id, r]));
}

function categorySlug(category: string): string {
  const ascii = category
    .toLowerCase()
    .replace(/ç/g, "c")
    .replace(/ğ/g, "g")
    .replace(/ı/g, "i")
    .replace(/ö/g, "o")
    .replace(/ş/g, "s")
    .replace(/ü/g, "u");
  return ascii.replace(/[^a-z0-9]+/g, "-").replace(/^-+|-+$/g, "") || "other";
}

/**
 * Render the corrected text into `target`, turning each annotation into a
 * colored button. Rendering walks the annotation document's output-space
 * offsets only; corrections are never recomputed client-side, and all text
 * lands in text nodes so markup in user input stays inert.
 */
export function renderAnnotatedText(
  doc: Document,
  target: HTMLElement,
  corrected: string,
  annotations: Annotation[],
  colors: ColorMap,
  onToggle: (index: number, button: HTMLButtonElement) => void,
): HTMLButtonElement[] {
  target.textContent = "";
  const buttons: HTMLButtonElement[] = [];
  let cursor = 0;
  const ordered = [...annotations].sort((a, b) => a.out_start - b.out_start);
  for (const [index, ann] of ordered.entries()) {
    if (ann.out_start > cursor) {
      appendPlain(doc, target, corrected.slice(cursor, ann.out_start));
    }
    const button = doc.createElement("button");
    button.type = "button";
    button.className = `gec-err gec-cat-${categorySlug(ann.category)}`;
    const rule = colors.get(ann.rule_id);
    button.style.backgroundColor = rule ? rule.color : ann.color;
    button.dataset.rule = String(ann.rule_id);
    button.dataset.index = String(index);
    button.setAttribute("aria-expanded", "false");
    button.textContent = corrected.slice(ann.out_start, ann.out_end);
    button.addEventListener("click", () => onToggle(index, button));
    target.appendChild(button);
    buttons.push(button);
    cursor = ann.out_end;
  }
  appendPlain(doc, target, corrected.slice(cursor));
  return buttons;
}

function appendPlain(doc: Document, target: HTMLElement, text: string): void {
  const parts = text.split("\n");
  parts.forEach((part, i) => {
    if (i > 0) target.appendChild(doc.createElement("br"));
    if (part) target.appendChild(doc.createTextNode(part));
  });
}

/** Pop-over body: rule title, explanation, and original → replacement. */
export function buildPopover(
  doc: Document,
  ann: Annotation,
  rule: RuleSpec | undefined,
  language: "tr" | "en",
): HTMLElement {
  const box = doc.createElement("div");
  box.className = "gec-popover";
  box.setAttribute("role", "tooltip");

  const title = doc.createElement("strong");
  title.className = "gec-popover-title";
  title.textContent = rule ? `${rule.category} · ${ann.title}` : ann.title;
  box.appendChild(title);

  const explanation = doc.createElement("p");
  explanation.className = "gec-popover-explanation";
  explanation.textContent =
    language === "tr" && rule ? rule.description_tr : ann.explanation;
  box.appendChild(explanation);

  const change = doc.createElement("p");
  change.className = "gec-popover-change";
  change.textContent = `${ann.original_text} → ${ann.replacement}`;
  box.appendChild(change);
  return box;
}
