import { beforeEach, describe, expect, it, vi } from "vitest";

import { buildColorMap, buildPopover, renderAnnotatedText } from "../src/render";
import { RULES, twoErrorResponse } from "./helpers";

describe("renderAnnotatedText", () => {
  let target: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = '<div id="out"></div>';
    target = document.getElementById("out") as HTMLElement;
  });

  it("renders one button per annotation with catalog colors", () => {
    const response = twoErrorResponse();
    const buttons = renderAnnotatedText(
      document, target, response.corrected, response.annotations,
      buildColorMap(RULES), vi.fn(),
    );
    expect(buttons).toHaveLength(2);
    expect(buttons[0].textContent).toBe("yapmak");
    expect(buttons[0].style.backgroundColor).toBe("gray");
    expect(buttons[1].textContent).toBe("istiyor musun");
    expect(buttons[1].style.backgroundColor).toBe("green");
    expect(target.textContent).toBe("Bu projeyi yapmak istiyor musun?");
  });

  it("slices strictly by output offsets", () => {
    const response = twoErrorResponse();
    renderAnnotatedText(
      document, target, response.corrected, response.annotations,
      new Map(), vi.fn(),
    );
    const plain = Array.from(target.childNodes)
      .filter((n) => n.nodeType === 3)
      .map((n) => n.textContent)
      .join("|");
    expect(plain).toBe("Bu projeyi | |?");
  });

  it("falls back to the annotation color when the rule is unknown", () => {
    const response = twoErrorResponse();
    const buttons = renderAnnotatedText(
      document, target, response.corrected, response.annotations,
      new Map(), vi.fn(),
    );
    expect(buttons[0].style.backgroundColor).toBe("gray");
  });

  it("keeps markup-like text inert", () => {
    const corrected = 'önce <script>alert("x")</script> sonra';
    renderAnnotatedText(document, target, corrected, [], new Map(), vi.fn());
    expect(target.querySelector("script")).toBeNull();
    expect(target.textContent).toBe(corrected);
  });

  it("keeps markup-like replacement text inert", () => {
    const corrected = "a <img src=x onerror=alert(1)> b";
    const annotation = {
      ...twoErrorResponse().annotations[0],
      out_start: 2,
      out_end: 30,
      replacement: "<img src=x onerror=alert(1)>",
      original_text: "<img>",
    };
    renderAnnotatedText(document, target, corrected, [annotation], new Map(), vi.fn());
    expect(target.querySelector("img")).toBeNull();
    expect(target.querySelector("button")?.textContent).toContain("<img");
  });

  it("invokes the toggle callback with the annotation index", () => {
    const onToggle = vi.fn();
    const response = twoErrorResponse();
    const buttons = renderAnnotatedText(
      document, target, response.corrected, response.annotations,
      buildColorMap(RULES), onToggle,
    );
    buttons[1].click();
    expect(onToggle).toHaveBeenCalledWith(1, buttons[1]);
  });
});

describe("buildPopover", () => {
  it("shows title, explanation and the change", () => {
    const ann = twoErrorResponse().annotations[1];
    const rule = RULES.find((r) => r.rule_id === 102);
    const box = buildPopover(document, ann, rule, "en");
    expect(box.querySelector(".gec-popover-title")?.textContent).toContain(
      "QUES_CLITIC_SEP",
    );
    expect(box.querySelector(".gec-popover-explanation")?.textContent).toBe(
      "The question particle is written separately.",
    );
    expect(box.querySelector(".gec-popover-change")?.textContent).toBe(
      "istiyormusun → istiyor musun",
    );
  });

  it("uses the Turkish description when the language is tr", () => {
    const ann = twoErrorResponse().annotations[1];
    const rule = RULES.find((r) => r.rule_id === 102);
    const box = buildPopover(document, ann, rule, "tr");
    expect(box.querySelector(".gec-popover-explanation")?.textContent).toBe(
      "Soru eki ayrı yazılır.",
    );
  });
});
