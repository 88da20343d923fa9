import { ApiClient, ApiError } from "./api";
import { buildColorMap, buildPopover, renderAnnotatedText, type ColorMap } from "./render";
import type { Language, RuleSpec, SessionState } from "./types";

const LABELS: Record<Language, Record<string, string>> = {
  tr: {
    input: "Girdi",
    output: "Çıktı",
    find: "Yanlışları Bul",
    finding: "Denetleniyor…",
    copy: "Metni Kopyala",
    copied: "Kopyalandı!",
    stillWrong: "Bu Hâlâ Hatalı",
    giveFeedback: "Geri Bildirim Vermek İster Misin?",
    send: "Gönder",
    cancel: "Vazgeç",
    stillWrongPrompt: "Cümlenin doğru halini yazın:",
    feedbackPrompt: "Görüşleriniz:",
    emptyInput: "Lütfen önce bir metin girin.",
    emptyFeedback: "Boş geri bildirim gönderilemez.",
    sent: "Teşekkürler, kaydedildi.",
    unreachable: "Servise ulaşılamıyor. Daha sonra tekrar deneyin.",
    tooLong: "Metin izin verilen uzunluğu aşıyor.",
    retry: "Tekrar dene",
  },
  en: {
    input: "Input",
    output: "Output",
    find: "Find Errors",
    finding: "Checking…",
    copy: "Copy Text",
    copied: "Copied!",
    stillWrong: "Still Erroneous",
    giveFeedback: "Give Feedback",
    send: "Send",
    cancel: "Cancel",
    stillWrongPrompt: "Type the correct version of the sentence:",
    feedbackPrompt: "Your comments:",
    emptyInput: "Please enter some text first.",
    emptyFeedback: "Feedback cannot be empty.",
    sent: "Thanks, recorded.",
    unreachable: "Service unreachable. Please retry later.",
    tooLong: "The text exceeds the allowed length.",
    retry: "Retry",
  },
};

export interface AppHandles {
  state: {
    session: SessionState | null;
    busy: boolean;
    activePopover: number | null;
    language: Language;
  };
  submit(): Promise<void>;
  copyText(): Promise<void>;
  ready: Promise<void>;
}

export function initApp(doc: Document, api: ApiClient): AppHandles {
  const $ = <T extends HTMLElement>(id: string): T => {
    const el = doc.getElementById(id);
    if (!el) throw new Error(`missing element #${id}`);
    return el as T;
  };

  const input = $<HTMLTextAreaElement>("input-text");
  const output = $<HTMLElement>("output-pane");
  const findButton = $<HTMLButtonElement>("find-errors");
  const copyButton = $<HTMLButtonElement>("copy-text");
  const stillWrongButton = $<HTMLButtonElement>("still-erroneous");
  const feedbackButton = $<HTMLButtonElement>("general-feedback");
  const banner = $<HTMLElement>("error-banner");
  const status = $<HTMLElement>("status-line");
  const languageToggle = $<HTMLButtonElement>("language-toggle");

  const stillWrongModal = $<HTMLElement>("still-erroneous-modal");
  const stillWrongText = $<HTMLTextAreaElement>("still-erroneous-text");
  const stillWrongSend = $<HTMLButtonElement>("still-erroneous-send");
  const stillWrongCancel = $<HTMLButtonElement>("still-erroneous-cancel");

  const feedbackModal = $<HTMLElement>("feedback-modal");
  const feedbackText = $<HTMLTextAreaElement>("feedback-text");
  const feedbackSend = $<HTMLButtonElement>("feedback-send");
  const feedbackCancel = $<HTMLButtonElement>("feedback-cancel");

  const state: AppHandles["state"] = {
    session: null,
    busy: false,
    activePopover: null,
    language: "tr",
  };
  let colors: ColorMap = new Map();
  let ruleIndex: Map<number, RuleSpec> = new Map();
  let buttons: HTMLButtonElement[] = [];
  let annotationsSorted: ReturnType<typeof sortedAnnotations> = [];

  const t = (key: string): string => LABELS[state.language][key] ?? key;

  function sortedAnnotations(session: SessionState | null) {
    return session
      ? [...session.annotations].sort((a, b) => a.out_start - b.out_start)
      : [];
  }

  function applyLabels(): void {
    $<HTMLElement>("input-label").textContent = t("input");
    $<HTMLElement>("output-label").textContent = t("output");
    findButton.textContent = state.busy ? t("finding") : t("find");
    copyButton.textContent = t("copy");
    stillWrongButton.textContent = t("stillWrong");
    feedbackButton.textContent = t("giveFeedback");
    $<HTMLElement>("still-erroneous-prompt").textContent = t("stillWrongPrompt");
    $<HTMLElement>("feedback-prompt").textContent = t("feedbackPrompt");
    stillWrongSend.textContent = t("send");
    feedbackSend.textContent = t("send");
    stillWrongCancel.textContent = t("cancel");
    feedbackCancel.textContent = t("cancel");
    languageToggle.textContent = state.language === "tr" ? "EN" : "TR";
  }

  function setBusy(busy: boolean): void {
    state.busy = busy;
    findButton.disabled = busy;
    findButton.textContent = busy ? t("finding") : t("find");
  }

  function syncSessionControls(): void {
    const enabled = state.session !== null;
    copyButton.disabled = !enabled;
    stillWrongButton.disabled = !enabled;
  }

  function showError(message: string, retry?: () => void): void {
    banner.textContent = "";
    banner.appendChild(doc.createTextNode(message));
    if (retry) {
      const again = doc.createElement("button");
      again.type = "button";
      again.id = "retry-action";
      again.textContent = t("retry");
      again.addEventListener("click", () => {
        banner.hidden = true;
        void retry();
      });
      banner.appendChild(doc.createTextNode(" "));
      banner.appendChild(again);
    }
    banner.hidden = false;
  }

  function clearError(): void {
    banner.hidden = true;
    banner.textContent = "";
  }

  function closePopover(): void {
    state.activePopover = null;
    for (const open of Array.from(doc.querySelectorAll(".gec-popover"))) {
      open.remove();
    }
    for (const b of buttons) b.setAttribute("aria-expanded", "false");
  }

  function togglePopover(index: number, button: HTMLButtonElement): void {
    if (state.activePopover === index) {
      closePopover();
      return;
    }
    closePopover();
    const ann = annotationsSorted[index];
    if (!ann) return;
    state.activePopover = index;
    const popover = buildPopover(doc, ann, ruleIndex.get(ann.rule_id), state.language);
    button.insertAdjacentElement("afterend", popover);
    button.setAttribute("aria-expanded", "true");
  }

  function renderSession(): void {
    closePopover();
    if (!state.session) {
      output.textContent = "";
      buttons = [];
      annotationsSorted = [];
      return;
    }
    annotationsSorted = sortedAnnotations(state.session);
    buttons = renderAnnotatedText(
      doc,
      output,
      state.session.corrected,
      annotationsSorted,
      colors,
      togglePopover,
    );
  }

  async function submit(): Promise<void> {
    if (state.busy) return;
    clearError();
    status.textContent = "";
    const text = input.value;
    if (!text.trim()) {
      showError(t("emptyInput"));
      return;
    }
    setBusy(true);
    try {
      const response = await api.correct(text);
      state.session = {
        sessionId: response.session_id,
        corrected: response.corrected,
        annotations: response.annotations,
      };
      renderSession();
    } catch (err) {
      state.session = null;
      renderSession();
      if (err instanceof ApiError && err.status === 413) {
        showError(t("tooLong"));
      } else {
        showError(t("unreachable"), submit);
      }
    } finally {
      setBusy(false);
      syncSessionControls();
    }
  }

  async function copyText(): Promise<void> {
    if (!state.session) return;
    await navigator.clipboard.writeText(state.session.corrected);
    status.textContent = t("copied");
  }

  function openStillWrong(): void {
    if (!state.session) return;
    stillWrongText.value = state.session.corrected;
    stillWrongModal.hidden = false;
  }

  async function sendStillWrong(): Promise<void> {
    const session = state.session;
    if (!session || !session.sessionId) return;
    const text = stillWrongText.value;
    if (!text.trim()) {
      showError(t("emptyFeedback"));
      return;
    }
    try {
      await api.sendSessionFeedback(session.sessionId, text);
      stillWrongModal.hidden = true;
      status.textContent = t("sent");
      clearError();
    } catch {
      showError(t("unreachable"), sendStillWrong);
    }
  }

  function openFeedback(): void {
    feedbackText.value = "";
    feedbackModal.hidden = false;
  }

  async function sendFeedback(): Promise<void> {
    const message = feedbackText.value;
    if (!message.trim()) {
      showError(t("emptyFeedback"));
      return;
    }
    try {
      await api.sendGeneralFeedback(message);
      feedbackModal.hidden = true;
      status.textContent = t("sent");
      clearError();
    } catch {
      showError(t("unreachable"), sendFeedback);
    }
  }

  findButton.addEventListener("click", () => void submit());
  copyButton.addEventListener("click", () => void copyText());
  stillWrongButton.addEventListener("click", openStillWrong);
  feedbackButton.addEventListener("click", openFeedback);
  stillWrongSend.addEventListener("click", () => void sendStillWrong());
  stillWrongCancel.addEventListener("click", () => (stillWrongModal.hidden = true));
  feedbackSend.addEventListener("click", () => void sendFeedback());
  feedbackCancel.addEventListener("click", () => (feedbackModal.hidden = true));
  languageToggle.addEventListener("click", () => {
    state.language = state.language === "tr" ? "en" : "tr";
    applyLabels();
    if (state.activePopover !== null) {
      const index = state.activePopover;
      closePopover();
      const button = buttons[index];
      if (button) togglePopover(index, button);
    }
  });

  applyLabels();
  syncSessionControls();

  const ready = api
    .rules()
    .then((response) => {
      colors = buildColorMap(response.rules);
      ruleIndex = new Map(response.rules.map((r) => [r.rule_id, r]));
    })
    .catch(() => {
      showError(t("unreachable"));
    });

  return { state, submit, copyText, ready };
}
