// Browser view: target swatch, live preview swatch, one labeled slider per
// component, and the Confirm control. All color values on screen come from
// the service; this file only moves strings around.

import { ModelSpec } from "./api.js";
import { Trial } from "./trial.js";

export interface TrialView {
  root: HTMLElement;
  /** resolves when the participant clicks Confirm */
  confirmed: Promise<void>;
  setPreview: (hex: string) => void;
}

export function renderTrial(container: HTMLElement, trial: Trial, index: number, total: number): TrialView {
  const root = el("section", "trial");
  root.append(el("h2", "", `Trial ${index + 1} of ${total}: ${trial.model.id.toUpperCase()}`));

  const swatches = el("div", "swatches");
  const target = el("div", "swatch target");
  const preview = el("div", "swatch preview");
  swatches.append(labeled("target", target), labeled("your color", preview));
  root.append(swatches);

  if (trial.targetHex === null) {
    throw new Error("renderTrial needs a fetched target");
  }
  target.style.background = trial.targetHex;

  const sliders = el("div", "sliders");
  trial.model.components.forEach((spec, i) => {
    const row = el("label", "slider-row");
    const readout = el("span", "readout", String(trial.values[i]));
    const input = document.createElement("input");
    input.type = "range";
    input.min = String(spec.min);
    input.max = String(spec.max);
    input.step = String(spec.step);
    input.value = String(trial.values[i]);
    input.addEventListener("input", () => {
      trial.setSlider(i, Number(input.value));
      readout.textContent = input.value;
    });
    row.append(el("span", "name", `${spec.name} [${spec.min}..${spec.max}]`), input, readout);
    sliders.append(row);
  });
  root.append(sliders);

  const confirmBtn = document.createElement("button");
  confirmBtn.textContent = "Confirm match";
  root.append(confirmBtn);

  const confirmed = new Promise<void>((resolve) => {
    confirmBtn.addEventListener("click", () => {
      confirmBtn.disabled = true;
      resolve();
    });
  });

  container.replaceChildren(root);
  // the timer starts only once the target square is actually in the document
  requestAnimationFrame(() => trial.markTargetPainted());

  return {
    root,
    confirmed,
    setPreview: (hex: string) => {
      preview.style.background = hex;
      preview.dataset.hex = hex;
    },
  };
}

export function renderSummary(
  container: HTMLElement,
  trials: { model: string; elapsedS: number | null; posted: boolean }[],
  exportUrl: string,
): void {
  const root = el("section", "summary");
  root.append(el("h2", "", "Session complete"));
  const list = el("ul");
  for (const t of trials) {
    const status = t.posted ? `${t.elapsedS?.toFixed(1)} s` : "abandoned";
    list.append(el("li", "", `${t.model.toUpperCase()}: ${status}`));
  }
  root.append(list);
  const link = document.createElement("a");
  link.href = exportUrl;
  link.textContent = "Export session CSV";
  link.download = "sessions.csv";
  root.append(link);
  container.replaceChildren(root);
}

export function renderBlockingBanner(container: HTMLElement, message: string): void {
  container.replaceChildren(el("div", "banner error", message));
}

export function renderModelForm(
  container: HTMLElement,
  models: ModelSpec[],
  onStart: (participantId: string, sequence: string[]) => void,
): void {
  const root = el("section", "setup");
  root.append(el("h2", "", "Color matching session"));

  const pidLabel = el("label", "", "Participant id ");
  const pid = document.createElement("input");
  pid.type = "text";
  pid.value = "p1";
  pidLabel.append(pid);
  root.append(pidLabel);

  const seqLabel = el("label", "", "Models (comma separated, in order) ");
  const seq = document.createElement("input");
  seq.type = "text";
  seq.value = models.map((m) => m.id).join(",");
  seq.size = 60;
  seqLabel.append(seq);
  root.append(seqLabel);

  const start = document.createElement("button");
  start.textContent = "Start session";
  start.addEventListener("click", () => {
    const sequence = seq.value
      .split(",")
      .map((s) => s.trim())
      .filter((s) => s.length > 0);
    onStart(pid.value.trim() || "anonymous", sequence);
  });
  root.append(start);
  container.replaceChildren(root);
}

function labeled(text: string, inner: HTMLElement): HTMLElement {
  const wrap = el("div", "labeled");
  wrap.append(el("div", "caption", text), inner);
  return wrap;
}

function el(tag: string, className = "", text = ""): HTMLElement {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text) {
    node.textContent = text;
  }
  return node;
}
