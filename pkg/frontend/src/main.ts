import { PickerApi } from "./api.js";
import { renderBlockingBanner, renderModelForm, renderSummary, renderTrial } from "./dom.js";
import { runSession } from "./session.js";
import { Trial } from "./trial.js";

const DEFAULT_SERVICE = "http://127.0.0.1:8765";

function serviceUrl(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("service") ?? DEFAULT_SERVICE;
}

async function boot(): Promise<void> {
  const container = document.getElementById("app");
  if (!container) {
    throw new Error("missing #app container");
  }
  const api = new PickerApi(serviceUrl());

  let models;
  try {
    models = await api.models();
  } catch {
    // no timer may start if the service is unreachable
    renderBlockingBanner(
      container,
      `Experiment service unreachable at ${api.baseUrl}. Start it with: colorlab serve`,
    );
    return;
  }

  renderModelForm(container, models, (participantId, sequence) => {
    void startSession(container, api, participantId, sequence);
  });
}

async function startSession(
  container: HTMLElement,
  api: PickerApi,
  participantId: string,
  sequence: string[],
): Promise<void> {
  let index = 0;
  let showPreview: ((hex: string) => void) | null = null;

  const summary = await runSession({
    api,
    participantId,
    modelSequence: sequence,
    onPreview: (hex) => showPreview?.(hex),
    runTrial: async (trial: Trial) => {
      const view = renderTrial(container, trial, index++, sequence.length);
      showPreview = view.setPreview;
      try {
        await view.confirmed;
      } finally {
        showPreview = null;
      }
    },
  });
  renderSummary(container, summary.trials, summary.exportUrl);
}

void boot();
