// One matching trial: slider state, debounced live preview, and the completion
// timer. The timer runs from the moment the target is first painted until the
// participant confirms; slider interaction before that is rejected outright.

import { ModelSpec, PickerClient } from "./api.js";

export const PREVIEW_DEBOUNCE_MS = 100;

export type CancelTimer = () => void;
export type Scheduler = (fn: () => void, ms: number) => CancelTimer;

const defaultScheduler: Scheduler = (fn, ms) => {
  const handle = setTimeout(fn, ms);
  return () => clearTimeout(handle);
};

export interface TrialDeps {
  api: PickerClient;
  /** millisecond clock; defaults to performance.now / Date.now */
  now?: () => number;
  scheduler?: Scheduler;
  /** called whenever the preview swatch changes */
  onPreview?: (hex: string) => void;
}

export interface TrialResult {
  trialId: string;
  model: string;
  components: number[];
  elapsedS: number;
}

export class Trial {
  readonly values: number[];
  targetHex: string | null = null;
  trialId: string | null = null;
  /** last swatch hex, byte-for-byte as returned by /convert */
  swatchHex: string | null = null;
  confirmed = false;

  private startedAt: number | null = null;
  private cancelPending: CancelTimer | null = null;
  private readonly now: () => number;
  private readonly scheduler: Scheduler;

  constructor(
    readonly model: ModelSpec,
    private readonly deps: TrialDeps,
  ) {
    this.now = deps.now ?? (() => (typeof performance !== "undefined" ? performance.now() : Date.now()));
    this.scheduler = deps.scheduler ?? defaultScheduler;
    this.values = model.components.map((c) => clamp(midpoint(c.min, c.max, c.step), c.min, c.max));
  }

  /** Fetch the target color; the timer does not start yet. */
  async begin(): Promise<void> {
    const target = await this.deps.api.newTarget(this.model.id);
    this.targetHex = target.rgb_hex;
    this.trialId = target.trial_id;
  }

  /** The view calls this once the target square is actually on screen. */
  markTargetPainted(): void {
    if (this.targetHex === null) {
      throw new Error("no target fetched yet");
    }
    if (this.startedAt === null) {
      this.startedAt = this.now();
    }
  }

  get timerRunning(): boolean {
    return this.startedAt !== null && !this.confirmed;
  }

  setSlider(index: number, value: number): void {
    if (this.startedAt === null) {
      throw new Error("target not displayed yet; sliders are inactive");
    }
    if (this.confirmed) {
      throw new Error("trial already confirmed");
    }
    const spec = this.model.components[index];
    if (spec === undefined) {
      throw new Error(`no component ${index} in ${this.model.id}`);
    }
    this.values[index] = clamp(value, spec.min, spec.max);
    this.schedulePreview();
  }

  /** Debounced: many slider moves inside the window cost one /convert call. */
  private schedulePreview(): void {
    if (this.cancelPending) {
      this.cancelPending();
    }
    this.cancelPending = this.scheduler(() => {
      this.cancelPending = null;
      void this.refreshPreview().catch(() => {
        // preview failures are non-fatal; the next slider move retries
      });
    }, PREVIEW_DEBOUNCE_MS);
  }

  async refreshPreview(): Promise<string> {
    const hex = await this.deps.api.convert(this.model.id, [...this.values]);
    this.swatchHex = hex;
    this.deps.onPreview?.(hex);
    return hex;
  }

  /** Stop the timer and report the result; posting is the session's job. */
  confirm(): TrialResult {
    if (this.startedAt === null || this.trialId === null) {
      throw new Error("cannot confirm before the target is displayed");
    }
    if (this.confirmed) {
      throw new Error("trial already confirmed");
    }
    this.confirmed = true;
    if (this.cancelPending) {
      this.cancelPending();
      this.cancelPending = null;
    }
    const elapsedS = (this.now() - this.startedAt) / 1000;
    return {
      trialId: this.trialId,
      model: this.model.id,
      components: [...this.values],
      elapsedS,
    };
  }
}

function clamp(v: number, lo: number, hi: number): number {
  return v < lo ? lo : v > hi ? hi : v;
}

function midpoint(lo: number, hi: number, step: number): number {
  const mid = lo + (hi - lo) / 2;
  // snap to the slider's step grid so the initial state is reachable by hand
  return lo + Math.round((mid - lo) / step) * step;
}
