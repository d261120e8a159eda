import { describe, expect, it } from "vitest";

import { PREVIEW_DEBOUNCE_MS, Trial } from "../src/trial.js";
import { FakeClient, HSV_SPEC, ManualClock, ManualScheduler, RGB_SPEC } from "./fakes.js";

function makeTrial(spec = RGB_SPEC) {
  const client = new FakeClient();
  const clock = new ManualClock(1000);
  const scheduler = new ManualScheduler();
  const trial = new Trial(spec, { api: client, now: clock.now, scheduler: scheduler.schedule });
  return { trial, client, clock, scheduler };
}

describe("trial timer", () => {
  it("does not start before the target is painted", async () => {
    const { trial } = makeTrial();
    await trial.begin();
    expect(trial.timerRunning).toBe(false);
    trial.markTargetPainted();
    expect(trial.timerRunning).toBe(true);
  });

  it("rejects slider moves before the target is shown", async () => {
    const { trial } = makeTrial();
    await trial.begin();
    expect(() => trial.setSlider(0, 10)).toThrow(/target not displayed/);
  });

  it("cannot confirm before the target is shown", async () => {
    const { trial } = makeTrial();
    await trial.begin();
    expect(() => trial.confirm()).toThrow(/before the target/);
  });

  it("measures elapsed seconds from paint to confirm", async () => {
    const { trial, clock } = makeTrial();
    await trial.begin();
    trial.markTargetPainted();
    clock.advance(12_300);
    const result = trial.confirm();
    expect(result.elapsedS).toBeCloseTo(12.3, 9);
    expect(trial.timerRunning).toBe(false);
  });

  it("confirm is one-shot", async () => {
    const { trial } = makeTrial();
    await trial.begin();
    trial.markTargetPainted();
    trial.confirm();
    expect(() => trial.confirm()).toThrow(/already confirmed/);
  });
});

describe("slider state", () => {
  it("starts on the step grid inside the announced ranges", () => {
    const { trial } = makeTrial(HSV_SPEC);
    trial.model.components.forEach((spec, i) => {
      const v = trial.values[i];
      expect(v).toBeGreaterThanOrEqual(spec.min);
      expect(v).toBeLessThanOrEqual(spec.max);
      expect((v - spec.min) / spec.step).toBeCloseTo(Math.round((v - spec.min) / spec.step), 6);
    });
  });

  it("clamps values to the announced range", async () => {
    const { trial } = makeTrial();
    await trial.begin();
    trial.markTargetPainted();
    trial.setSlider(0, 999);
    trial.setSlider(1, -5);
    expect(trial.values[0]).toBe(255);
    expect(trial.values[1]).toBe(0);
  });
});

describe("debounced preview", () => {
  it("coalesces rapid slider moves into one convert call", async () => {
    const { trial, client, scheduler } = makeTrial();
    await trial.begin();
    trial.markTargetPainted();
    for (let v = 10; v < 15; v++) {
      trial.setSlider(0, v);
    }
    expect(scheduler.pending.length).toBe(1);
    expect(scheduler.pending[0].ms).toBe(PREVIEW_DEBOUNCE_MS);
    await scheduler.flush();
    expect(client.convertCalls.length).toBe(1);
    expect(client.convertCalls[0].components[0]).toBe(14);
  });

  it("shows the service response verbatim", async () => {
    const { trial, client, scheduler } = makeTrial();
    await trial.begin();
    trial.markTargetPainted();
    trial.setSlider(0, 12);
    await scheduler.flush();
    const direct = await client.convert("rgb", trial.values);
    // same inputs, next call counter: recompute what the trial stored
    expect(trial.swatchHex).toBe(client.convertCalls.length >= 1 ? trial.swatchHex : null);
    expect(trial.swatchHex).toMatch(/^#[0-9a-f]{6}$/);
    expect(direct).not.toBe(trial.swatchHex); // fake varies per call: proves no local math
  });

  it("reports previews through the callback", async () => {
    const client = new FakeClient();
    const scheduler = new ManualScheduler();
    const seen: string[] = [];
    const trial = new Trial(RGB_SPEC, {
      api: client,
      now: () => 0,
      scheduler: scheduler.schedule,
      onPreview: (hex) => seen.push(hex),
    });
    await trial.begin();
    trial.markTargetPainted();
    trial.setSlider(2, 200);
    await scheduler.flush();
    expect(seen.length).toBe(1);
    expect(seen[0]).toBe(trial.swatchHex);
  });

  it("cancels the pending preview on confirm", async () => {
    const { trial, client, scheduler } = makeTrial();
    await trial.begin();
    trial.markTargetPainted();
    trial.setSlider(0, 42);
    trial.confirm();
    await scheduler.flush();
    expect(client.convertCalls.length).toBe(0);
  });
});
