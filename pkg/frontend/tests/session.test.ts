import { describe, expect, it } from "vitest";

import { runSession } from "../src/session.js";
import { Trial } from "../src/trial.js";
import { FakeClient, ManualClock } from "./fakes.js";

function driver(clock: ManualClock, holdMs: number) {
  return async (trial: Trial) => {
    trial.markTargetPainted();
    clock.advance(holdMs);
  };
}

describe("runSession", () => {
  it("posts exactly one trial per model", async () => {
    const client = new FakeClient();
    const clock = new ManualClock();
    const summary = await runSession({
      api: client,
      participantId: "p7",
      modelSequence: ["rgb", "hsv"],
      runTrial: driver(clock, 1500),
      now: clock.now,
    });
    expect(client.posted.length).toBe(2);
    expect(client.posted.map((t) => t.model)).toEqual(["rgb", "hsv"]);
    expect(client.posted.every((t) => t.participant_id === "p7")).toBe(true);
    expect(summary.trials.every((t) => t.posted && !t.abandoned)).toBe(true);
    expect(summary.exportUrl).toBe(client.exportUrl());
  });

  it("records elapsed seconds from the trial timer", async () => {
    const client = new FakeClient();
    const clock = new ManualClock();
    await runSession({
      api: client,
      participantId: "p",
      modelSequence: ["rgb"],
      runTrial: driver(clock, 2500),
      now: clock.now,
    });
    expect(client.posted[0].elapsed_s).toBeCloseTo(2.5, 9);
  });

  it("marks a trial abandoned when posting fails, and continues", async () => {
    const client = new FakeClient();
    client.failPostFor.add("rgb");
    const clock = new ManualClock();
    const summary = await runSession({
      api: client,
      participantId: "p",
      modelSequence: ["rgb", "hsv"],
      runTrial: driver(clock, 1000),
      now: clock.now,
    });
    expect(summary.trials[0]).toMatchObject({ model: "rgb", posted: false, abandoned: true });
    expect(summary.trials[1]).toMatchObject({ model: "hsv", posted: true, abandoned: false });
    expect(client.posted.map((t) => t.model)).toEqual(["hsv"]);
  });

  it("marks a trial abandoned when the target fetch fails", async () => {
    const client = new FakeClient();
    client.failTargetFor.add("hsv");
    const clock = new ManualClock();
    const summary = await runSession({
      api: client,
      participantId: "p",
      modelSequence: ["hsv", "rgb"],
      runTrial: driver(clock, 1000),
      now: clock.now,
    });
    expect(summary.trials[0].abandoned).toBe(true);
    expect(client.posted.map((t) => t.model)).toEqual(["rgb"]);
  });

  it("rejects an empty model sequence", async () => {
    const client = new FakeClient();
    await expect(
      runSession({
        api: client,
        participantId: "p",
        modelSequence: [],
        runTrial: async () => {},
      }),
    ).rejects.toThrow(/empty/);
  });

  it("rejects unknown models", async () => {
    const client = new FakeClient();
    await expect(
      runSession({
        api: client,
        participantId: "p",
        modelSequence: ["tsl"],
        runTrial: async () => {},
      }),
    ).rejects.toThrow(/does not offer/);
  });
});
