// Sequences one participant through a list of models: fetch target, run the
// trial, post the record, advance. A network failure marks the trial as
// abandoned locally and the session moves on; nothing partial is posted.

import { ModelSpec, PickerClient } from "./api.js";
import { Trial, TrialDeps } from "./trial.js";

export interface SessionTrialRecord {
  model: string;
  elapsedS: number | null;
  posted: boolean;
  abandoned: boolean;
}

export interface SessionSummary {
  participantId: string;
  trials: SessionTrialRecord[];
  exportUrl: string;
}

export interface SessionOptions {
  api: PickerClient;
  participantId: string;
  /** model presentation order; configurable and recorded in the summary */
  modelSequence: string[];
  /**
   * Drives one trial: paint the target (markTargetPainted), move sliders,
   * and resolve when the participant confirms. In the browser this resolves
   * on the Confirm click; tests script it.
   */
  runTrial: (trial: Trial) => Promise<void>;
  now?: TrialDeps["now"];
  scheduler?: TrialDeps["scheduler"];
  onPreview?: TrialDeps["onPreview"];
}

export async function runSession(opts: SessionOptions): Promise<SessionSummary> {
  if (opts.modelSequence.length === 0) {
    throw new Error("model sequence must not be empty");
  }
  const available = await opts.api.models();
  const byId = new Map(available.map((m) => [m.id, m]));
  const specs: ModelSpec[] = opts.modelSequence.map((id) => {
    const spec = byId.get(id);
    if (!spec) {
      throw new Error(`service does not offer model ${id}`);
    }
    return spec;
  });

  const trials: SessionTrialRecord[] = [];
  for (const spec of specs) {
    const trial = new Trial(spec, {
      api: opts.api,
      now: opts.now,
      scheduler: opts.scheduler,
      onPreview: opts.onPreview,
    });
    try {
      await trial.begin();
      await opts.runTrial(trial);
      const result = trial.confirmed ? null : trial.confirm();
      if (result === null) {
        throw new Error("trial confirmed out of band");
      }
      await opts.api.postTrial({
        trial_id: result.trialId,
        participant_id: opts.participantId,
        model: result.model,
        components: result.components,
        elapsed_s: result.elapsedS,
      });
      trials.push({ model: spec.id, elapsedS: result.elapsedS, posted: true, abandoned: false });
    } catch {
      trials.push({ model: spec.id, elapsedS: null, posted: false, abandoned: true });
    }
  }
  return {
    participantId: opts.participantId,
    trials,
    exportUrl: opts.api.exportUrl(),
  };
}
