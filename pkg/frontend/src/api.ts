// Typed client for the experiment service. The UI performs no color math of
// its own: every swatch color string comes back from POST /convert verbatim.

export interface ComponentSpec {
  name: string;
  min: number;
  max: number;
  step: number;
}

export interface ModelSpec {
  id: string;
  components: ComponentSpec[];
}

export interface TargetResponse {
  rgb_hex: string;
  trial_id: string;
}

export interface TrialPost {
  trial_id: string;
  participant_id: string;
  model: string;
  components: number[];
  elapsed_s: number;
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

/** What the trial/session logic needs from the service; PickerApi implements it. */
export interface PickerClient {
  models(): Promise<ModelSpec[]>;
  convert(model: string, components: number[]): Promise<string>;
  newTarget(model: string): Promise<TargetResponse>;
  postTrial(trial: TrialPost): Promise<void>;
  exportUrl(): string;
}

export class PickerApi implements PickerClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  async models(): Promise<ModelSpec[]> {
    const body = await this.request("GET", "/models");
    return (body as { models: ModelSpec[] }).models;
  }

  async convert(model: string, components: number[]): Promise<string> {
    const body = await this.request("POST", "/convert", { model, components });
    return (body as { rgb_hex: string }).rgb_hex;
  }

  async newTarget(model: string): Promise<TargetResponse> {
    return (await this.request("POST", "/target", { model })) as TargetResponse;
  }

  async postTrial(trial: TrialPost): Promise<void> {
    await this.request("POST", "/trial", trial);
  }

  exportUrl(): string {
    return `${this.baseUrl}/export`;
  }

  async exportCsv(): Promise<string> {
    const resp = await this.fetchImpl(this.exportUrl());
    if (!resp.ok) {
      throw new ApiError(resp.status, `export failed with ${resp.status}`);
    }
    return resp.text();
  }

  private async request(method: string, path: string, payload?: unknown): Promise<unknown> {
    const init: RequestInit = { method };
    if (payload !== undefined) {
      init.body = JSON.stringify(payload);
      init.headers = { "Content-Type": "application/json" };
    }
    const resp = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const text = await resp.text();
    if (!resp.ok) {
      let detail = text;
      try {
        detail = (JSON.parse(text) as { error?: string }).error ?? text;
      } catch {
        // leave raw text
      }
      throw new ApiError(resp.status, detail);
    }
    return text ? JSON.parse(text) : {};
  }
}
