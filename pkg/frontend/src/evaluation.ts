/** Debounced re-evaluation loop: config edits coalesce into one POST
 * /scenario per quiet window, superseded requests are cancelled, and stale
 * responses are dropped by the store's tag check. */

import type { ApiClient } from "./api.js";
import { SupersededError } from "./api.js";
import { Debouncer } from "./debounce.js";
import type { SessionStore } from "./state.js";

export const DEFAULT_DEBOUNCE_MS = 300;

export class EvaluationLoop {
  private readonly debouncer: Debouncer<string>;
  evaluationsStarted = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly store: SessionStore,
    windowMs: number = DEFAULT_DEBOUNCE_MS,
    private readonly onError: (message: string) => void = () => {},
  ) {
    this.debouncer = new Debouncer<string>(windowMs, (tag) => {
      void this.evaluate(tag);
    });
  }

  /** Call after every config edit; bursts collapse to one evaluation. */
  configEdited(): void {
    this.debouncer.schedule(this.store.configTag());
  }

  flushNow(): void {
    this.debouncer.flushNow();
  }

  private async evaluate(tag: string): Promise<void> {
    const config = this.store.activeConfig();
    if (config === null || tag !== this.store.configTag()) return; // superseded
    this.evaluationsStarted += 1;
    try {
      const results = await this.api.evaluateScenario(config);
      this.store.acceptResults(tag, results);
    } catch (error) {
      if (error instanceof SupersededError) return;
      this.onError(error instanceof Error ? error.message : String(error));
    }
  }
}
