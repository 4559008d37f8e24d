/** Debouncer that coalesces a burst of edits into one trailing call.
 *
 * Each `schedule` replaces the pending value and restarts the window, so a
 * slider drag produces exactly one fire per quiet period. `flushNow` fires
 * a pending value immediately; `cancel` drops it.
 */

export class Debouncer<T> {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private pending: { value: T } | null = null;

  constructor(
    private readonly windowMs: number,
    private readonly fire: (latest: T) => void,
  ) {}

  schedule(value: T): void {
    this.pending = { value };
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => this.flushNow(), this.windowMs);
  }

  flushNow(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (this.pending !== null) {
      const { value } = this.pending;
      this.pending = null;
      this.fire(value);
    }
  }

  cancel(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = null;
    this.pending = null;
  }

  hasPending(): boolean {
    return this.pending !== null;
  }
}
