/** A burst of lever edits must trigger exactly one evaluation per debounce
 * window, with superseded requests cancelled and stale responses dropped. */

import { readFileSync } from "node:fs";
import { join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { Debouncer } from "../src/debounce.js";
import { EvaluationLoop } from "../src/evaluation.js";
import { SessionStore } from "../src/state.js";
import type { ResultsDto, ScenarioConfigDto } from "../src/types.js";

const here = fileURLToPath(new URL(".", import.meta.url));
const defaults = JSON.parse(
  readFileSync(join(here, "fixtures", "defaults.json"), "utf8"),
) as Record<string, ScenarioConfigDto>;
const resultsFixture = JSON.parse(
  readFileSync(join(here, "fixtures", "fixed-cp-results.json"), "utf8"),
) as ResultsDto;

beforeEach(() => {
  vi.useFakeTimers();
});

afterEach(() => {
  vi.useRealTimers();
});

describe("Debouncer", () => {
  it("coalesces a burst into one trailing call with the latest value", () => {
    const fired: number[] = [];
    const debouncer = new Debouncer<number>(250, (v) => fired.push(v));
    for (let i = 0; i < 7; i += 1) {
      debouncer.schedule(i);
      vi.advanceTimersByTime(40); // all edits inside one quiet window
    }
    expect(fired).toEqual([]);
    vi.advanceTimersByTime(250);
    expect(fired).toEqual([6]);
  });

  it("fires once per window across separated bursts", () => {
    const fired: string[] = [];
    const debouncer = new Debouncer<string>(100, (v) => fired.push(v));
    debouncer.schedule("a");
    vi.advanceTimersByTime(100);
    debouncer.schedule("b");
    debouncer.schedule("c");
    vi.advanceTimersByTime(100);
    expect(fired).toEqual(["a", "c"]);
  });

  it("cancel drops the pending value", () => {
    const fired: string[] = [];
    const debouncer = new Debouncer<string>(100, (v) => fired.push(v));
    debouncer.schedule("doomed");
    debouncer.cancel();
    vi.advanceTimersByTime(500);
    expect(fired).toEqual([]);
  });
});

describe("EvaluationLoop", () => {
  function makeLoop(windowMs = 300) {
    let calls = 0;
    const fetchFn = async (): Promise<Response> => {
      calls += 1;
      return new Response(JSON.stringify(resultsFixture), {
        status: 200,
        headers: { "content-type": "application/json" },
      });
    };
    const api = new ApiClient("", fetchFn);
    const store = new SessionStore();
    const issues = store.setConfig(
      structuredClone(defaults["fixed-construction-proficiency"]!),
    );
    expect(issues).toEqual([]);
    const loop = new EvaluationLoop(api, store, windowMs);
    return { loop, store, callCount: () => calls };
  }

  it("a slider drag triggers exactly one evaluation per debounce window", async () => {
    const { loop, store, callCount } = makeLoop(300);
    for (let step = 0; step < 10; step += 1) {
      const issues = store.setLever("dc", 1, 1, step / 10);
      expect(issues).toEqual([]);
      loop.configEdited();
      await vi.advanceTimersByTimeAsync(25);
    }
    expect(callCount()).toBe(0); // still inside the window
    await vi.advanceTimersByTimeAsync(300);
    expect(callCount()).toBe(1);
    expect(loop.evaluationsStarted).toBe(1);
  });

  it("a second quiet window triggers a second evaluation", async () => {
    const { loop, store, callCount } = makeLoop(200);
    store.setLever("aep", 1, 1, 0.4);
    loop.configEdited();
    await vi.advanceTimersByTimeAsync(200);
    store.setLever("aep", 1, 1, 0.8);
    loop.configEdited();
    await vi.advanceTimersByTimeAsync(200);
    expect(callCount()).toBe(2);
  });

  it("drops responses for configs that changed while in flight", async () => {
    let calls = 0;
    const fetchFn = async (): Promise<Response> => {
      calls += 1;
      return new Response(JSON.stringify(resultsFixture), { status: 200 });
    };
    const store = new SessionStore();
    store.setConfig(structuredClone(defaults["fixed-construction-proficiency"]!));
    const loop = new EvaluationLoop(new ApiClient("", fetchFn), store, 100);
    loop.configEdited();
    await vi.advanceTimersByTimeAsync(100);
    expect(calls).toBe(1);
    // response for the old config: edit again before accepting anything new
    store.setLever("cp", 1, 1, 1.0);
    expect(store.resultsAreCurrent()).toBe(false);
  });
});
