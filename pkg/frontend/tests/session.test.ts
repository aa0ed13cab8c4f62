import { describe, expect, test } from "vitest";

import { PlaygroundService } from "../src/client.js";
import { PlaygroundSession } from "../src/session.js";
import {
  ApplyResponse,
  DeltaEvalOk,
  DeltaEvalResponse,
  DeltaNode,
  ParseResponse,
  TermNode,
} from "../src/wire.js";

const unit: TermNode = { kind: "unit" };
const epsUnit: DeltaNode = { kind: "eps", at: unit };

const okEval = (tag: string): DeltaEvalOk => ({
  src: unit,
  tgt: unit,
  value_delta: { kind: "eps", at: { kind: "var", name: tag } },
  src_value: { kind: "var", name: tag },
  tgt_value: unit,
});

type Step<T> = (signal?: AbortSignal) => Promise<T>;

/** A scripted stand-in for the HTTP client: each method takes its answers
 * from a queue and falls back to a benign default. */
class StubService implements PlaygroundService {
  calls = { parseTerm: 0, parseDelta: 0, applyDelta: 0, deltaEval: 0 };
  parseTermQueue: Step<ParseResponse<TermNode>>[] = [];
  parseDeltaQueue: Step<ParseResponse<DeltaNode>>[] = [];
  applyQueue: Step<ApplyResponse>[] = [];
  deltaEvalQueue: Step<DeltaEvalResponse>[] = [];

  parseTerm(_text: string, signal?: AbortSignal): Promise<ParseResponse<TermNode>> {
    this.calls.parseTerm += 1;
    const step = this.parseTermQueue.shift();
    return step ? step(signal) : Promise.resolve({ ast: unit });
  }

  parseDelta(_text: string, signal?: AbortSignal): Promise<ParseResponse<DeltaNode>> {
    this.calls.parseDelta += 1;
    const step = this.parseDeltaQueue.shift();
    return step ? step(signal) : Promise.resolve({ ast: epsUnit });
  }

  applyDelta(_term: TermNode, _delta: DeltaNode, signal?: AbortSignal): Promise<ApplyResponse> {
    this.calls.applyDelta += 1;
    const step = this.applyQueue.shift();
    return step ? step(signal) : Promise.resolve({ term: unit });
  }

  deltaEval(_delta: DeltaNode, _fuel?: number, signal?: AbortSignal): Promise<DeltaEvalResponse> {
    this.calls.deltaEval += 1;
    const step = this.deltaEvalQueue.shift();
    return step ? step(signal) : Promise.resolve(okEval("default"));
  }
}

function deferred<T>(): { promise: Promise<T>; resolve: (value: T) => void } {
  let resolve!: (value: T) => void;
  const promise = new Promise<T>((r) => {
    resolve = r;
  });
  return { promise, resolve };
}

describe("submit gating", () => {
  test("a program that does not parse blocks the submit", async () => {
    const stub = new StubService();
    stub.parseTermQueue.push(() =>
      Promise.resolve({ error: { message: "expected term", line: 1, col: 3 } })
    );
    const session = new PlaygroundSession(stub);
    const view = await session.submitDelta();
    expect(view.banner).toBe("program does not parse: expected term (line 1, col 3)");
    expect(view.trees).toBeNull();
    expect(stub.calls.parseDelta).toBe(0);
  });

  test("a delta that does not parse stops before any evaluation", async () => {
    const stub = new StubService();
    stub.parseDeltaQueue.push(() =>
      Promise.resolve({ error: { message: "expected delta", line: 2, col: 7 } })
    );
    const session = new PlaygroundSession(stub);
    const view = await session.submitDelta();
    expect(view.banner).toBe("delta does not parse: expected delta (line 2, col 7)");
    expect(stub.calls.applyDelta).toBe(0);
    expect(stub.calls.deltaEval).toBe(0);
  });
});

describe("failures keep the last good trees", () => {
  test("an endpoint mismatch banners verbatim and leaves the trees alone", async () => {
    const stub = new StubService();
    stub.deltaEvalQueue.push(() => Promise.resolve(okEval("first")));
    const session = new PlaygroundSession(stub);
    await session.submitDelta();
    const before = session.view().trees;
    expect(before).not.toBeNull();

    stub.applyQueue.push(() => Promise.resolve({ error: "delta source is (), term is inl ()" }));
    const view = await session.submitDelta();
    expect(view.banner).toBe("delta source is (), term is inl ()");
    expect(view.trees).toBe(before);
    expect(stub.calls.deltaEval).toBe(1);
  });

  test("an evaluation failure banners verbatim and leaves the trees alone", async () => {
    const stub = new StubService();
    stub.deltaEvalQueue.push(() => Promise.resolve(okEval("first")));
    stub.deltaEvalQueue.push(() =>
      Promise.resolve({ src: unit, tgt: unit, error: "source endpoint ran out of fuel" })
    );
    const session = new PlaygroundSession(stub);
    await session.submitDelta();
    const before = session.view().trees;

    const view = await session.submitDelta();
    expect(view.banner).toBe("source endpoint ran out of fuel");
    expect(view.trees).toBe(before);
  });

  test("a transport failure is reported and the trees stay", async () => {
    const stub = new StubService();
    stub.deltaEvalQueue.push(() => Promise.resolve(okEval("first")));
    const session = new PlaygroundSession(stub);
    await session.submitDelta();
    const before = session.view().trees;

    stub.parseTermQueue.push(() => Promise.reject(new TypeError("fetch failed")));
    const view = await session.submitDelta();
    expect(view.banner).toBe("fetch failed");
    expect(view.trees).toBe(before);
  });

  test("a later success clears the banner", async () => {
    const stub = new StubService();
    stub.applyQueue.push(() => Promise.resolve({ error: "delta source is x, term is y" }));
    const session = new PlaygroundSession(stub);
    await session.submitDelta();
    expect(session.view().banner).not.toBeNull();

    const view = await session.submitDelta();
    expect(view.banner).toBeNull();
    expect(view.trees).not.toBeNull();
  });
});

describe("one submit in flight", () => {
  test("a superseded submit cannot overwrite the newer result", async () => {
    const stub = new StubService();
    const gate = deferred<ParseResponse<TermNode>>();
    stub.parseTermQueue.push(() => gate.promise);
    stub.deltaEvalQueue.push(() => Promise.resolve(okEval("second")));

    const session = new PlaygroundSession(stub);
    const first = session.submitDelta();
    const second = session.submitDelta();
    const settled = await second;
    expect(settled.trees?.srcValue).toEqual({ kind: "var", name: "second" });

    // The first submit now comes back with a parse error; it must be
    // discarded, not turned into a banner.
    gate.resolve({ error: { message: "too late", line: 1, col: 1 } });
    const discarded = await first;
    expect(discarded.banner).toBeNull();
    expect(discarded.trees?.srcValue).toEqual({ kind: "var", name: "second" });
    expect(session.view().banner).toBeNull();
  });

  test("a new submit aborts the old request signal", async () => {
    const stub = new StubService();
    stub.parseTermQueue.push(
      (signal) =>
        new Promise((_, reject) => {
          signal?.addEventListener("abort", () => {
            const err = new Error("aborted");
            err.name = "AbortError";
            reject(err);
          });
        })
    );
    stub.deltaEvalQueue.push(() => Promise.resolve(okEval("second")));

    const session = new PlaygroundSession(stub);
    const first = session.submitDelta();
    const second = session.submitDelta();
    const [a, b] = await Promise.all([first, second]);
    expect(a.banner).toBeNull();
    expect(b.trees?.srcValue).toEqual({ kind: "var", name: "second" });
  });
});

describe("edit proposals", () => {
  test("an applicable edit fills the delta box", async () => {
    const stub = new StubService();
    stub.parseTermQueue.push(() => Promise.resolve({ ast: { kind: "inr", body: unit } }));
    const session = new PlaygroundSession(stub);
    session.programText = "inr ()";
    const text = await session.proposeEdit([], { action: "flip" });
    expect(text).toBe("inl! ~{()}");
    expect(session.deltaText).toBe("inl! ~{()}");
  });

  test("an inapplicable edit leaves the delta box alone", async () => {
    const stub = new StubService();
    const session = new PlaygroundSession(stub);
    session.deltaText = "~{()}";
    const text = await session.proposeEdit([], { action: "flip" });
    expect(text).toBeNull();
    expect(session.deltaText).toBe("~{()}");
  });

  test("an unparseable program yields no proposal", async () => {
    const stub = new StubService();
    stub.parseTermQueue.push(() =>
      Promise.resolve({ error: { message: "expected term", line: 1, col: 9 } })
    );
    const session = new PlaygroundSession(stub);
    const text = await session.proposeEdit([], { action: "wrap-in-inl" });
    expect(text).toBeNull();
  });
});
