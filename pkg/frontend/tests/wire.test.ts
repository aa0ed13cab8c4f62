import { describe, expect, test } from "vitest";

import {
  decodeApplyResponse,
  decodeDelta,
  decodeDeltaEvalResponse,
  decodeOutcome,
  decodeParseTermResponse,
  decodeTerm,
  WireError,
} from "../src/wire.js";

const UNIT = { kind: "unit" } as const;

describe("term nodes", () => {
  test("a valid tree decodes to the same object", () => {
    const node = {
      kind: "app",
      fn: { kind: "lam", binder: "x", body: { kind: "var", name: "x" } },
      arg: { kind: "inl", body: UNIT },
    };
    expect(decodeTerm(node)).toBe(node);
  });

  test("every leaf and binder form is accepted", () => {
    const node = {
      kind: "match",
      scrutinee: { kind: "unroll", body: { kind: "roll", body: UNIT } },
      left_binder: "a",
      left: {
        kind: "matchpair",
        scrutinee: { kind: "pair", first: { kind: "hole" }, second: UNIT },
        first_binder: "p",
        second_binder: "q",
        body: { kind: "var", name: "p" },
      },
      right_binder: "b",
      right: { kind: "inr", body: { kind: "ctxhole" } },
    };
    expect(decodeTerm(node)).toBe(node);
  });

  test("an unknown kind is rejected", () => {
    expect(() => decodeTerm({ kind: "uint" })).toThrow(WireError);
  });

  test("a missing field is rejected", () => {
    expect(() => decodeTerm({ kind: "lam", binder: "x" })).toThrow(WireError);
  });
});

describe("delta nodes", () => {
  test("all fifteen constructors decode", () => {
    const eps = { kind: "eps", at: UNIT };
    const node = {
      kind: "match",
      scrutinee: { kind: "ins", frame: { kind: "inl", body: { kind: "ctxhole" } }, inner: eps },
      left_binder: "a",
      left: {
        kind: "pair",
        first: { kind: "del", frame: { kind: "roll", body: { kind: "ctxhole" } }, inner: eps },
        second: {
          kind: "app",
          fn: { kind: "lam", binder: "f", body: { kind: "varreplace", source: "f", target: "g" } },
          arg: { kind: "replace", source: UNIT, target: { kind: "var", name: "a" } },
        },
      },
      right_binder: "b",
      right: {
        kind: "inl",
        inner: {
          kind: "inr",
          inner: {
            kind: "roll",
            inner: {
              kind: "unroll",
              inner: { kind: "inlbang", inner: { kind: "inrbang", inner: eps } },
            },
          },
        },
      },
    };
    expect(decodeDelta(node)).toBe(node);
  });

  test("a term where a delta belongs is rejected", () => {
    expect(() => decodeDelta({ kind: "ins", frame: { kind: "ctxhole" }, inner: UNIT })).toThrow(
      WireError
    );
  });
});

describe("responses", () => {
  test("outcomes cover value, stuck and out-of-fuel", () => {
    expect(decodeOutcome({ kind: "value", value: UNIT })).toEqual({ kind: "value", value: UNIT });
    const stuckAt = { kind: "app", fn: UNIT, arg: UNIT };
    expect(decodeOutcome({ kind: "stuck", reason: "applied a non-function", at: stuckAt }).kind).toBe(
      "stuck"
    );
    expect(decodeOutcome({ kind: "out-of-fuel", at: UNIT }).kind).toBe("out-of-fuel");
    expect(() => decodeOutcome({ kind: "stuck", reason: "r", at: "not a term" })).toThrow(
      WireError
    );
  });

  test("delta evaluation responses split on the error field", () => {
    const ok = {
      src: UNIT,
      tgt: UNIT,
      value_delta: { kind: "eps", at: UNIT },
      src_value: UNIT,
      tgt_value: UNIT,
    };
    expect(decodeDeltaEvalResponse(ok)).toBe(ok);
    const failed = { src: UNIT, tgt: UNIT, error: "baseline got stuck" };
    expect(decodeDeltaEvalResponse(failed)).toBe(failed);
    expect(() => decodeDeltaEvalResponse({ src: UNIT, tgt: UNIT })).toThrow(WireError);
  });

  test("apply responses are a term or an error", () => {
    expect(decodeApplyResponse({ term: UNIT })).toEqual({ term: UNIT });
    expect(decodeApplyResponse({ error: "delta does not fit" })).toEqual({
      error: "delta does not fit",
    });
  });

  test("parse failures carry a position", () => {
    const failed = { error: { message: "expected term", line: 1, col: 9 } };
    expect(decodeParseTermResponse(failed)).toBe(failed);
    expect(() => decodeParseTermResponse({ error: { message: "m" } })).toThrow(WireError);
  });
});
