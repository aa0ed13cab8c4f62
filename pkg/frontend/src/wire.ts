/**
 * Types and validators for the JSON wire format spoken by the ilc HTTP
 * service (docs/wire-format.md in the repository root).
 *
 * Every node is a `{kind: ...}` object. The decode helpers validate the
 * shape and then return the *original* object, so anything the playground
 * holds is byte-for-byte what the service sent after JSON decoding.
 */
import { z } from "zod";

export type TermNode =
  | { kind: "unit" }
  | { kind: "hole" }
  | { kind: "ctxhole" }
  | { kind: "var"; name: string }
  | { kind: "inl"; body: TermNode }
  | { kind: "inr"; body: TermNode }
  | { kind: "roll"; body: TermNode }
  | { kind: "unroll"; body: TermNode }
  | { kind: "pair"; first: TermNode; second: TermNode }
  | { kind: "app"; fn: TermNode; arg: TermNode }
  | { kind: "lam"; binder: string; body: TermNode }
  | {
      kind: "match";
      scrutinee: TermNode;
      left_binder: string;
      left: TermNode;
      right_binder: string;
      right: TermNode;
    }
  | {
      kind: "matchpair";
      scrutinee: TermNode;
      first_binder: string;
      second_binder: string;
      body: TermNode;
    };

export type DeltaNode =
  | { kind: "eps"; at: TermNode }
  | { kind: "ins"; frame: TermNode; inner: DeltaNode }
  | { kind: "del"; frame: TermNode; inner: DeltaNode }
  | { kind: "inl"; inner: DeltaNode }
  | { kind: "inr"; inner: DeltaNode }
  | { kind: "roll"; inner: DeltaNode }
  | { kind: "unroll"; inner: DeltaNode }
  | { kind: "inlbang"; inner: DeltaNode }
  | { kind: "inrbang"; inner: DeltaNode }
  | { kind: "pair"; first: DeltaNode; second: DeltaNode }
  | { kind: "app"; fn: DeltaNode; arg: DeltaNode }
  | { kind: "lam"; binder: string; body: DeltaNode }
  | {
      kind: "match";
      scrutinee: DeltaNode;
      left_binder: string;
      left: DeltaNode;
      right_binder: string;
      right: DeltaNode;
    }
  | { kind: "replace"; source: TermNode; target: TermNode }
  | { kind: "varreplace"; source: string; target: string };

export type OutcomeNode =
  | { kind: "value"; value: TermNode }
  | { kind: "stuck"; reason: string; at: TermNode }
  | { kind: "out-of-fuel"; at: TermNode };

// Recursion goes through lazy fields, not a lazy union, so the unions can
// dispatch on the kind tag; a bad node then fails locally instead of being
// retried against every branch of every ancestor.
const lazyTerm = z.lazy((): z.ZodType<TermNode> => term);
const lazyDelta = z.lazy((): z.ZodType<DeltaNode> => delta);

const term: z.ZodType<TermNode> = z.discriminatedUnion("kind", [
  z.object({ kind: z.literal("unit") }),
  z.object({ kind: z.literal("hole") }),
  z.object({ kind: z.literal("ctxhole") }),
  z.object({ kind: z.literal("var"), name: z.string() }),
  z.object({ kind: z.literal("inl"), body: lazyTerm }),
  z.object({ kind: z.literal("inr"), body: lazyTerm }),
  z.object({ kind: z.literal("roll"), body: lazyTerm }),
  z.object({ kind: z.literal("unroll"), body: lazyTerm }),
  z.object({ kind: z.literal("pair"), first: lazyTerm, second: lazyTerm }),
  z.object({ kind: z.literal("app"), fn: lazyTerm, arg: lazyTerm }),
  z.object({ kind: z.literal("lam"), binder: z.string(), body: lazyTerm }),
  z.object({
    kind: z.literal("match"),
    scrutinee: lazyTerm,
    left_binder: z.string(),
    left: lazyTerm,
    right_binder: z.string(),
    right: lazyTerm,
  }),
  z.object({
    kind: z.literal("matchpair"),
    scrutinee: lazyTerm,
    first_binder: z.string(),
    second_binder: z.string(),
    body: lazyTerm,
  }),
]);

const delta: z.ZodType<DeltaNode> = z.discriminatedUnion("kind", [
  z.object({ kind: z.literal("eps"), at: lazyTerm }),
  z.object({ kind: z.literal("ins"), frame: lazyTerm, inner: lazyDelta }),
  z.object({ kind: z.literal("del"), frame: lazyTerm, inner: lazyDelta }),
  z.object({ kind: z.literal("inl"), inner: lazyDelta }),
  z.object({ kind: z.literal("inr"), inner: lazyDelta }),
  z.object({ kind: z.literal("roll"), inner: lazyDelta }),
  z.object({ kind: z.literal("unroll"), inner: lazyDelta }),
  z.object({ kind: z.literal("inlbang"), inner: lazyDelta }),
  z.object({ kind: z.literal("inrbang"), inner: lazyDelta }),
  z.object({ kind: z.literal("pair"), first: lazyDelta, second: lazyDelta }),
  z.object({ kind: z.literal("app"), fn: lazyDelta, arg: lazyDelta }),
  z.object({ kind: z.literal("lam"), binder: z.string(), body: lazyDelta }),
  z.object({
    kind: z.literal("match"),
    scrutinee: lazyDelta,
    left_binder: z.string(),
    left: lazyDelta,
    right_binder: z.string(),
    right: lazyDelta,
  }),
  z.object({ kind: z.literal("replace"), source: lazyTerm, target: lazyTerm }),
  z.object({ kind: z.literal("varreplace"), source: z.string(), target: z.string() }),
]);

const outcome: z.ZodType<OutcomeNode> = z.discriminatedUnion("kind", [
  z.object({ kind: z.literal("value"), value: lazyTerm }),
  z.object({ kind: z.literal("stuck"), reason: z.string(), at: lazyTerm }),
  z.object({ kind: z.literal("out-of-fuel"), at: lazyTerm }),
]);

export interface ParseFailure {
  message: string;
  line: number;
  col: number;
}

const parseFailure: z.ZodType<ParseFailure> = z.object({
  message: z.string(),
  line: z.number().int(),
  col: z.number().int(),
});

/** `POST /delta-eval` on success: the four endpoint terms plus the value delta. */
export interface DeltaEvalOk {
  src: TermNode;
  tgt: TermNode;
  value_delta: DeltaNode;
  src_value: TermNode;
  tgt_value: TermNode;
}

/** `POST /delta-eval` when a baseline endpoint is stuck or out of fuel. */
export interface DeltaEvalFailed {
  src: TermNode;
  tgt: TermNode;
  error: string;
}

export type DeltaEvalResponse = DeltaEvalOk | DeltaEvalFailed;

const deltaEvalResponse: z.ZodType<DeltaEvalResponse> = z.union([
  z.object({
    src: term,
    tgt: term,
    value_delta: delta,
    src_value: term,
    tgt_value: term,
  }),
  z.object({ src: term, tgt: term, error: z.string() }),
]);

export type ApplyResponse = { term: TermNode } | { error: string };

const applyResponse: z.ZodType<ApplyResponse> = z.union([
  z.object({ term }),
  z.object({ error: z.string() }),
]);

export type ParseResponse<Node> = { ast: Node } | { error: ParseFailure };

const parseTermResponse: z.ZodType<ParseResponse<TermNode>> = z.union([
  z.object({ ast: term }),
  z.object({ error: parseFailure }),
]);

const parseDeltaResponse: z.ZodType<ParseResponse<DeltaNode>> = z.union([
  z.object({ ast: delta }),
  z.object({ error: parseFailure }),
]);

const evalResponse = z.object({ outcome });
const diffResponse = z.object({ delta });

/** Raised when a service response does not match the documented wire format. */
export class WireError extends Error {
  constructor(what: string, issue: z.ZodError) {
    super(`${what}: ${z.prettifyError(issue)}`);
    this.name = "WireError";
  }
}

function check<T>(schema: z.ZodType<T>, value: unknown, what: string): T {
  const result = schema.safeParse(value);
  if (!result.success) {
    throw new WireError(what, result.error);
  }
  // Return the original object, not zod's copy: the playground's trees must
  // stay byte-for-byte equal to what the service sent.
  return value as T;
}

export function decodeTerm(value: unknown): TermNode {
  return check(term, value, "bad term node");
}

export function decodeDelta(value: unknown): DeltaNode {
  return check(delta, value, "bad delta node");
}

export function decodeOutcome(value: unknown): OutcomeNode {
  return check(outcome, value, "bad outcome node");
}

export function decodeEvalResponse(value: unknown): { outcome: OutcomeNode } {
  return check(evalResponse, value, "bad /eval response");
}

export function decodeDeltaEvalResponse(value: unknown): DeltaEvalResponse {
  return check(deltaEvalResponse, value, "bad /delta-eval response");
}

export function decodeDiffResponse(value: unknown): { delta: DeltaNode } {
  return check(diffResponse, value, "bad /diff response");
}

export function decodeApplyResponse(value: unknown): ApplyResponse {
  return check(applyResponse, value, "bad /apply response");
}

export function decodeParseTermResponse(value: unknown): ParseResponse<TermNode> {
  return check(parseTermResponse, value, "bad /parse response");
}

export function decodeParseDeltaResponse(value: unknown): ParseResponse<DeltaNode> {
  return check(parseDeltaResponse, value, "bad /parse response");
}
