import { describe, expect, test } from "vitest";

import {
  availableActions,
  editActionDelta,
  nodeAt,
  nodeEditDelta,
} from "../src/editActions.js";
import { TermNode } from "../src/wire.js";

const unit: TermNode = { kind: "unit" };
const v = (name: string): TermNode => ({ kind: "var", name });
const inr = (body: TermNode): TermNode => ({ kind: "inr", body });
const inl = (body: TermNode): TermNode => ({ kind: "inl", body });
const lam = (binder: string, body: TermNode): TermNode => ({ kind: "lam", binder, body });

describe("selection paths", () => {
  const program: TermNode = {
    kind: "app",
    fn: lam("x", { kind: "pair", first: v("x"), second: unit }),
    arg: inl(unit),
  };

  test("nodeAt walks structural steps", () => {
    expect(nodeAt(program, [])).toBe(program);
    expect(nodeAt(program, ["fn", "body", "first"])).toEqual(v("x"));
    expect(nodeAt(program, ["arg", "body"])).toEqual(unit);
  });

  test("nodeAt is null for steps the node does not have", () => {
    expect(nodeAt(program, ["scrutinee"])).toBeNull();
    expect(nodeAt(program, ["arg", "body", "body"])).toBeNull();
  });
});

describe("single-node edits", () => {
  test("flipping an inr proposes the inl flip", () => {
    expect(nodeEditDelta(inr(unit), { action: "flip" })).toBe("inl! ~{()}");
  });

  test("flipping an inl proposes the inr flip", () => {
    expect(nodeEditDelta(inl(v("n")), { action: "flip" })).toBe("inr! ~{n}");
  });

  test("pairing a variable with a sibling inserts a pair frame", () => {
    expect(nodeEditDelta(v("x"), { action: "pair-with", sibling: "sq x" })).toBe(
      "+[(@, sq x)]{~{x}}"
    );
  });

  test("wrapping builds an insertion frame around the node", () => {
    expect(nodeEditDelta(unit, { action: "wrap-in-inl" })).toBe("+[inl @]{~{()}}");
    expect(nodeEditDelta(v("l"), { action: "wrap-in-roll" })).toBe("+[roll @]{~{l}}");
  });

  test("deleting the frame of an injection keeps its body", () => {
    expect(nodeEditDelta(inl(unit), { action: "delete-frame" })).toBe("-[inl @]{~{()}}");
    expect(nodeEditDelta({ kind: "unroll", body: v("l") }, { action: "delete-frame" })).toBe(
      "-[unroll @]{~{l}}"
    );
  });

  test("renaming applies to a variable occurrence", () => {
    expect(nodeEditDelta(v("x"), { action: "rename-variable", to: "y" })).toBe("x ~> y");
  });

  test("inapplicable actions are refused", () => {
    expect(nodeEditDelta(unit, { action: "delete-frame" })).toBeNull();
    expect(nodeEditDelta(unit, { action: "flip" })).toBeNull();
    expect(nodeEditDelta(unit, { action: "rename-variable", to: "y" })).toBeNull();
    expect(nodeEditDelta(lam("x", v("x")), { action: "flip" })).toBeNull();
  });
});

describe("whole-program deltas", () => {
  test("an edit at the root is the bare node edit", () => {
    expect(editActionDelta(inr(unit), [], { action: "flip" })).toBe("inl! ~{()}");
  });

  test("edits under binders pick up congruence wrappers", () => {
    expect(
      editActionDelta(lam("x", v("x")), ["body"], { action: "pair-with", sibling: "sq x" })
    ).toBe("fun x -> +[(@, sq x)]{~{x}}");
  });

  test("untouched siblings become unchanged markers", () => {
    const program: TermNode = { kind: "pair", first: v("a"), second: v("x") };
    expect(editActionDelta(program, ["second"], { action: "rename-variable", to: "c" })).toBe(
      "(~{a}, x ~> c)"
    );
    const application: TermNode = { kind: "app", fn: v("f"), arg: inl(unit) };
    expect(editActionDelta(application, ["arg"], { action: "flip" })).toBe("~{f} (inr! ~{()})");
  });

  test("edits inside a sum match wrap the right arm", () => {
    const program: TermNode = {
      kind: "match",
      scrutinee: v("s"),
      left_binder: "a",
      left: v("a"),
      right_binder: "b",
      right: inr(v("b")),
    };
    expect(editActionDelta(program, ["right"], { action: "flip" })).toBe(
      "match ~{s} { inl a -> ~{a} | inr b -> inl! ~{b} }"
    );
  });

  test("a path through a pair match has no structural delta", () => {
    const program: TermNode = {
      kind: "matchpair",
      scrutinee: v("p"),
      first_binder: "a",
      second_binder: "b",
      body: v("a"),
    };
    expect(editActionDelta(program, ["body"], { action: "wrap-in-inl" })).toBeNull();
  });

  test("a bad path or inapplicable action is refused", () => {
    expect(editActionDelta(unit, ["body"], { action: "flip" })).toBeNull();
    expect(editActionDelta(inr(unit), ["body"], { action: "flip" })).toBeNull();
  });
});

describe("action menus", () => {
  test("wraps and pairing are always offered", () => {
    expect(availableActions(unit)).toEqual([
      "wrap-in-inl",
      "wrap-in-inr",
      "wrap-in-roll",
      "pair-with",
    ]);
  });

  test("frame deletion, flips and renames depend on the node", () => {
    expect(availableActions(inl(unit))).toContain("delete-frame");
    expect(availableActions(inl(unit))).toContain("flip");
    expect(availableActions({ kind: "roll", body: unit })).toContain("delete-frame");
    expect(availableActions({ kind: "roll", body: unit })).not.toContain("flip");
    expect(availableActions(v("x"))).toContain("rename-variable");
  });
});
