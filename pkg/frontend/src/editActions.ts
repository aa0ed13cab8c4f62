/**
 * Structured edit actions over a selected tree node.
 *
 * Each action turns a selection in the program tree into delta *text* for
 * the delta box, so the user confirms (and can tweak) the edit before
 * submitting it. Everything here is plain syntax manipulation; checking
 * that the text parses and fits the program stays with the service.
 */
import { printTerm, printDelta } from "./printer.js";
import { TermNode } from "./wire.js";

export type TermStep =
  | "body"
  | "fn"
  | "arg"
  | "first"
  | "second"
  | "scrutinee"
  | "left"
  | "right";

export type TermPath = readonly TermStep[];

/** The child of `t` one step down, or null when the step does not exist. */
export function childAt(t: TermNode, step: TermStep): TermNode | null {
  switch (step) {
    case "body":
      return t.kind === "inl" ||
        t.kind === "inr" ||
        t.kind === "roll" ||
        t.kind === "unroll" ||
        t.kind === "lam" ||
        t.kind === "matchpair"
        ? t.body
        : null;
    case "fn":
      return t.kind === "app" ? t.fn : null;
    case "arg":
      return t.kind === "app" ? t.arg : null;
    case "first":
      return t.kind === "pair" ? t.first : null;
    case "second":
      return t.kind === "pair" ? t.second : null;
    case "scrutinee":
      return t.kind === "match" || t.kind === "matchpair" ? t.scrutinee : null;
    case "left":
      return t.kind === "match" ? t.left : null;
    case "right":
      return t.kind === "match" ? t.right : null;
  }
}

export function nodeAt(t: TermNode, path: TermPath): TermNode | null {
  let node: TermNode | null = t;
  for (const step of path) {
    if (node === null) {
      return null;
    }
    node = childAt(node, step);
  }
  return node;
}

export type EditAction =
  | { action: "wrap-in-inl" }
  | { action: "wrap-in-inr" }
  | { action: "wrap-in-roll" }
  | { action: "delete-frame" }
  | { action: "flip" }
  | { action: "pair-with"; sibling: string }
  | { action: "rename-variable"; to: string };

export type EditActionName = EditAction["action"];

export const EDIT_ACTION_NAMES: readonly EditActionName[] = [
  "wrap-in-inl",
  "wrap-in-inr",
  "wrap-in-roll",
  "delete-frame",
  "flip",
  "pair-with",
  "rename-variable",
];

/** Actions that apply to this node shape (pair-with and the wraps always do). */
export function availableActions(node: TermNode): EditActionName[] {
  const names: EditActionName[] = ["wrap-in-inl", "wrap-in-inr", "wrap-in-roll", "pair-with"];
  if (node.kind === "inl" || node.kind === "inr" || node.kind === "roll" || node.kind === "unroll") {
    names.push("delete-frame");
  }
  if (node.kind === "inl" || node.kind === "inr") {
    names.push("flip");
  }
  if (node.kind === "var") {
    names.push("rename-variable");
  }
  return names;
}

// Delta text under construction, tagged with the precedence level it prints
// at so congruence wrapping can parenthesize exactly like the printers do.
interface Rendered {
  text: string;
  level: number;
  isReplace: boolean;
}

const LAM = 0;
const PREFIX = 1;
const APP = 2;
const ATOM = 3;

function at(r: Rendered, need: number, underInjection = false): string {
  if (r.level < need || (underInjection && r.isReplace)) {
    return `(${r.text})`;
  }
  return r.text;
}

function eps(t: TermNode): Rendered {
  return { text: `~{${printTerm(t)}}`, level: ATOM, isReplace: false };
}

function local(node: TermNode, action: EditAction): Rendered | null {
  switch (action.action) {
    case "wrap-in-inl":
      return { text: `+[inl @]{~{${printTerm(node)}}}`, level: ATOM, isReplace: false };
    case "wrap-in-inr":
      return { text: `+[inr @]{~{${printTerm(node)}}}`, level: ATOM, isReplace: false };
    case "wrap-in-roll":
      return { text: `+[roll @]{~{${printTerm(node)}}}`, level: ATOM, isReplace: false };
    case "delete-frame":
      if (
        node.kind === "inl" ||
        node.kind === "inr" ||
        node.kind === "roll" ||
        node.kind === "unroll"
      ) {
        return {
          text: `-[${node.kind} @]{~{${printTerm(node.body)}}}`,
          level: ATOM,
          isReplace: false,
        };
      }
      return null;
    case "flip":
      if (node.kind === "inl") {
        return { text: `inr! ~{${printTerm(node.body)}}`, level: PREFIX, isReplace: false };
      }
      if (node.kind === "inr") {
        return { text: `inl! ~{${printTerm(node.body)}}`, level: PREFIX, isReplace: false };
      }
      return null;
    case "pair-with":
      // The sibling is raw user text; the service's /parse vets the result.
      return {
        text: `+[(@, ${action.sibling})]{~{${printTerm(node)}}}`,
        level: ATOM,
        isReplace: false,
      };
    case "rename-variable":
      if (node.kind === "var") {
        // Renames print bare everywhere, like the service's own printer.
        return { text: `${node.name} ~> ${action.to}`, level: ATOM, isReplace: false };
      }
      return null;
  }
}

function wrapStep(parent: TermNode, step: TermStep, child: Rendered): Rendered | null {
  switch (parent.kind) {
    case "inl":
    case "inr":
      return {
        text: `${parent.kind} ${at(child, PREFIX, true)}`,
        level: PREFIX,
        isReplace: false,
      };
    case "roll":
    case "unroll":
      return { text: `${parent.kind} ${at(child, PREFIX)}`, level: PREFIX, isReplace: false };
    case "lam":
      return { text: `fun ${parent.binder} -> ${at(child, LAM)}`, level: LAM, isReplace: false };
    case "app": {
      const fn = step === "fn" ? at(child, APP) : printDelta({ kind: "eps", at: parent.fn });
      const arg = step === "arg" ? at(child, ATOM) : printDelta({ kind: "eps", at: parent.arg });
      return { text: `${fn} ${arg}`, level: APP, isReplace: false };
    }
    case "pair": {
      const first = step === "first" ? at(child, LAM) : eps(parent.first).text;
      const second = step === "second" ? at(child, LAM) : eps(parent.second).text;
      return { text: `(${first}, ${second})`, level: ATOM, isReplace: false };
    }
    case "match": {
      const scrutinee = step === "scrutinee" ? at(child, LAM) : eps(parent.scrutinee).text;
      const left = step === "left" ? at(child, LAM) : eps(parent.left).text;
      const right = step === "right" ? at(child, LAM) : eps(parent.right).text;
      return {
        text:
          `match ${scrutinee} { inl ${parent.left_binder} -> ${left}` +
          ` | inr ${parent.right_binder} -> ${right} }`,
        level: ATOM,
        isReplace: false,
      };
    }
    default:
      // No congruence form exists for a pair match, and leaves have no
      // children; an edit below either cannot be expressed structurally.
      return null;
  }
}

/**
 * Delta text for the selected node alone, as shown next to the action
 * button. Null when the action does not apply to this node.
 */
export function nodeEditDelta(node: TermNode, action: EditAction): string | null {
  const rendered = local(node, action);
  return rendered === null ? null : rendered.text;
}

/**
 * Delta text for the whole program: the action at the selected path, the
 * rest wrapped in congruences with unchanged markers. Null when the path is
 * invalid, the action does not apply, or the path crosses a pair match
 * (which has no congruence delta; edit its scrutinee instead).
 */
export function editActionDelta(
  program: TermNode,
  path: TermPath,
  action: EditAction
): string | null {
  const spine: TermNode[] = [program];
  for (const step of path) {
    const next = childAt(spine[spine.length - 1]!, step);
    if (next === null) {
      return null;
    }
    spine.push(next);
  }
  let rendered = local(spine[spine.length - 1]!, action);
  if (rendered === null) {
    return null;
  }
  for (let i = path.length - 1; i >= 0; i -= 1) {
    rendered = wrapStep(spine[i]!, path[i]!, rendered);
    if (rendered === null) {
      return null;
    }
  }
  return rendered.text;
}
