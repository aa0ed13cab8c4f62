/**
 * Concrete-syntax printers for wire term and delta nodes.
 *
 * These mirror the service's own printer so that text built here (edit
 * actions write delta text into the delta box) parses back on the service
 * side. Precedence, loosest first: function and match bodies, then the
 * prefix operators inl/inr/roll/unroll, then application; pairs, matches,
 * unit and variables delimit themselves.
 */
import { DeltaNode, TermNode } from "./wire.js";

const LAM = 0;
const PREFIX = 1;
const APP = 2;
const ATOM = 3;

function wrap(text: string, own: number, need: number): string {
  return own < need ? `(${text})` : text;
}

export function printTerm(t: TermNode): string {
  return pt(t, LAM);
}

function pt(t: TermNode, need: number): string {
  switch (t.kind) {
    case "hole":
      return "_";
    case "ctxhole":
      return "@";
    case "var":
      return t.name;
    case "unit":
      return "()";
    case "pair":
      return `(${pt(t.first, LAM)}, ${pt(t.second, LAM)})`;
    case "inl":
      return wrap(`inl ${pt(t.body, PREFIX)}`, PREFIX, need);
    case "inr":
      return wrap(`inr ${pt(t.body, PREFIX)}`, PREFIX, need);
    case "roll":
      return wrap(`roll ${pt(t.body, PREFIX)}`, PREFIX, need);
    case "unroll":
      return wrap(`unroll ${pt(t.body, PREFIX)}`, PREFIX, need);
    case "lam":
      return wrap(`fun ${t.binder} -> ${pt(t.body, LAM)}`, LAM, need);
    case "app":
      return wrap(`${pt(t.fn, APP)} ${pt(t.arg, ATOM)}`, APP, need);
    case "match":
      return (
        `match ${pt(t.scrutinee, LAM)} { inl ${t.left_binder} -> ${pt(t.left, LAM)}` +
        ` | inr ${t.right_binder} -> ${pt(t.right, LAM)} }`
      );
    case "matchpair":
      return `match ${pt(t.scrutinee, LAM)} { (${t.first_binder}, ${t.second_binder}) -> ${pt(t.body, LAM)} }`;
  }
}

export function printDelta(d: DeltaNode): string {
  return pd(d, LAM);
}

// "inl !{...}" would lex as the inl! flip, so a replacement directly under a
// plain injection congruence is parenthesized (the service prints it the
// same way).
function congChild(inner: DeltaNode): string {
  if (inner.kind === "replace") {
    return `(${pd(inner, LAM)})`;
  }
  return pd(inner, PREFIX);
}

function pd(d: DeltaNode, need: number): string {
  switch (d.kind) {
    case "eps":
      return `~{${pt(d.at, LAM)}}`;
    case "ins":
      return `+[${pt(d.frame, LAM)}]{${pd(d.inner, LAM)}}`;
    case "del":
      return `-[${pt(d.frame, LAM)}]{${pd(d.inner, LAM)}}`;
    case "replace":
      return `!{${pt(d.source, LAM)} => ${pt(d.target, LAM)}}`;
    case "varreplace":
      return `${d.source} ~> ${d.target}`;
    case "pair":
      return `(${pd(d.first, LAM)}, ${pd(d.second, LAM)})`;
    case "inl":
      return wrap(`inl ${congChild(d.inner)}`, PREFIX, need);
    case "inr":
      return wrap(`inr ${congChild(d.inner)}`, PREFIX, need);
    case "inlbang":
      return wrap(`inl! ${pd(d.inner, PREFIX)}`, PREFIX, need);
    case "inrbang":
      return wrap(`inr! ${pd(d.inner, PREFIX)}`, PREFIX, need);
    case "roll":
      return wrap(`roll ${pd(d.inner, PREFIX)}`, PREFIX, need);
    case "unroll":
      return wrap(`unroll ${pd(d.inner, PREFIX)}`, PREFIX, need);
    case "lam":
      return wrap(`fun ${d.binder} -> ${pd(d.body, LAM)}`, LAM, need);
    case "app":
      return wrap(`${pd(d.fn, APP)} ${pd(d.arg, ATOM)}`, APP, need);
    case "match":
      return (
        `match ${pd(d.scrutinee, LAM)} { inl ${d.left_binder} -> ${pd(d.left, LAM)}` +
        ` | inr ${d.right_binder} -> ${pd(d.right, LAM)} }`
      );
  }
}
