/**
 * HTML rendering for the playground.
 *
 * Trees render as nested lists. Only delta trees carry highlight classes
 * (one per delta constructor), so counting highlighted elements in the
 * rendered page counts delta constructors. Plain term trees are neutral.
 */
import { TermPath } from "./editActions.js";
import { deltaChildren, Highlight, HIGHLIGHT_COLORS, highlightOf } from "./highlight.js";
import { DeltaNode, TermNode } from "./wire.js";
import { SessionView } from "./session.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function termLabel(t: TermNode): string {
  switch (t.kind) {
    case "unit":
      return "()";
    case "hole":
      return "_";
    case "ctxhole":
      return "@";
    case "var":
      return t.name;
    case "lam":
      return `fun ${t.binder}`;
    case "app":
      return "apply";
    case "pair":
      return "pair";
    case "match":
      return `match { inl ${t.left_binder} | inr ${t.right_binder} }`;
    case "matchpair":
      return `match { (${t.first_binder}, ${t.second_binder}) }`;
    default:
      return t.kind;
  }
}

function termChildren(t: TermNode): [TermPath[number], TermNode][] {
  switch (t.kind) {
    case "unit":
    case "hole":
    case "ctxhole":
    case "var":
      return [];
    case "inl":
    case "inr":
    case "roll":
    case "unroll":
    case "lam":
      return [["body", t.body]];
    case "pair":
      return [
        ["first", t.first],
        ["second", t.second],
      ];
    case "app":
      return [
        ["fn", t.fn],
        ["arg", t.arg],
      ];
    case "match":
      return [
        ["scrutinee", t.scrutinee],
        ["left", t.left],
        ["right", t.right],
      ];
    case "matchpair":
      return [
        ["scrutinee", t.scrutinee],
        ["body", t.body],
      ];
  }
}

function termItem(t: TermNode, path: TermPath): string {
  const children = termChildren(t);
  const inner =
    children.length === 0
      ? ""
      : `<ul>${children.map(([step, child]) => termItem(child, [...path, step])).join("")}</ul>`;
  const pathAttr = escapeHtml(path.join("."));
  return (
    `<li data-kind="${t.kind}" data-path="${pathAttr}">` +
    `<span class="label">${escapeHtml(termLabel(t))}</span>${inner}</li>`
  );
}

/** A term as a neutral (un-highlighted) tree panel. */
export function renderTermTree(t: TermNode, testid: string): string {
  return `<div class="tree" data-testid="${escapeHtml(testid)}"><ul>${termItem(t, [])}</ul></div>`;
}

function deltaLabel(d: DeltaNode): string {
  switch (d.kind) {
    case "eps":
      return "unchanged";
    case "ins":
      return "insert frame";
    case "del":
      return "delete frame";
    case "inlbang":
      return "to inl";
    case "inrbang":
      return "to inr";
    case "lam":
      return `fun ${d.binder}`;
    case "app":
      return "apply";
    case "match":
      return `match { inl ${d.left_binder} | inr ${d.right_binder} }`;
    case "replace":
      return "replace";
    case "varreplace":
      return `${d.source} to ${d.target}`;
    default:
      return d.kind;
  }
}

function deltaItem(d: DeltaNode): string {
  const highlight: Highlight = highlightOf(d.kind);
  const children = deltaChildren(d);
  const inner =
    children.length === 0 ? "" : `<ul>${children.map((child) => deltaItem(child)).join("")}</ul>`;
  return (
    `<li class="hl-${highlight}" data-highlight="${highlight}" data-kind="${d.kind}">` +
    `<span class="label">${escapeHtml(deltaLabel(d))}</span>${inner}</li>`
  );
}

/** A delta as a tree panel with one highlighted element per constructor. */
export function renderDeltaTree(d: DeltaNode, testid: string): string {
  return `<div class="tree" data-testid="${escapeHtml(testid)}"><ul>${deltaItem(d)}</ul></div>`;
}

export function renderBanner(message: string | null): string {
  if (message === null) {
    return "";
  }
  return `<div class="banner" data-testid="error-banner">${escapeHtml(message)}</div>`;
}

export const STYLE = `
  body { font-family: sans-serif; margin: 1rem; }
  textarea { width: 100%; font-family: monospace; }
  .banner { background: #fee; border: 1px solid ${HIGHLIGHT_COLORS.deleted}; padding: 0.5rem; }
  .panels { display: flex; gap: 1rem; flex-wrap: wrap; }
  .panel { flex: 1 1 18rem; }
  .tree ul { list-style: none; padding-left: 1rem; border-left: 1px dotted #ccc; }
  .hl-inserted { color: ${HIGHLIGHT_COLORS.inserted}; }
  .hl-changed { color: ${HIGHLIGHT_COLORS.changed}; }
  .hl-deleted { color: ${HIGHLIGHT_COLORS.deleted}; }
`;

function panel(title: string, body: string): string {
  return `<section class="panel"><h2>${escapeHtml(title)}</h2>${body}</section>`;
}

const EMPTY = `<p class="empty">nothing submitted yet</p>`;

/** The whole page for the current session state. */
export function renderPage(view: SessionView): string {
  const trees = view.trees;
  return `<style>${STYLE}</style>
<h1>delta playground</h1>
<label>program
  <textarea data-testid="program-input" rows="4">${escapeHtml(view.programText)}</textarea>
</label>
<label>delta
  <textarea data-testid="delta-input" rows="4">${escapeHtml(view.deltaText)}</textarea>
</label>
<label>fuel <input data-testid="fuel-input" type="number" value="${view.fuel}"></label>
<button data-testid="submit-delta">submit delta</button>
${renderBanner(view.banner)}
<div class="panels">
${panel("source", trees ? renderTermTree(trees.src, "source-tree") : EMPTY)}
${panel("target", trees ? renderTermTree(trees.tgt, "target-tree") : EMPTY)}
${panel("source value", trees ? renderTermTree(trees.srcValue, "source-value-tree") : EMPTY)}
${panel("target value", trees ? renderTermTree(trees.tgtValue, "target-value-tree") : EMPTY)}
${panel("value delta", trees ? renderDeltaTree(trees.valueDelta, "value-delta-tree") : EMPTY)}
</div>`;
}
