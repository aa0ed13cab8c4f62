/**
 * Highlight classification for delta trees.
 *
 * The class of a node is read off the delta constructor alone, never from
 * evaluating anything: insertions are inserted, deletions deleted, the two
 * flips and both replacement forms changed, and the unchanged marker plus
 * every congruence are unchanged. Counting highlights in a rendered tree
 * therefore counts delta constructors.
 */
import { DeltaNode } from "./wire.js";

export type Highlight = "unchanged" | "inserted" | "deleted" | "changed";

export const HIGHLIGHT_COLORS: Record<Highlight, string> = {
  unchanged: "inherit",
  inserted: "green",
  changed: "blue",
  deleted: "red",
};

export function highlightOf(kind: DeltaNode["kind"]): Highlight {
  switch (kind) {
    case "ins":
      return "inserted";
    case "del":
      return "deleted";
    case "inlbang":
    case "inrbang":
    case "replace":
    case "varreplace":
      return "changed";
    case "eps":
    case "inl":
    case "inr":
    case "roll":
    case "unroll":
    case "pair":
    case "app":
    case "lam":
    case "match":
      return "unchanged";
  }
}

/** Child deltas of a node, in printed order. Terms inside (frames, the
 * unchanged body of an eps, replacement endpoints) are not children. */
export function deltaChildren(d: DeltaNode): DeltaNode[] {
  switch (d.kind) {
    case "eps":
    case "replace":
    case "varreplace":
      return [];
    case "ins":
    case "del":
    case "inl":
    case "inr":
    case "roll":
    case "unroll":
    case "inlbang":
    case "inrbang":
      return [d.inner];
    case "lam":
      return [d.body];
    case "pair":
      return [d.first, d.second];
    case "app":
      return [d.fn, d.arg];
    case "match":
      return [d.scrutinee, d.left, d.right];
  }
}

export type HighlightCounts = Record<Highlight, number>;

export function highlightCounts(d: DeltaNode): HighlightCounts {
  const counts: HighlightCounts = { unchanged: 0, inserted: 0, deleted: 0, changed: 0 };
  const stack: DeltaNode[] = [d];
  while (stack.length > 0) {
    const node = stack.pop()!;
    counts[highlightOf(node.kind)] += 1;
    stack.push(...deltaChildren(node));
  }
  return counts;
}
