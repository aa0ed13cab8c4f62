/**
 * Playground session state and the submit workflow.
 *
 * The session never computes term or delta semantics itself: every tree it
 * holds is a service response, kept exactly as decoded. Submitting checks,
 * in order, that the program parses, that the delta parses, that the delta
 * actually fits the program, and only then asks for the evaluation trees.
 * Any failure puts the service's message in the banner and leaves the trees
 * from the last successful submit untouched.
 *
 * At most one submit is in flight; a new submit aborts the old one, and a
 * response from a superseded submit is discarded unseen.
 */
import { PlaygroundService } from "./client.js";
import { EditAction, editActionDelta, TermPath } from "./editActions.js";
import { DeltaNode, ParseFailure, TermNode } from "./wire.js";

export interface TreePanels {
  src: TermNode;
  tgt: TermNode;
  srcValue: TermNode;
  tgtValue: TermNode;
  valueDelta: DeltaNode;
}

export interface SessionView {
  programText: string;
  deltaText: string;
  fuel: number;
  banner: string | null;
  trees: TreePanels | null;
}

function describeParseFailure(what: string, failure: ParseFailure): string {
  return `${what} does not parse: ${failure.message} (line ${failure.line}, col ${failure.col})`;
}

function isAbort(err: unknown): boolean {
  return err instanceof Error && err.name === "AbortError";
}

export class PlaygroundSession {
  programText = "";
  deltaText = "";
  fuel = 512;

  private banner: string | null = null;
  private trees: TreePanels | null = null;
  private generation = 0;
  private controller: AbortController | null = null;

  constructor(private readonly service: PlaygroundService) {}

  view(): SessionView {
    return {
      programText: this.programText,
      deltaText: this.deltaText,
      fuel: this.fuel,
      banner: this.banner,
      trees: this.trees,
    };
  }

  async submitDelta(): Promise<SessionView> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    const generation = ++this.generation;
    const stale = () => generation !== this.generation;
    try {
      const program = await this.service.parseTerm(this.programText, controller.signal);
      if (stale()) {
        return this.view();
      }
      if ("error" in program) {
        this.banner = describeParseFailure("program", program.error);
        return this.view();
      }
      const delta = await this.service.parseDelta(this.deltaText, controller.signal);
      if (stale()) {
        return this.view();
      }
      if ("error" in delta) {
        this.banner = describeParseFailure("delta", delta.error);
        return this.view();
      }
      const applied = await this.service.applyDelta(program.ast, delta.ast, controller.signal);
      if (stale()) {
        return this.view();
      }
      if ("error" in applied) {
        this.banner = applied.error;
        return this.view();
      }
      const result = await this.service.deltaEval(delta.ast, this.fuel, controller.signal);
      if (stale()) {
        return this.view();
      }
      if ("error" in result) {
        this.banner = result.error;
        return this.view();
      }
      this.trees = {
        src: result.src,
        tgt: result.tgt,
        srcValue: result.src_value,
        tgtValue: result.tgt_value,
        valueDelta: result.value_delta,
      };
      this.banner = null;
      return this.view();
    } catch (err) {
      if (stale() || isAbort(err)) {
        return this.view();
      }
      this.banner = err instanceof Error ? err.message : String(err);
      return this.view();
    } finally {
      if (this.controller === controller) {
        this.controller = null;
      }
    }
  }

  /**
   * Turn an edit action at a path in the current program into delta text,
   * put it in the delta box for confirmation, and return it. Null when the
   * program does not parse or the action does not apply there.
   */
  async proposeEdit(path: TermPath, action: EditAction): Promise<string | null> {
    const program = await this.service.parseTerm(this.programText);
    if ("error" in program) {
      return null;
    }
    const text = editActionDelta(program.ast, path, action);
    if (text !== null) {
      this.deltaText = text;
    }
    return text;
  }
}
