/**
 * Entry point. In a browser it mounts the playground into #app and wires
 * the controls; run from node it prints the rendered page for a sample
 * session, which is handy for eyeballing the markup without a browser.
 */
import { ServiceClient } from "./client.js";
import { EditActionName, TermPath, TermStep } from "./editActions.js";
import { renderPage } from "./render.js";
import { PlaygroundSession } from "./session.js";

export const DEFAULT_SERVICE_URL = "http://127.0.0.1:7411";

const SAMPLE_PROGRAM = "inr ()";
const SAMPLE_DELTA = "inl! ~{()}";

function mount(root: HTMLElement, session: PlaygroundSession): void {
  let selected: TermPath = [];

  const redraw = () => {
    root.innerHTML = renderPage(session.view());
    wire();
  };

  const input = (testid: string): HTMLTextAreaElement =>
    root.querySelector(`[data-testid="${testid}"]`) as HTMLTextAreaElement;

  function wire(): void {
    input("program-input").addEventListener("change", (event) => {
      session.programText = (event.target as HTMLTextAreaElement).value;
    });
    input("delta-input").addEventListener("change", (event) => {
      session.deltaText = (event.target as HTMLTextAreaElement).value;
    });
    root.querySelector(`[data-testid="fuel-input"]`)?.addEventListener("change", (event) => {
      const value = Number((event.target as HTMLInputElement).value);
      if (Number.isInteger(value) && value > 0) {
        session.fuel = value;
      }
    });
    root.querySelector(`[data-testid="submit-delta"]`)?.addEventListener("click", () => {
      void session.submitDelta().then(redraw);
    });
    root.querySelectorAll(`[data-testid="source-tree"] li`).forEach((node) => {
      node.addEventListener("click", (event) => {
        event.stopPropagation();
        const raw = (node as HTMLElement).dataset["path"] ?? "";
        selected = raw === "" ? [] : (raw.split(".") as TermStep[]);
      });
    });
  }

  // Edit actions live on the keyboard for now: i/r/o wrap, d deletes the
  // frame, f flips, p pairs with a prompted sibling, n renames.
  const keymap: Record<string, EditActionName> = {
    i: "wrap-in-inl",
    r: "wrap-in-inr",
    o: "wrap-in-roll",
    d: "delete-frame",
    f: "flip",
    p: "pair-with",
    n: "rename-variable",
  };

  root.ownerDocument.addEventListener("keydown", (event) => {
    const name = keymap[event.key];
    if (name === undefined || event.target instanceof HTMLTextAreaElement) {
      return;
    }
    const action =
      name === "pair-with"
        ? { action: name, sibling: window.prompt("pair with which term?") ?? "()" }
        : name === "rename-variable"
          ? { action: name, to: window.prompt("new variable name?") ?? "x" }
          : { action: name };
    void session.proposeEdit(selected, action).then((text) => {
      if (text === null) {
        window.alert(`${name} does not apply to the selected node`);
      } else {
        redraw();
      }
    });
  });

  redraw();
}

if (typeof window === "undefined") {
  const session = new PlaygroundSession(new ServiceClient(DEFAULT_SERVICE_URL));
  session.programText = SAMPLE_PROGRAM;
  session.deltaText = SAMPLE_DELTA;
  console.log(renderPage(session.view()));
} else {
  const root = window.document.getElementById("app");
  if (root !== null) {
    const session = new PlaygroundSession(new ServiceClient(DEFAULT_SERVICE_URL));
    session.programText = SAMPLE_PROGRAM;
    session.deltaText = SAMPLE_DELTA;
    mount(root, session);
  }
}
