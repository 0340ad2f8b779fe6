/** Scripted walkthrough of the UI against a live stub-backed service.
 *
 * The suite boots the real HTTP service in a subprocess (fresh temp store),
 * mounts the compiled app into a DOM, and drives it the way a person would:
 * create a session, mix template-picker and free-text instructions, accept
 * suggestions, hand-edit a line, reload mid-session, finalize, and read the
 * analytics panel. Run `npm run build` first (the npm test script does).
 */
import { afterAll, beforeAll, expect, it } from "vitest";
import { spawn, ChildProcess } from "node:child_process";
import { initApp } from "../dist/app.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

const SERVER_SCRIPT = `
import tempfile
import uvicorn
from versecraft.service import ServiceConfig, create_app

root = tempfile.mkdtemp(prefix="ui-e2e-")
app = create_app(ServiceConfig(store_root=root))
uvicorn.run(app, host="127.0.0.1", port=${PORT}, log_level="warning")
`;

let server: ChildProcess;

async function waitFor<T>(
  probe: () => T | null | undefined | false,
  what: string,
  timeoutMs = 20_000,
): Promise<T> {
  const deadline = Date.now() + timeoutMs;
  let lastError: unknown = null;
  for (;;) {
    try {
      const value = probe();
      if (value) return value as T;
      lastError = null;
    } catch (error) {
      lastError = error;
    }
    if (Date.now() > deadline) {
      throw new Error(
        `timed out waiting for ${what}` + (lastError ? `: ${String(lastError)}` : ""),
      );
    }
    await new Promise((resolve) => setTimeout(resolve, 25));
  }
}

function q<T extends Element>(selector: string): T {
  const node = document.querySelector<T>(selector);
  if (!node) throw new Error(`no element matches ${selector}`);
  return node;
}

function draftLines(): string[] {
  return [...document.querySelectorAll('[data-testid="draft-line"]')].map(
    (node) => node.textContent ?? "",
  );
}

function suggestionItems(): Element[] {
  return [...document.querySelectorAll('[data-testid="suggestion"]')];
}

beforeAll(async () => {
  server = spawn("python3", ["-c", SERVER_SCRIPT], {
    stdio: ["ignore", "inherit", "inherit"],
  });
  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      const response = await fetch(`${BASE}/healthz`);
      if (response.ok) break;
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) throw new Error("service did not come up on " + BASE);
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
});

afterAll(() => {
  server?.kill();
});

it("runs a full co-writing session through the page", async () => {
  document.body.innerHTML = '<div id="app"></div>';
  const root = document.getElementById("app") as HTMLElement;
  window.location.hash = "";
  let app = initApp(root, BASE);

  // Home: create the session.
  const titleInput = await waitFor(
    () => document.querySelector<HTMLInputElement>('[data-testid="title-input"]'),
    "home panel",
  );
  titleInput.value = "Decadence";
  q<HTMLButtonElement>('[data-testid="create-session"]').click();
  await waitFor(
    () => q('[data-testid="session-title"]').textContent === "Decadence",
    "session panel titled Decadence",
  );
  const sessionId = window.location.hash.replace("#/session/", "");
  expect(sessionId).toMatch(/^[A-Za-z0-9_-]+$/);

  // Three instructions through the template picker.
  const picked: [string, string][] = [
    ["subject", "sun"],
    ["end", "glory"],
    ["rhyme", "grace"],
  ];
  for (const [index, [templateId, argument]] of picked.entries()) {
    const picker = q<HTMLSelectElement>('[data-testid="template-picker"]');
    picker.value = templateId;
    picker.dispatchEvent(new Event("change"));
    const argInput = await waitFor(
      () => document.querySelector<HTMLInputElement>('[data-testid="arg-1"]'),
      "argument slot",
    );
    argInput.value = argument;
    argInput.dispatchEvent(new Event("input", { bubbles: true }));
    const preview = q('[data-testid="instruction-preview"]').textContent ?? "";
    expect(preview).toContain(`'${argument}'`);
    q<HTMLButtonElement>('[data-testid="send-instruction"]').click();
    await waitFor(
      () => suggestionItems().length === (index + 1) * 5,
      `${(index + 1) * 5} suggestions on screen`,
    );
  }

  // One more as free text.
  const picker = q<HTMLSelectElement>('[data-testid="template-picker"]');
  picker.value = "";
  picker.dispatchEvent(new Event("change"));
  const freeText = await waitFor(() => {
    const node = document.querySelector<HTMLInputElement>('[data-testid="free-text"]');
    return node && !node.hidden ? node : null;
  }, "free text input");
  freeText.value = "let the night settle in around us";
  q<HTMLButtonElement>('[data-testid="send-instruction"]').click();
  await waitFor(() => suggestionItems().length === 20, "20 suggestions on screen");

  // Accept three passing suggestions, waiting for the draft to grow between
  // clicks so each accept carries a fresh ordinal.
  for (let accepted = 1; accepted <= 3; accepted += 1) {
    const target = await waitFor(() => {
      for (const item of suggestionItems()) {
        const badge = item.querySelector(".badge.pass");
        const button = item.querySelector<HTMLButtonElement>("button");
        if (badge && button && !button.disabled && button.textContent === "accept") {
          return button;
        }
      }
      return null;
    }, "an acceptable suggestion");
    target.click();
    await waitFor(
      () => draftLines().length === accepted,
      `draft with ${accepted} line(s)`,
    );
  }

  // Hand-edit the first line.
  q<HTMLButtonElement>('[data-testid="edit-line-0"]').click();
  const editInput = await waitFor(
    () => document.querySelector<HTMLInputElement>('[data-testid="edit-input"]'),
    "line editor",
  );
  const rewritten = "a hand-mended line of our own";
  editInput.value = rewritten;
  q<HTMLButtonElement>('[data-testid="save-line"]').click();
  await waitFor(() => draftLines()[0] === rewritten, "edited draft line");

  // Mid-session reload: a fresh app over the same hash must show exactly
  // what the server replays.
  app.dispose();
  root.replaceChildren();
  app = initApp(root, BASE);
  await waitFor(
    () => q('[data-testid="session-title"]').textContent === "Decadence",
    "session panel after reload",
  );
  const serverView = (await (await fetch(`${BASE}/sessions/${sessionId}`)).json()) as {
    title: string;
    finalized: boolean;
    draft: string[];
    suggestions: unknown[];
    instructions: unknown[];
  };
  await waitFor(
    () => suggestionItems().length === serverView.suggestions.length,
    "suggestions restored after reload",
  );
  expect(draftLines()).toEqual(serverView.draft);
  expect(serverView.draft[0]).toBe(rewritten);
  expect(serverView.instructions.length).toBe(4);
  expect(serverView.finalized).toBe(false);
  expect(
    q<HTMLElement>('[data-testid="finalized-badge"]').hidden,
  ).toBe(true);

  // Finalize through the page.
  q<HTMLButtonElement>('[data-testid="finalize"]').click();
  await waitFor(
    () => !q<HTMLElement>('[data-testid="finalized-badge"]').hidden,
    "finalized badge",
  );
  expect(q<HTMLButtonElement>('[data-testid="finalize"]').disabled).toBe(true);
  for (const item of suggestionItems()) {
    const button = item.querySelector<HTMLButtonElement>("button");
    expect(button?.disabled).toBe(true);
  }

  // Analytics panel: histogram totals the four instructions, poem ROUGE-L
  // sits in [0, 1].
  const rows = await waitFor(() => {
    const found = [...document.querySelectorAll('[data-testid="histogram-row"]')];
    return found.length ? found : null;
  }, "histogram rows");
  const byTemplate = new Map(
    rows.map((row) => [
      row.getAttribute("data-template"),
      Number(row.getAttribute("data-count")),
    ]),
  );
  expect(new Set(byTemplate.keys())).toEqual(
    new Set(["subject", "end", "rhyme", "freeform"]),
  );
  const total = [...byTemplate.values()].reduce((sum, count) => sum + count, 0);
  expect(total).toBe(4);
  expect(q('[data-testid="histogram-total"]').textContent).toBe("4");
  const poemRl = Number(q('[data-testid="poem-rl"]').textContent);
  expect(Number.isFinite(poemRl)).toBe(true);
  expect(poemRl).toBeGreaterThanOrEqual(0);
  expect(poemRl).toBeLessThanOrEqual(1);

  app.dispose();
});
