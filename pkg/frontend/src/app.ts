/** Single-page client for the co-writing service.
 *
 * Plain DOM, no framework: the session panel re-renders its dynamic parts
 * (suggestions, draft, analytics) from the server's state view after every
 * action, so what is on screen is always what the service replayed from its
 * event log. Mutations send the client's view of the next event ordinal;
 * when the server says the view is stale (409) the app refreshes and asks
 * the user to retry rather than writing blind.
 */
import {
  ApiError,
  Client,
  SessionAnalytics,
  SessionView,
  TemplateInfo,
} from "./api.js";

type Attrs = Record<string, string | boolean>;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (typeof value === "boolean") {
      if (value) node.setAttribute(key, "");
    } else if (key === "class") {
      node.className = value;
    } else {
      node.setAttribute(key, value);
    }
  }
  node.append(...children);
  return node;
}

function must<T>(value: T | null | undefined, what: string): T {
  if (value === null || value === undefined) {
    throw new Error(`missing ${what}`);
  }
  return value;
}

export class App {
  readonly client: Client;
  private readonly root: HTMLElement;
  private templates: TemplateInfo[] = [];
  private view: SessionView | null = null;
  private report: SessionAnalytics | null = null;
  private editingIndex: number | null = null;
  private readonly onHashChange = () => {
    // createSession navigates by hand after setting the hash; skip the echo
    // so the composer is not rebuilt under the user mid-thought
    const target = this.sessionIdFromHash();
    if (target !== null && this.view !== null && target === this.view.session_id) {
      return;
    }
    void this.route();
  };

  constructor(root: HTMLElement, apiBase: string) {
    this.root = root;
    this.client = new Client(apiBase.replace(/\/+$/, ""));
  }

  async start(): Promise<void> {
    window.addEventListener("hashchange", this.onHashChange);
    try {
      this.templates = (await this.client.templates()).templates;
    } catch (error) {
      this.root.replaceChildren(
        el("div", { class: "status error", "data-testid": "status" },
          `cannot reach the service at ${this.client.base}: ${String(error)}`),
      );
      return;
    }
    await this.route();
  }

  dispose(): void {
    window.removeEventListener("hashchange", this.onHashChange);
  }

  private sessionIdFromHash(): string | null {
    const match = window.location.hash.match(/^#\/session\/([A-Za-z0-9_-]+)$/);
    return match ? must(match[1], "session id") : null;
  }

  async route(): Promise<void> {
    const sessionId = this.sessionIdFromHash();
    if (sessionId === null) {
      await this.renderHome();
    } else {
      await this.openSession(sessionId);
    }
  }

  // ----------------------------------------------------------------- home

  private async renderHome(): Promise<void> {
    this.view = null;
    this.report = null;
    const listing = await this.client.listSessions();
    const list = el("ul", { class: "session-list", "data-testid": "session-list" });
    for (const row of listing.sessions) {
      list.append(
        el("li", {},
          el("a", {
            href: `#/session/${row.session_id}`,
            "data-testid": "session-link",
          }, row.title || row.session_id),
          el("span", { class: "muted" },
            ` ${row.lines} line${row.lines === 1 ? "" : "s"}${row.finalized ? ", finalized" : ""}`),
        ),
      );
    }
    const titleInput = el("input", {
      type: "text",
      placeholder: "title for a new poem",
      "data-testid": "title-input",
    });
    const createButton = el("button", { "data-testid": "create-session" }, "Start a session");
    createButton.addEventListener("click", () => {
      void this.guard(async () => {
        const view = await this.client.createSession(titleInput.value.trim());
        window.location.hash = `#/session/${view.session_id}`;
        await this.openSession(view.session_id);
      });
    });
    this.root.replaceChildren(
      this.header(),
      el("main", { class: "home" },
        el("section", { class: "panel" },
          el("h2", {}, "New session"),
          el("div", { class: "row" }, titleInput, createButton),
        ),
        el("section", { class: "panel" },
          el("h2", {}, "Sessions"),
          listing.sessions.length ? list : el("p", { class: "muted" }, "none yet"),
        ),
      ),
    );
  }

  // -------------------------------------------------------------- session

  private async openSession(sessionId: string): Promise<void> {
    this.view = await this.client.getSession(sessionId);
    this.report = await this.client.analytics(sessionId);
    this.editingIndex = null;
    this.renderSessionSkeleton();
    this.renderDynamic();
  }

  private async refresh(): Promise<void> {
    const view = must(this.view, "open session");
    this.view = await this.client.getSession(view.session_id);
    this.report = await this.client.analytics(view.session_id);
    this.renderDynamic();
  }

  private header(): HTMLElement {
    return el("header", {},
      el("h1", {}, el("a", { href: "#" }, "versecraft")),
      el("div", { class: "status", "data-testid": "status" }),
    );
  }

  private setStatus(message: string, isError = false): void {
    const status = this.root.querySelector('[data-testid="status"]');
    if (status) {
      status.textContent = message;
      status.className = isError ? "status error" : "status";
    }
  }

  private async guard(action: () => Promise<void>): Promise<void> {
    try {
      await action();
      this.setStatus("");
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        if (this.view) await this.refresh();
        this.setStatus(`rejected: ${error.describe()}`, true);
      } else if (error instanceof ApiError) {
        this.setStatus(error.describe(), true);
      } else {
        this.setStatus(String(error), true);
      }
    }
  }

  private renderSessionSkeleton(): void {
    const view = must(this.view, "session view");
    this.root.replaceChildren(
      this.header(),
      el("main", { class: "session" },
        el("div", { class: "session-head" },
          el("h2", { "data-testid": "session-title" }, view.title || view.session_id),
          el("span", { class: "badge finalized", "data-testid": "finalized-badge", hidden: true }, "finalized"),
          el("span", { class: "spacer" }),
          el("button", { class: "subtle", "data-testid": "finalize" }, "Finalize poem"),
        ),
        this.composer(),
        el("div", { class: "columns" },
          el("section", { class: "panel suggestions", "data-testid": "suggestion-panel" }),
          el("aside", { class: "side" },
            el("section", { class: "panel draft", "data-testid": "draft-panel" }),
            el("section", { class: "panel analytics", "data-testid": "analytics-panel" }),
          ),
        ),
      ),
    );
    const finalize = must(
      this.root.querySelector<HTMLButtonElement>('[data-testid="finalize"]'),
      "finalize button",
    );
    finalize.addEventListener("click", () => {
      void this.guard(async () => {
        const current = must(this.view, "session view");
        await this.client.finalize(current.session_id, current.next_ordinal);
        await this.refresh();
      });
    });
  }

  // ------------------------------------------------------------- composer

  private composer(): HTMLElement {
    const picker = el("select", { "data-testid": "template-picker" },
      el("option", { value: "" }, "free text instruction"),
    );
    for (const template of this.templates) {
      picker.append(
        el("option", { value: template.template_id },
          template.template_id + (template.composite ? " (composite)" : "")),
      );
    }
    const slots = el("div", { class: "slots", "data-testid": "template-args" });
    const freeText = el("input", {
      type: "text",
      class: "wide",
      placeholder: "tell the poet what the next line should do",
      "data-testid": "free-text",
    });
    const preview = el("div", { class: "preview", "data-testid": "instruction-preview" });
    const send = el("button", { "data-testid": "send-instruction" }, "Ask for lines");

    const currentTemplate = (): TemplateInfo | null =>
      this.templates.find((t) => t.template_id === picker.value) ?? null;

    const currentPattern = (): string | null => {
      const template = currentTemplate();
      if (!template) return null;
      const formPicker = slots.querySelector<HTMLSelectElement>('[data-testid="form-picker"]');
      const index = formPicker ? Number(formPicker.value) : 0;
      return template.paraphrases[index] ?? template.paraphrases[0] ?? null;
    };

    const buildText = (): string => {
      const pattern = currentPattern();
      if (pattern === null) return freeText.value.trim();
      let text = pattern;
      const argInputs = slots.querySelectorAll<HTMLInputElement>("input[data-slot]");
      argInputs.forEach((input) => {
        const slot = must(input.getAttribute("data-slot"), "slot name");
        text = text.replace(`{${slot}}`, `'${input.value.trim()}'`);
      });
      return text;
    };

    const updatePreview = (): void => {
      preview.textContent = currentTemplate() ? buildText() : "";
    };

    const renderSlots = (): void => {
      const template = currentTemplate();
      slots.replaceChildren();
      freeText.hidden = template !== null;
      if (!template) {
        updatePreview();
        return;
      }
      const formPicker = el("select", { "data-testid": "form-picker" });
      template.paraphrases.forEach((pattern, index) => {
        formPicker.append(el("option", { value: String(index) }, pattern));
      });
      slots.append(formPicker);
      const renderArgInputs = (): void => {
        slots.querySelectorAll("input[data-slot]").forEach((n) => n.remove());
        const pattern = must(currentPattern(), "form pattern");
        for (const slot of ["arg1", "arg2"]) {
          if (pattern.includes(`{${slot}}`)) {
            slots.append(
              el("input", {
                type: "text",
                "data-slot": slot,
                "data-testid": slot === "arg1" ? "arg-1" : "arg-2",
                placeholder: slot,
              }),
            );
          }
        }
      };
      formPicker.addEventListener("change", () => {
        renderArgInputs();
        updatePreview();
      });
      renderArgInputs();
      updatePreview();
    };

    picker.addEventListener("change", renderSlots);
    slots.addEventListener("input", updatePreview);
    freeText.addEventListener("input", updatePreview);
    send.addEventListener("click", () => {
      void this.guard(async () => {
        const text = buildText();
        if (!text) {
          this.setStatus("nothing to send: write an instruction first", true);
          return;
        }
        const current = must(this.view, "session view");
        await this.client.instruct(current.session_id, text, current.next_ordinal);
        freeText.value = "";
        slots.querySelectorAll<HTMLInputElement>("input[data-slot]").forEach((input) => {
          input.value = "";
        });
        updatePreview();
        await this.refresh();
      });
    });

    renderSlots();
    return el("section", { class: "panel composer", "data-testid": "composer" },
      el("h3", {}, "Next instruction"),
      el("div", { class: "row" }, picker, slots),
      freeText,
      preview,
      el("div", { class: "row" }, send),
    );
  }

  // ------------------------------------------------------ dynamic panels

  private renderDynamic(): void {
    const view = must(this.view, "session view");
    this.renderSuggestions();
    this.renderDraft();
    this.renderAnalytics();
    const badge = this.root.querySelector<HTMLElement>('[data-testid="finalized-badge"]');
    if (badge) badge.hidden = !view.finalized;
    const finalize = this.root.querySelector<HTMLButtonElement>('[data-testid="finalize"]');
    if (finalize) finalize.disabled = view.finalized;
    const send = this.root.querySelector<HTMLButtonElement>('[data-testid="send-instruction"]');
    if (send) send.disabled = view.finalized;
  }

  private renderSuggestions(): void {
    const view = must(this.view, "session view");
    const panel = must(
      this.root.querySelector('[data-testid="suggestion-panel"]'),
      "suggestion panel",
    );
    panel.replaceChildren(el("h3", {}, "Suggestions"));
    if (!view.instructions.length) {
      panel.append(el("p", { class: "muted" }, "no instructions yet"));
      return;
    }
    for (const instruction of [...view.instructions].reverse()) {
      const group = el("div", { class: "request" },
        el("div", { class: "request-head" },
          el("span", { class: "badge" }, instruction.template_id ?? "freeform"),
          el("span", { class: "request-text" }, instruction.text),
        ),
      );
      const items = el("ul", { class: "suggestion-list" });
      for (const suggestion of view.suggestions) {
        if (suggestion.request_id !== instruction.request_id) continue;
        const accept = el("button", {
          "data-testid": `accept-${suggestion.suggestion_id}`,
        }, suggestion.accepted ? "accepted" : "accept");
        accept.disabled = suggestion.accepted || view.finalized;
        accept.addEventListener("click", () => {
          void this.guard(async () => {
            const current = must(this.view, "session view");
            await this.client.accept(
              current.session_id,
              suggestion.suggestion_id,
              current.next_ordinal,
            );
            await this.refresh();
          });
        });
        items.append(
          el("li", { class: "suggestion", "data-testid": "suggestion" },
            el("span", { class: suggestion.passed ? "badge pass" : "badge fail" },
              suggestion.passed ? "passes" : "fails"),
            el("span", { class: "suggestion-text" }, suggestion.text),
            suggestion.flags.length
              ? el("span", { class: "flags" }, suggestion.flags.join(", "))
              : "",
            accept,
          ),
        );
      }
      group.append(items);
      panel.append(group);
    }
  }

  private renderDraft(): void {
    const view = must(this.view, "session view");
    const panel = must(this.root.querySelector('[data-testid="draft-panel"]'), "draft panel");
    panel.replaceChildren(el("h3", {}, "Draft"));
    if (!view.draft.length) {
      panel.append(el("p", { class: "muted" }, "accept a suggestion to start the poem"));
      return;
    }
    const list = el("ol", { class: "draft-list", "data-testid": "draft-list" });
    view.draft.forEach((line, index) => {
      const item = el("li", {});
      if (this.editingIndex === index) {
        const input = el("input", {
          type: "text",
          class: "wide",
          "data-testid": "edit-input",
        });
        input.value = line;
        const save = el("button", { "data-testid": "save-line" }, "save");
        save.addEventListener("click", () => {
          void this.guard(async () => {
            const current = must(this.view, "session view");
            const lines = [...current.draft];
            lines[index] = input.value;
            await this.client.saveDraft(current.session_id, lines, current.next_ordinal);
            this.editingIndex = null;
            await this.refresh();
          });
        });
        const cancel = el("button", { class: "subtle" }, "cancel");
        cancel.addEventListener("click", () => {
          this.editingIndex = null;
          this.renderDraft();
        });
        item.append(input, save, cancel);
      } else {
        const edit = el("button", {
          class: "subtle",
          "data-testid": `edit-line-${index}`,
        }, "edit");
        edit.disabled = view.finalized;
        edit.addEventListener("click", () => {
          this.editingIndex = index;
          this.renderDraft();
        });
        item.append(el("span", { "data-testid": "draft-line" }, line), edit);
      }
      list.append(item);
    });
    panel.append(list);
  }

  private renderAnalytics(): void {
    const report = this.report;
    const panel = must(
      this.root.querySelector('[data-testid="analytics-panel"]'),
      "analytics panel",
    );
    panel.replaceChildren(el("h3", {}, "Analytics"));
    if (!report) return;
    const entries = Object.entries(report.histogram);
    const total = entries.reduce((sum, [, count]) => sum + count, 0);
    const peak = Math.max(1, ...entries.map(([, count]) => count));
    const histogram = el("div", { class: "histogram", "data-testid": "histogram" });
    for (const [template, count] of entries) {
      const bar = el("div", { class: "bar" });
      bar.style.width = `${(count / peak) * 100}%`;
      histogram.append(
        el("div", {
          class: "histogram-row",
          "data-testid": "histogram-row",
          "data-template": template,
          "data-count": String(count),
        },
          el("span", { class: "label" }, template),
          el("div", { class: "bar-track" }, bar),
          el("span", { class: "count" }, String(count)),
        ),
      );
    }
    panel.append(
      el("div", { class: "metric" },
        el("span", {}, "from suggestions (poem ROUGE-L) "),
        el("strong", { "data-testid": "poem-rl" }, report.poem_rouge_l.toFixed(4)),
      ),
      el("div", { class: "metric" },
        el("span", {}, "instructions "),
        el("strong", { "data-testid": "histogram-total" }, String(total)),
        el("span", {}, ` · accepted ${report.accepted} · edits ${report.edits}`),
      ),
      histogram,
    );
    if (report.line_credits.length) {
      const credits = el("ul", { class: "credits" });
      for (const credit of report.line_credits) {
        credits.append(
          el("li", { "data-testid": "line-credit" },
            `line ${credit.line_index + 1}: ${credit.score.toFixed(3)}` +
              (credit.suggestion_id ? ` via ${credit.suggestion_id}` : " (own words)"),
          ),
        );
      }
      panel.append(credits);
    }
  }
}

export function initApp(root: HTMLElement, apiBase: string): App {
  const app = new App(root, apiBase);
  void app.start();
  return app;
}
