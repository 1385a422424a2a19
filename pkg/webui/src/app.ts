/** Hash-routed single-page application over the backend JSON API.
 *
 * The URL hash fully encodes the view state; in-flight fetches carry a
 * sequence number so a stale response (superseded query or navigation)
 * is discarded instead of clobbering the current view.
 */

import { ApiClient, NotFoundError } from "./api.js";
import { clear, el } from "./dom.js";
import { MESSAGES } from "./messages.js";
import {
  FieldSort,
  ViewState,
  decodeState,
  encodeState,
  homeState,
  profileState,
  resultsState,
} from "./state.js";
import { renderHome } from "./views/home.js";
import { renderProfile } from "./views/profile.js";
import { renderResults } from "./views/results.js";

export class App {
  private sequence = 0;
  readonly root: HTMLElement;
  readonly api: ApiClient;
  state: ViewState = homeState();

  constructor(root: HTMLElement, api: ApiClient) {
    this.root = root;
    this.api = api;
  }

  /** Read the current hash, render, and start listening for changes. */
  start(): Promise<void> {
    window.addEventListener("hashchange", () => {
      void this.applyState(decodeState(window.location.hash), false);
    });
    const form = document.querySelector<HTMLFormElement>("#search-form");
    form?.addEventListener("submit", (event) => {
      event.preventDefault();
      const input = form.querySelector<HTMLInputElement>("input[name=q]");
      if (input && input.value.trim()) {
        this.navigate(resultsState(input.value.trim(), this.state.fieldSort));
      }
    });
    return this.applyState(decodeState(window.location.hash), false);
  }

  navigate(state: ViewState): void {
    void this.applyState(state, true);
  }

  private async applyState(state: ViewState, push: boolean): Promise<void> {
    this.state = state;
    const hash = encodeState(state);
    if (push && window.location.hash !== hash) {
      // Triggers no reload; hashchange re-entry is guarded by the sequence.
      window.history.pushState(null, "", hash);
    }
    const sequence = ++this.sequence;
    this.renderLoading();
    try {
      const view = await this.buildView(state);
      if (sequence !== this.sequence) return; // superseded navigation
      clear(this.root);
      this.root.append(view);
      this.syncSearchBox(state);
    } catch (error) {
      if (sequence !== this.sequence) return;
      this.renderError(state, error);
    }
  }

  private async buildView(state: ViewState): Promise<HTMLElement> {
    switch (state.route) {
      case "results": {
        const [search, definition] = await Promise.all([
          this.api.search(state.query),
          this.api.definition(state.query).catch(() => null),
        ]);
        return renderResults(search, definition, {
          onOpenProfile: (id) => this.navigate(profileState(id)),
        });
      }
      case "profile": {
        try {
          const profile = await this.api.expert(state.selectedResearcher ?? "");
          return renderProfile(profile, { onBack: () => window.history.back() });
        } catch (error) {
          if (error instanceof NotFoundError) {
            return el(
              "section",
              { class: "not-found", "data-testid": "not-found" },
              el("p", {}, MESSAGES.notFound),
              el("button", { class: "back-link", onclick: () => this.navigate(homeState()) }, MESSAGES.backToResults),
            );
          }
          throw error;
        }
      }
      default: {
        const [cloud, fields] = await Promise.all([this.api.wordcloud(), this.api.fields()]);
        return renderHome(cloud, fields.fields, state.fieldSort, {
          onSearch: (label) => this.navigate(resultsState(label, this.state.fieldSort)),
          onSort: (sort: FieldSort) => this.navigate({ ...this.state, fieldSort: sort }),
        });
      }
    }
  }

  private renderLoading(): void {
    clear(this.root);
    this.root.append(el("p", { class: "loading", "data-testid": "loading" }, MESSAGES.loading));
  }

  private renderError(state: ViewState, error: unknown): void {
    clear(this.root);
    this.root.append(
      el(
        "section",
        { class: "error-panel", "data-testid": "error-panel" },
        el("p", {}, MESSAGES.loadFailed),
        el("p", { class: "error-detail" }, error instanceof Error ? error.message : String(error)),
        el("button", { class: "retry", onclick: () => void this.applyState(state, false) }, MESSAGES.retry),
      ),
    );
  }

  private syncSearchBox(state: ViewState): void {
    const input = document.querySelector<HTMLInputElement>("#search-form input[name=q]");
    if (input) input.value = state.route === "results" ? state.query : "";
  }
}

export function mountApp(root: HTMLElement, baseUrl = ""): App {
  const app = new App(root, new ApiClient(baseUrl));
  void app.start();
  return app;
}
