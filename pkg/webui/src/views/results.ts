/** Results view: definition panel, ranked experts, relevant publications. */

import { el } from "../dom.js";
import { MESSAGES } from "../messages.js";
import type { DefinitionResponse, SearchResponse } from "../types.js";

export interface ResultsCallbacks {
  onOpenProfile(id: string): void;
}

export function renderDefinitionPanel(definition: DefinitionResponse | null): HTMLElement | null {
  if (!definition || !definition.found) return null;
  return el(
    "aside",
    { class: "definition-panel", "data-testid": "definition-panel" },
    el("p", { class: "definition-summary" }, definition.summary),
    el(
      "p",
      { class: "definition-source" },
      `${MESSAGES.definitionSource}: `,
      el("a", { href: definition.source_url, rel: "noopener" }, definition.source_url),
    ),
  );
}

export function renderResults(
  search: SearchResponse,
  definition: DefinitionResponse | null,
  callbacks: ResultsCallbacks,
): HTMLElement {
  const section = el("section", { class: "results-view" });
  const panel = renderDefinitionPanel(definition);
  if (panel) section.append(panel);

  section.append(el("h2", {}, MESSAGES.expertsHeading));
  if (search.experts.length === 0) {
    section.append(el("p", { class: "empty-state", "data-testid": "no-experts" }, MESSAGES.noExperts));
  } else {
    const list = el("ol", { class: "expert-list", "data-testid": "expert-list" });
    for (const hit of search.experts) {
      const chips = el("span", { class: "area-chips" });
      for (const label of hit.matched_areas) {
        chips.append(el("span", { class: "chip" }, label));
      }
      list.append(
        el(
          "li",
          { class: "expert-hit" },
          el(
            "button",
            {
              class: "expert-name",
              "data-researcher": hit.researcher,
              onclick: () => callbacks.onOpenProfile(hit.researcher),
            },
            hit.name,
          ),
          el("span", { class: "department" }, hit.department),
          el("span", { class: "score" }, `${MESSAGES.score}: ${hit.score.toFixed(2)}`),
          chips,
        ),
      );
    }
    section.append(list);
  }

  section.append(el("h2", {}, MESSAGES.documentsHeading));
  if (search.documents.length === 0) {
    section.append(el("p", { class: "empty-state" }, MESSAGES.noDocuments));
  } else {
    const list = el("ul", { class: "document-list", "data-testid": "document-list" });
    for (const doc of search.documents) {
      list.append(
        el(
          "li",
          {},
          el("span", { class: "doc-title" }, doc.title),
          el("span", { class: "score" }, doc.score.toFixed(2)),
        ),
      );
    }
    section.append(list);
  }
  return section;
}
