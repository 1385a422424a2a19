/** Home view: word cloud overview plus the sortable research-field list. */

import { el } from "../dom.js";
import { MESSAGES } from "../messages.js";
import type { FieldSort } from "../state.js";
import type { FieldRow, WordcloudResponse } from "../types.js";
import { sizeItems } from "../wordcloud.js";

export interface HomeCallbacks {
  onSearch(label: string): void;
  onSort(sort: FieldSort): void;
}

export function sortFields(rows: FieldRow[], sort: FieldSort): FieldRow[] {
  const sorted = [...rows];
  switch (sort) {
    case "by_publications":
      sorted.sort((a, b) => b.publication_count - a.publication_count || a.label.localeCompare(b.label));
      break;
    case "by_label":
      sorted.sort((a, b) => a.label.localeCompare(b.label));
      break;
    default:
      sorted.sort((a, b) => b.researcher_count - a.researcher_count || a.label.localeCompare(b.label));
  }
  return sorted;
}

export function renderWordcloud(cloud: WordcloudResponse, onSearch: (label: string) => void): HTMLElement {
  const container = el("div", { class: "wordcloud", "data-testid": "wordcloud" });
  if (cloud.items.length === 0) {
    container.append(el("p", { class: "empty-state" }, MESSAGES.cloudEmpty));
    return container;
  }
  for (const item of sizeItems(cloud.items)) {
    container.append(
      el(
        "button",
        {
          class: `cloud-item cloud-${item.kind}`,
          style: `font-size:${item.fontPx}px`,
          "data-weight": String(item.weight),
          onclick: () => onSearch(item.text),
        },
        item.text,
      ),
    );
  }
  return container;
}

export function renderFieldTable(
  rows: FieldRow[],
  sort: FieldSort,
  callbacks: HomeCallbacks,
): HTMLElement {
  const header = (label: string, value: FieldSort) =>
    el(
      "th",
      {},
      el(
        "button",
        {
          class: sort === value ? "sort-button active" : "sort-button",
          "data-sort": value,
          onclick: () => callbacks.onSort(value),
        },
        label,
      ),
    );
  const body = el("tbody", {});
  for (const row of sortFields(rows, sort)) {
    body.append(
      el(
        "tr",
        {},
        el(
          "td",
          {},
          el(
            "button",
            { class: "field-link", onclick: () => callbacks.onSearch(row.label) },
            row.label,
          ),
        ),
        el("td", { class: "num" }, String(row.researcher_count)),
        el("td", { class: "num" }, String(row.publication_count)),
      ),
    );
  }
  return el(
    "table",
    { class: "field-table", "data-testid": "field-table" },
    el(
      "thead",
      {},
      el(
        "tr",
        {},
        header(MESSAGES.field, "by_label"),
        header(MESSAGES.researchers, "by_researchers"),
        header(MESSAGES.publications, "by_publications"),
      ),
    ),
    body,
  );
}

export function renderHome(
  cloud: WordcloudResponse,
  fields: FieldRow[],
  sort: FieldSort,
  callbacks: HomeCallbacks,
): HTMLElement {
  return el(
    "section",
    { class: "home-view" },
    el("h2", {}, MESSAGES.cloudHeading),
    renderWordcloud(cloud, callbacks.onSearch),
    el("h2", {}, MESSAGES.fieldsHeading),
    renderFieldTable(fields, sort, callbacks),
  );
}
