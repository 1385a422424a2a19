/** Profile view: areas grouped by provenance source, publications,
 * citation bars, and external links. Phone numbers never reach this
 * client; the API does not expose them. */

import { el } from "../dom.js";
import { MESSAGES } from "../messages.js";
import type { AreaGroup, ExpertProfile } from "../types.js";

export interface ProfileCallbacks {
  onBack(): void;
}

const SOURCE_ORDER = ["institution_website", "scholar_profile", "document_classifier"];

export function groupAreasBySource(areas: AreaGroup[]): Map<string, AreaGroup[]> {
  const groups = new Map<string, AreaGroup[]>();
  for (const source of SOURCE_ORDER) {
    const matching = areas.filter((area) => area.sources.some((s) => s.source === source));
    if (matching.length > 0) groups.set(source, matching);
  }
  return groups;
}

function citationBars(series: [number, number][]): HTMLElement {
  const max = Math.max(1, ...series.map(([, count]) => count));
  const chart = el("div", { class: "citation-bars", "data-testid": "citation-bars" });
  for (const [year, count] of series) {
    chart.append(
      el(
        "div",
        { class: "citation-bar" },
        el("span", { class: "bar", style: `height:${Math.round((count / max) * 60)}px`, title: String(count) }),
        el("span", { class: "year" }, String(year)),
      ),
    );
  }
  return chart;
}

export function renderProfile(profile: ExpertProfile, callbacks: ProfileCallbacks): HTMLElement {
  const section = el("section", { class: "profile-view", "data-testid": "profile-view" });
  section.append(
    el("button", { class: "back-link", onclick: () => callbacks.onBack() }, MESSAGES.backToResults),
    el("h2", {}, profile.name),
    el("p", { class: "profile-meta" }, `${profile.department} · ${profile.institution}`),
    el("p", { class: "profile-email" }, profile.email),
  );

  section.append(el("h3", {}, MESSAGES.profileAreasHeading));
  for (const [source, areas] of groupAreasBySource(profile.areas)) {
    const group = el("div", { class: "area-group", "data-source": source });
    group.append(el("h4", {}, MESSAGES.sourceNames[source] ?? source));
    const chips = el("div", { class: "area-chips" });
    for (const area of areas) {
      const chip = el("span", { class: "chip", "data-label": area.label }, area.label);
      if (area.paper_count > 0) {
        chip.append(el("span", { class: "paper-count" }, ` (${MESSAGES.paperCount(area.paper_count)})`));
      }
      chips.append(chip);
    }
    group.append(chips);
    section.append(group);
  }

  section.append(el("h3", {}, MESSAGES.profilePublicationsHeading));
  const publications = el("ul", { class: "publication-list", "data-testid": "publication-list" });
  for (const pub of profile.publications) {
    publications.append(
      el(
        "li",
        {},
        el("span", { class: "doc-title" }, pub.title),
        pub.year != null ? el("span", { class: "year" }, ` (${pub.year})`) : null,
      ),
    );
  }
  section.append(publications);

  if (profile.citation_counts_by_year.length > 0) {
    section.append(el("h3", {}, MESSAGES.profileCitationsHeading));
    section.append(citationBars(profile.citation_counts_by_year));
  }

  if (profile.external_links.length > 0) {
    section.append(el("h3", {}, MESSAGES.profileLinksHeading));
    const links = el("ul", { class: "external-links" });
    for (const url of profile.external_links) {
      links.append(el("li", {}, el("a", { href: url, rel: "noopener" }, url)));
    }
    section.append(links);
  }
  return section;
}
