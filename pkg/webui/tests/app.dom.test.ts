// @vitest-environment jsdom
import { beforeEach, describe, expect, it } from "vitest";

import { mountApp } from "../src/app.js";
import type { ExpertProfile, SearchResponse } from "../src/types.js";
import { jsonResponse, mountShell, stubFetch, waitFor } from "./helpers.js";

const CLOUD = {
  items: [
    { text: "big data", kind: "bigram", weight: 3 },
    { text: "optimization", kind: "label", weight: 2 },
    { text: "robotics", kind: "label", weight: 1 },
  ],
  positive_list_applied: false,
};

const FIELDS = {
  fields: [
    { label: "big data", researcher_count: 3, publication_count: 5 },
    { label: "robotics", researcher_count: 1, publication_count: 9 },
    { label: "aaa field", researcher_count: 2, publication_count: 1 },
  ],
};

const SEARCH: SearchResponse = {
  query: "big data",
  experts: [
    {
      researcher: "r-001",
      name: "Prof. Example One",
      department: "CS",
      score: 12.5,
      matched_areas: ["Big Data"],
      top_documents: [{ id: "p-1", score: 9.9 }],
      explanation: "1 matching area(s)",
    },
  ],
  documents: [{ id: "p-1", title: "A Big Data Paper", score: 9.9 }],
};

const PROFILE: ExpertProfile = {
  id: "r-001",
  name: "Prof. Example One",
  department: "CS",
  institution: "Uni Example",
  email: "one@uni.example",
  areas: [
    { label: "Big Data", sources: [{ source: "institution_website", confidence: 1 }], paper_count: 2 },
    { label: "Neuro", sources: [{ source: "document_classifier", confidence: 0.4 }], paper_count: 1 },
    {
      label: "Search",
      sources: [
        { source: "scholar_profile", confidence: 1 },
        { source: "document_classifier", confidence: 0.3 },
      ],
      paper_count: 0,
    },
  ],
  publications: [{ id: "p-1", title: "A Big Data Paper", year: 2021, source_url: null, language: "en" }],
  citation_counts_by_year: [
    [2020, 4],
    [2021, 9],
  ],
  scholar_profile: { display_name: "Example One", affiliation: "Uni Example", stated_areas: ["Search"] },
  external_links: ["https://pubs.example.org/one"],
};

const DEFINITION_FOUND = {
  term: "big data",
  found: true,
  summary: "Large datasets explained.",
  source_url: "https://enc.example/big",
  fetched_at: "2024-01-01T00:00:00Z",
};

function standardRoutes() {
  return {
    "/api/wordcloud": () => jsonResponse(CLOUD),
    "/api/fields": () => jsonResponse(FIELDS),
    "/api/search": () => jsonResponse(SEARCH),
    "/api/definition": () => jsonResponse(DEFINITION_FOUND),
    "/api/experts/r-001": () => jsonResponse(PROFILE),
  };
}

beforeEach(() => {
  window.location.hash = "";
});

describe("home view", () => {
  it("renders the word cloud with the heaviest item largest", async () => {
    stubFetch(standardRoutes());
    const root = mountShell();
    mountApp(root);
    const cloud = await waitFor(() => root.querySelector("[data-testid=wordcloud]"));
    const buttons = [...cloud.querySelectorAll<HTMLButtonElement>(".cloud-item")];
    expect(buttons.map((b) => b.textContent)).toEqual(["big data", "optimization", "robotics"]);
    const px = (b: HTMLButtonElement) => parseInt(b.style.fontSize, 10);
    expect(px(buttons[0]!)).toBeGreaterThan(px(buttons[2]!));
  });

  it("renders an empty-state message for an empty cloud", async () => {
    stubFetch({
      ...standardRoutes(),
      "/api/wordcloud": () => jsonResponse({ items: [], positive_list_applied: false }),
    });
    const root = mountShell();
    mountApp(root);
    const empty = await waitFor(() => root.querySelector(".wordcloud .empty-state"));
    expect(empty.textContent).toContain("No research areas");
  });

  it("sorts the field table locally", async () => {
    stubFetch(standardRoutes());
    const root = mountShell();
    const app = mountApp(root);
    await waitFor(() => root.querySelector("[data-testid=field-table]"));
    const labels = () => [...root.querySelectorAll(".field-link")].map((n) => n.textContent);
    expect(labels()).toEqual(["big data", "aaa field", "robotics"]); // by researchers
    root.querySelector<HTMLButtonElement>("button[data-sort=by_label]")!.click();
    await waitFor(() => (app.state.fieldSort === "by_label" ? labels()[0] === "aaa field" : null));
    expect(labels()).toEqual(["aaa field", "big data", "robotics"]);
    root.querySelector<HTMLButtonElement>("button[data-sort=by_publications]")!.click();
    await waitFor(() => (labels()[0] === "robotics" ? true : null));
    expect(labels()).toEqual(["robotics", "big data", "aaa field"]);
  });

  it("clicking a cloud item issues that label as a search", async () => {
    stubFetch(standardRoutes());
    const root = mountShell();
    const app = mountApp(root);
    const cloud = await waitFor(() => root.querySelector("[data-testid=wordcloud]"));
    cloud.querySelector<HTMLButtonElement>(".cloud-item")!.click();
    await waitFor(() => root.querySelector("[data-testid=expert-list]"));
    expect(app.state.route).toBe("results");
    expect(app.state.query).toBe("big data");
    expect(window.location.hash).toContain("q=big+data");
  });

  it("clicking a field row issues that label as a search", async () => {
    stubFetch(standardRoutes());
    const root = mountShell();
    const app = mountApp(root);
    await waitFor(() => root.querySelector("[data-testid=field-table]"));
    root.querySelector<HTMLButtonElement>(".field-link")!.click();
    await waitFor(() => root.querySelector("[data-testid=expert-list]"));
    expect(app.state.query).toBe("big data");
  });
});

describe("results view", () => {
  it("shows definition panel, experts, and documents", async () => {
    stubFetch(standardRoutes());
    window.location.hash = "#/search?q=big%20data";
    const root = mountShell2();
    mountApp(root);
    await waitFor(() => root.querySelector("[data-testid=definition-panel]"));
    expect(root.querySelector(".definition-summary")!.textContent).toBe("Large datasets explained.");
    const first = root.querySelector<HTMLButtonElement>(".expert-name")!;
    expect(first.textContent).toBe("Prof. Example One");
    expect(root.querySelector("[data-testid=document-list]")!.textContent).toContain("A Big Data Paper");
  });

  it("hides the definition panel when found=false but keeps results", async () => {
    stubFetch({
      ...standardRoutes(),
      "/api/definition": () =>
        jsonResponse({ term: "x", found: false, summary: "", source_url: "", fetched_at: "" }),
    });
    window.location.hash = "#/search?q=big%20data";
    const root = mountShell2();
    mountApp(root);
    await waitFor(() => root.querySelector("[data-testid=expert-list]"));
    expect(root.querySelector("[data-testid=definition-panel]")).toBeNull();
  });

  it("renders the no-experts empty state", async () => {
    stubFetch({
      ...standardRoutes(),
      "/api/search": () => jsonResponse({ query: "zzz", experts: [], documents: [] }),
      "/api/definition": () =>
        jsonResponse({ term: "zzz", found: false, summary: "", source_url: "", fetched_at: "" }),
    });
    window.location.hash = "#/search?q=zzz";
    const root = mountShell2();
    mountApp(root);
    const empty = await waitFor(() => root.querySelector("[data-testid=no-experts]"));
    expect(empty.textContent).toContain("No experts");
  });

  it("navigates to the profile when an expert is clicked", async () => {
    stubFetch(standardRoutes());
    window.location.hash = "#/search?q=big%20data";
    const root = mountShell2();
    const app = mountApp(root);
    await waitFor(() => root.querySelector("[data-testid=expert-list]"));
    root.querySelector<HTMLButtonElement>(".expert-name")!.click();
    await waitFor(() => root.querySelector("[data-testid=profile-view]"));
    expect(app.state.route).toBe("profile");
    expect(window.location.hash).toBe("#/expert/r-001");
  });

  it("keeps results usable when the definition endpoint fails", async () => {
    stubFetch({
      ...standardRoutes(),
      "/api/definition": () => jsonResponse({ error: "boom" }, 500),
    });
    window.location.hash = "#/search?q=big%20data";
    const root = mountShell2();
    mountApp(root);
    await waitFor(() => root.querySelector("[data-testid=expert-list]"));
    expect(root.querySelector("[data-testid=definition-panel]")).toBeNull();
  });
});

describe("profile view", () => {
  it("groups areas by provenance source and never shows a phone", async () => {
    stubFetch(standardRoutes());
    window.location.hash = "#/expert/r-001";
    const root = mountShell2();
    mountApp(root);
    await waitFor(() => root.querySelector("[data-testid=profile-view]"));
    const groups = [...root.querySelectorAll(".area-group")].map((g) => g.getAttribute("data-source"));
    expect(groups).toEqual(["institution_website", "scholar_profile", "document_classifier"]);
    expect(root.textContent).toContain("one@uni.example");
    expect(root.textContent!.toLowerCase()).not.toContain("phone");
    expect(root.querySelectorAll("[data-testid=citation-bars] .citation-bar")).toHaveLength(2);
  });

  it("shows the not-found view with back navigation for unknown ids", async () => {
    stubFetch({
      ...standardRoutes(),
      "/api/experts/r-404": () => jsonResponse({ error: "unknown researcher id r-404" }, 404),
    });
    window.location.hash = "#/expert/r-404";
    const root = mountShell2();
    const app = mountApp(root);
    const panel = await waitFor(() => root.querySelector("[data-testid=not-found]"));
    panel.querySelector<HTMLButtonElement>(".back-link")!.click();
    await waitFor(() => root.querySelector("[data-testid=wordcloud]"));
    expect(app.state.route).toBe("home");
  });
});

describe("resilience", () => {
  it("renders a retryable error panel instead of a blank page", async () => {
    let fail = true;
    stubFetch({
      "/api/wordcloud": () => {
        if (fail) return jsonResponse({ error: "backend down" }, 503);
        return jsonResponse(CLOUD);
      },
      "/api/fields": () => jsonResponse(FIELDS),
    });
    const root = mountShell2();
    mountApp(root);
    const panel = await waitFor(() => root.querySelector("[data-testid=error-panel]"));
    expect(panel.textContent).toContain("Could not reach the search service");
    fail = false;
    panel.querySelector<HTMLButtonElement>(".retry")!.click();
    await waitFor(() => root.querySelector("[data-testid=wordcloud]"));
  });

  it("discards stale responses from superseded searches", async () => {
    let release: (() => void) | null = null;
    const slowFirst = new Promise<void>((resolve) => {
      release = resolve;
    });
    let call = 0;
    stubFetch({
      ...standardRoutes(),
      "/api/search": async (url) => {
        call += 1;
        if (call === 1) {
          await slowFirst; // first query resolves only after the second
          return jsonResponse({
            query: "slow",
            experts: [],
            documents: [{ id: "p-9", title: "STALE RESULT", score: 1 }],
          });
        }
        return jsonResponse(SEARCH);
      },
    });
    const root = mountShell2();
    const app = mountApp(root);
    await waitFor(() => root.querySelector("[data-testid=wordcloud]"));
    app.navigate({ route: "results", query: "slow", selectedResearcher: null, fieldSort: "by_researchers" });
    app.navigate({ route: "results", query: "big data", selectedResearcher: null, fieldSort: "by_researchers" });
    await waitFor(() => root.querySelector("[data-testid=expert-list]"));
    release!();
    await new Promise((resolve) => setTimeout(resolve, 80));
    expect(root.textContent).not.toContain("STALE RESULT");
    expect(root.textContent).toContain("A Big Data Paper");
  });
});

// The first mountShell wipes body + hash; this variant keeps the hash set by the test.
function mountShell2(): HTMLElement {
  const hash = window.location.hash;
  const root = mountShell();
  window.location.hash = hash;
  return root;
}
