/** The single catalog of user-visible strings. */

export const MESSAGES = {
  appTitle: "Research Expert Search",
  searchPlaceholder: "Search for a research area…",
  searchButton: "Search",
  fieldsHeading: "Research fields",
  cloudHeading: "Research areas at a glance",
  cloudEmpty: "No research areas indexed yet.",
  expertsHeading: "Domain experts",
  documentsHeading: "Relevant publications",
  noExperts: "No experts found for this search.",
  noDocuments: "No matching publications.",
  definitionSource: "Definition source",
  profileAreasHeading: "Research areas by source",
  profilePublicationsHeading: "Publications",
  profileCitationsHeading: "Citations per year",
  profileLinksHeading: "External links",
  sourceNames: {
    institution_website: "Institution website",
    scholar_profile: "Scholar profile",
    document_classifier: "Document classifier",
  } as Record<string, string>,
  paperCount: (n: number) => (n === 1 ? "1 paper" : `${n} papers`),
  matchedAreas: "Matched areas",
  score: "Score",
  researchers: "Researchers",
  publications: "Publications",
  field: "Field",
  backToResults: "Back",
  notFound: "This researcher does not exist.",
  loadFailed: "Could not reach the search service.",
  retry: "Try again",
  loading: "Loading…",
} as const;
