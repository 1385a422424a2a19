/** Payload shapes of the backend JSON API. */

export interface ExpertHit {
  researcher: string;
  name: string;
  department: string;
  score: number;
  matched_areas: string[];
  top_documents: { id: string; score: number }[];
  explanation: string;
}

export interface DocumentHit {
  id: string;
  title: string;
  score: number;
}

export interface SearchResponse {
  query: string;
  experts: ExpertHit[];
  documents: DocumentHit[];
}

export interface AreaGroup {
  label: string;
  sources: { source: string; confidence: number }[];
  paper_count: number;
}

export interface PublicationEntry {
  id: string;
  title: string;
  year: number | null;
  source_url: string | null;
  language: string;
}

export interface ExpertProfile {
  id: string;
  name: string;
  department: string;
  institution: string;
  email: string;
  areas: AreaGroup[];
  publications: PublicationEntry[];
  citation_counts_by_year: [number, number][];
  scholar_profile: {
    display_name: string;
    affiliation: string;
    stated_areas: string[];
  } | null;
  external_links: string[];
}

export interface FieldRow {
  label: string;
  researcher_count: number;
  publication_count: number;
}

export interface FieldsResponse {
  fields: FieldRow[];
}

export interface WordcloudItem {
  text: string;
  kind: "label" | "bigram";
  weight: number;
}

export interface WordcloudResponse {
  items: WordcloudItem[];
  positive_list_applied: boolean;
}

export interface DefinitionResponse {
  term: string;
  found: boolean;
  summary: string;
  source_url: string;
  fetched_at: string;
}

export interface HealthResponse {
  status: string;
  snapshot_build_timestamp: string;
  doc_count: number;
  researcher_count: number;
}
