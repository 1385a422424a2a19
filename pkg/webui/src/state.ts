/** View state and its URL-hash encoding.
 *
 * The browser URL fully encodes the state, so every view is deep-linkable
 * and reload restores it. Invariants: the Results route requires a
 * non-empty query; the Profile route requires a researcher id. Decoding
 * anything that violates them falls back to Home.
 */

export type Route = "home" | "results" | "profile";
export type FieldSort = "by_researchers" | "by_publications" | "by_label";

export interface ViewState {
  route: Route;
  query: string;
  selectedResearcher: string | null;
  fieldSort: FieldSort;
}

export const HOME: ViewState = {
  route: "home",
  query: "",
  selectedResearcher: null,
  fieldSort: "by_researchers",
};

const SORT_VALUES: readonly FieldSort[] = ["by_researchers", "by_publications", "by_label"];

export function homeState(fieldSort: FieldSort = "by_researchers"): ViewState {
  return { ...HOME, fieldSort };
}

export function resultsState(query: string, fieldSort: FieldSort = "by_researchers"): ViewState {
  if (!query.trim()) return homeState(fieldSort);
  return { route: "results", query, selectedResearcher: null, fieldSort };
}

export function profileState(id: string): ViewState {
  if (!id) return HOME;
  return { route: "profile", query: "", selectedResearcher: id, fieldSort: "by_researchers" };
}

export function encodeState(state: ViewState): string {
  const sortSuffix =
    state.fieldSort !== "by_researchers" ? `sort=${encodeURIComponent(state.fieldSort)}` : "";
  switch (state.route) {
    case "results": {
      const params = new URLSearchParams({ q: state.query });
      if (sortSuffix) params.set("sort", state.fieldSort);
      return `#/search?${params.toString()}`;
    }
    case "profile":
      return `#/expert/${encodeURIComponent(state.selectedResearcher ?? "")}`;
    default:
      return sortSuffix ? `#/?${sortSuffix}` : "#/";
  }
}

export function decodeState(hash: string): ViewState {
  const raw = hash.startsWith("#") ? hash.slice(1) : hash;
  const [path, queryString = ""] = splitOnce(raw, "?");
  const params = new URLSearchParams(queryString);
  const sortParam = params.get("sort");
  const fieldSort: FieldSort = SORT_VALUES.includes(sortParam as FieldSort)
    ? (sortParam as FieldSort)
    : "by_researchers";

  if (path.startsWith("/expert/")) {
    const id = decodeURIComponent(path.slice("/expert/".length));
    return id ? profileState(id) : homeState(fieldSort);
  }
  if (path === "/search" || path.startsWith("/search")) {
    const query = params.get("q") ?? "";
    return resultsState(query, fieldSort);
  }
  return homeState(fieldSort);
}

function splitOnce(value: string, separator: string): [string, string?] {
  const index = value.indexOf(separator);
  if (index < 0) return [value];
  return [value.slice(0, index), value.slice(index + 1)];
}
