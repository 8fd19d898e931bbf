/**
 * View state and its pure transitions.
 *
 * Invariants kept here: breadcrumb entries are always valid concept ids,
 * and the result list always corresponds to the last issued search request
 * (at most one in-flight search counts; stale responses are discarded).
 */

import type { SearchData } from "./api.js";

export interface ViewState {
  selectedConcept: string | null;
  query: string;
  queryLanguage: string;
  expand: boolean;
  results: SearchData | null;
  breadcrumb: string[];
  /** id of the most recently issued search request */
  pendingRequest: number;
  /** id of the request the current results answer */
  resultRequest: number;
}

export function initialState(language = "fr"): ViewState {
  return {
    selectedConcept: null,
    query: "",
    queryLanguage: language,
    expand: true,
    results: null,
    breadcrumb: [],
    pendingRequest: 0,
    resultRequest: 0,
  };
}

/** Select a concept; unknown ids never enter the breadcrumb. */
export function selectConcept(
  state: ViewState,
  conceptId: string,
  knownIds: ReadonlySet<string>,
): ViewState {
  if (!knownIds.has(conceptId)) {
    return { ...state, selectedConcept: conceptId };
  }
  const breadcrumb =
    state.breadcrumb[state.breadcrumb.length - 1] === conceptId
      ? state.breadcrumb
      : [...state.breadcrumb, conceptId];
  return { ...state, selectedConcept: conceptId, breadcrumb };
}

/** Record a newly issued search; returns the state carrying its request id. */
export function beginSearch(
  state: ViewState,
  query: string,
  language: string,
  expand: boolean,
): ViewState {
  return {
    ...state,
    query,
    queryLanguage: language,
    expand,
    pendingRequest: state.pendingRequest + 1,
  };
}

/** Apply a response only if it answers the latest request (latest wins). */
export function applyResults(
  state: ViewState,
  requestId: number,
  results: SearchData,
): ViewState {
  if (requestId !== state.pendingRequest) {
    return state;
  }
  return { ...state, results, resultRequest: requestId };
}

export function resultsAreCurrent(state: ViewState): boolean {
  return state.results !== null && state.resultRequest === state.pendingRequest;
}
