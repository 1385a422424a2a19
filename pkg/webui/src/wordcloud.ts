/** Deterministic word-cloud sizing: font size scales linearly with weight.
 *
 * Layout is a wrapped inline flow ordered exactly as served (weight
 * descending, then text), so identical data always renders identically.
 */

import type { WordcloudItem } from "./types.js";

export const MIN_FONT_PX = 13;
export const MAX_FONT_PX = 34;

export function fontSizeFor(weight: number, minWeight: number, maxWeight: number): number {
  if (maxWeight <= minWeight) return Math.round((MIN_FONT_PX + MAX_FONT_PX) / 2);
  const ratio = (weight - minWeight) / (maxWeight - minWeight);
  return Math.round(MIN_FONT_PX + ratio * (MAX_FONT_PX - MIN_FONT_PX));
}

export interface SizedItem extends WordcloudItem {
  fontPx: number;
}

export function sizeItems(items: WordcloudItem[]): SizedItem[] {
  if (items.length === 0) return [];
  const weights = items.map((item) => item.weight);
  const min = Math.min(...weights);
  const max = Math.max(...weights);
  return items.map((item) => ({ ...item, fontPx: fontSizeFor(item.weight, min, max) }));
}
