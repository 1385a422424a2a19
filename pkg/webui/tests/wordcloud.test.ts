import { describe, expect, it } from "vitest";

import { MAX_FONT_PX, MIN_FONT_PX, fontSizeFor, sizeItems } from "../src/wordcloud.js";
import type { WordcloudItem } from "../src/types.js";

const items: WordcloudItem[] = [
  { text: "big data", kind: "bigram", weight: 5 },
  { text: "optimization", kind: "label", weight: 2 },
  { text: "robotics", kind: "label", weight: 1 },
];

describe("word-cloud sizing", () => {
  it("maps the weight range onto the font range", () => {
    expect(fontSizeFor(1, 1, 5)).toBe(MIN_FONT_PX);
    expect(fontSizeFor(5, 1, 5)).toBe(MAX_FONT_PX);
  });

  it("is monotone in weight", () => {
    const sizes = [1, 2, 3, 4, 5].map((w) => fontSizeFor(w, 1, 5));
    expect([...sizes].sort((a, b) => a - b)).toEqual(sizes);
  });

  it("uses a middle size when all weights are equal", () => {
    const mid = Math.round((MIN_FONT_PX + MAX_FONT_PX) / 2);
    expect(fontSizeFor(3, 3, 3)).toBe(mid);
  });

  it("sizes the heaviest item largest and preserves order", () => {
    const sized = sizeItems(items);
    expect(sized.map((i) => i.text)).toEqual(items.map((i) => i.text));
    expect(sized[0]!.fontPx).toBeGreaterThan(sized[1]!.fontPx);
    expect(sized[1]!.fontPx).toBeGreaterThan(sized[2]!.fontPx);
  });

  it("handles the empty cloud", () => {
    expect(sizeItems([])).toEqual([]);
  });

  it("is deterministic", () => {
    expect(sizeItems(items)).toEqual(sizeItems(items));
  });
});
