import { describe, expect, it } from "vitest";

import { formatCount, formatEstimate, formatExact, formatSlope } from "../src/format.js";

describe("readout formatting", () => {
  it("slope readouts show 6 significant digits", () => {
    expect(formatSlope(1.0986726383261593)).toBe("1.09867");
    expect(formatSlope(1.0)).toBe("1.00000");
  });

  it("estimates show 10 significant digits", () => {
    expect(formatEstimate(2.718281828459045)).toBe("2.718281828");
  });

  it("exact endpoint values keep all digits", () => {
    expect(formatExact(2.44140625)).toBe("2.44140625");
    expect(formatExact(2)).toBe("2");
  });

  it("large counts compress", () => {
    expect(formatCount(100)).toBe("100");
    expect(formatCount(1_000_000)).toBe("1.00e6");
  });
});
