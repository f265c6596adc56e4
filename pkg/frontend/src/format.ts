// Display helpers for arbitrary-precision decimal strings.

/** Abbreviate weights beyond 6 digits as mantissa/exponent; keep the full
 * string for hover text. */
export function abbreviateWeight(weight: string): { text: string; full: string } {
  if (weight.length <= 6) {
    return { text: weight, full: weight };
  }
  const mantissa = `${weight[0]}.${weight.slice(1, 3)}`;
  return { text: `${mantissa}e${weight.length - 1}`, full: weight };
}

/** log10 of a positive decimal integer string, safe at any size. */
export function decimalLog10(value: string): number {
  if (!/^[0-9]+$/.test(value)) throw new Error(`not a decimal string: ${value}`);
  if (/^0+$/.test(value)) return -Infinity;
  const lead = value.slice(0, 15);
  return Math.log10(Number(lead)) + (value.length - lead.length);
}

/** Ratio of two positive decimal strings as a float (safe for huge inputs
 * whose quotient is moderate). */
export function decimalRatio(num: string, den: string): number {
  const ln = decimalLog10(num);
  const ld = decimalLog10(den);
  if (ld === -Infinity) return num === den ? NaN : Infinity;
  if (ln === -Infinity) return 0;
  return Math.pow(10, ln - ld);
}
