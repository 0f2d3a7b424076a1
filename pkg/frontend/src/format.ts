/** Display formatting only; no value computed here ever re-enters a request. */

export function fmt(value: number | null | undefined): string {
  if (value === null || value === undefined) return "–";
  if (!Number.isFinite(value)) return String(value);
  const rounded = Number(value.toPrecision(6));
  return String(rounded);
}

export function fmtPair(pair: [number, number] | null): string {
  return pair ? `[${fmt(pair[0])}, ${fmt(pair[1])}]` : "–";
}

export function fmtPercent(value: number): string {
  return `${(value * 100).toFixed(1)}%`;
}

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}
