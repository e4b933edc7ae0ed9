/** Client-side mirror of the cheap structural annotation guidelines.
 *
 * Only R1, R6, R7 and R9 (plus the semantic_modification note requirement)
 * are duplicated here, as instant feedback while staging a draft; the
 * service remains the single source of truth and re-checks everything.
 * Messages always cite the stable rule id so annotators can look the
 * guideline up.
 */

import type { ShiftTag, SpecialMarker, TransemeRefDoc } from "./types";

export const GRAMMATICAL_TAGS: ShiftTag[] = [
  "category_change",
  "passivisation",
  "depassivisation",
  "pronominalisation",
  "depronominalisation",
  "number_change",
];

export const SEMANTIC_TAGS: ShiftTag[] = [
  "semantic_modification",
  "explicitation",
  "generalisation",
  "addition",
  "deletion",
  "mutation",
];

export const ALL_TAGS: ShiftTag[] = [...GRAMMATICAL_TAGS, ...SEMANTIC_TAGS];
export const MARKERS: SpecialMarker[] = ["dangling_modal", "non_pas"];

export type TagCategory = "grammatical" | "semantic";

export function categoryOf(tag: ShiftTag): TagCategory {
  return (GRAMMATICAL_TAGS as string[]).includes(tag) ? "grammatical" : "semantic";
}

export interface Draft {
  source: TransemeRefDoc | null;
  target: TransemeRefDoc | null;
  tags: ShiftTag[];
  marker: SpecialMarker | null;
  note: string;
}

export function emptyDraft(): Draft {
  return { source: null, target: null, tags: [], marker: null, note: "" };
}

export function draftIsEmpty(draft: Draft): boolean {
  return (
    draft.source === null &&
    draft.target === null &&
    draft.tags.length === 0 &&
    draft.marker === null &&
    draft.note === ""
  );
}

/** R1 mirror for the tag picker: a tag may only be staged while no other
 * tag of its category is staged. */
export function canStageTag(staged: ShiftTag[], tag: ShiftTag): boolean {
  if (staged.includes(tag)) return false;
  return !staged.some((t) => categoryOf(t) === categoryOf(tag));
}

export interface ClientViolation {
  ruleId: string;
  message: string;
}

/** Pre-submit checks; anything not listed here is the server's verdict. */
export function checkDraft(draft: Draft): ClientViolation[] {
  const violations: ClientViolation[] = [];
  const grammatical = draft.tags.filter((t) => categoryOf(t) === "grammatical");
  const semantic = draft.tags.filter((t) => categoryOf(t) === "semantic");
  if (draft.tags.length > 2 || grammatical.length > 1 || semantic.length > 1) {
    violations.push({
      ruleId: "R1",
      message: "R1: at most two shift tags, at most one grammatical and one semantic",
    });
  }
  if (draft.tags.includes("explicitation") && draft.tags.includes("depronominalisation")) {
    violations.push({
      ruleId: "R6",
      message:
        "R6: explicitation is already implied by depronominalisation; keep only the latter",
    });
  }
  if (draft.tags.includes("generalisation") && draft.tags.includes("pronominalisation")) {
    violations.push({
      ruleId: "R7",
      message:
        "R7: generalisation is already implied by pronominalisation; keep only the latter",
    });
  }
  if (draft.marker !== null) {
    const bothSides = draft.source !== null && draft.target !== null;
    if (bothSides || draft.tags.length > 0) {
      violations.push({
        ruleId: "R9",
        message: "R9: markers go on a single unaligned transeme with no tags",
      });
    }
  }
  if (draft.tags.includes("semantic_modification") && draft.note.trim() === "") {
    violations.push({
      ruleId: "note_required",
      message: "semantic_modification needs a note describing the divergence",
    });
  }
  return violations;
}
