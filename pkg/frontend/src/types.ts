/** Payload shapes of the annotation service API. */

export type ShiftTag =
  | "category_change"
  | "passivisation"
  | "depassivisation"
  | "pronominalisation"
  | "depronominalisation"
  | "number_change"
  | "semantic_modification"
  | "explicitation"
  | "generalisation"
  | "addition"
  | "deletion"
  | "mutation";

export type SpecialMarker = "dangling_modal" | "non_pas";
export type TransemeKind = "predicate" | "argument";
export type Side = "source" | "target";

export interface TransemeRefDoc {
  kind: TransemeKind;
  instance_id: string;
}

export interface PairSummary {
  pair_id: string;
  direction: string[];
  genre: string | null;
  speaker_name: string | null;
  source_doc: string;
  source_sentence_id: string;
  target_doc: string;
  target_sentence_id: string;
  source_preview: string;
  target_preview: string;
  coverage_pct: number;
}

export interface PredicateDoc {
  instance_id: string;
  type: [string, string, number];
  span: number[];
  realization_tags: string[];
}

export interface ArgumentDoc {
  instance_id: string;
  parent: string;
  role: string;
  span: number[];
  antecedent_span: number[] | null;
}

export interface SentenceDoc {
  language: string;
  doc_id: string;
  sentence_id: string;
  speaker_name: string | null;
  language_attr: string | null;
  tokens: string[];
  predicates: PredicateDoc[];
  arguments: ArgumentDoc[];
}

export interface AlignmentDoc {
  alignment_id: string;
  source: TransemeRefDoc | null;
  target: TransemeRefDoc | null;
  tags: ShiftTag[];
  marker: SpecialMarker | null;
  note: string | null;
}

export interface CoverageRef {
  side: Side;
  kind: TransemeKind;
  instance_id: string;
}

export interface PairDetail {
  pair: {
    pair_id: string;
    direction: string[];
    genre: string | null;
    speaker_name: string | null;
  };
  source: SentenceDoc;
  target: SentenceDoc;
  alignments: AlignmentDoc[];
  coverage: {
    aligned: CoverageRef[];
    unaligned_source: CoverageRef[];
    unaligned_target: CoverageRef[];
  };
  revision: number;
}

export interface RegistryGroup {
  group_id: string;
  language: string;
  roles: string[];
  suggested_roles: string[];
}

export interface RegistryType {
  language: string;
  lemma: string;
  class: string;
  sense: number;
  group_id: string;
  description: string | null;
}

export interface Registry {
  groups: RegistryGroup[];
  types: RegistryType[];
  realization_tags: string[];
}

export interface AlignmentDraftPayload {
  source: TransemeRefDoc | null;
  target: TransemeRefDoc | null;
  tags: ShiftTag[];
  marker: SpecialMarker | null;
  note: string | null;
}

export interface PasBatchPayload {
  predicates?: {
    side: Side;
    span: number[];
    lemma: string;
    class: string;
    sense?: number;
    group_id?: string | null;
    tags?: string[];
  }[];
  arguments?: {
    parent: string;
    span: number[];
    role: string;
    antecedent_span?: number[] | null;
  }[];
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
  details: { rule_id?: string; message?: string; refs?: string[] }[];
}
