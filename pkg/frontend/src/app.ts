/** The annotation workbench: three stacked regions.
 *
 * Upper: the sentence-pair list. Middle: every predicate-argument structure
 * of the selected pair's two sentences (predicates and arguments in
 * different colours) with radio selectors for one source and one target
 * structure, plus the span-click editor for creating new structures.
 * Lower: the two chosen structures in detail, where individual transemes
 * are linked, up to two shift tags (or a marker) staged, and existing
 * records browsed.
 *
 * Every write goes through the HTTP API with the last seen revision; a 409
 * puts up a reload banner instead of silently overwriting anything.
 */

import { ApiClient, ApiError } from "./api";
import {
  ALL_TAGS,
  MARKERS,
  canStageTag,
  categoryOf,
  checkDraft,
  draftIsEmpty,
  emptyDraft,
  type ClientViolation,
  type Draft,
} from "./rules";
import type {
  ArgumentDoc,
  PairDetail,
  PairSummary,
  PredicateDoc,
  Registry,
  SentenceDoc,
  ShiftTag,
  Side,
  SpecialMarker,
  TransemeRefDoc,
} from "./types";

type Attrs = Record<string, string | boolean | EventListener>;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Attrs = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (typeof value === "function") node.addEventListener(key, value);
    else if (typeof value === "boolean") {
      if (value) node.setAttribute(key, "");
      if (key === "checked") (node as unknown as HTMLInputElement).checked = value;
      if (key === "disabled") (node as unknown as HTMLInputElement).disabled = value;
    } else node.setAttribute(key, value);
  }
  node.append(...children);
  return node;
}

interface SpanSelection {
  side: Side | null;
  tokens: number[];
}

export interface AppOptions {
  api: ApiClient;
  /** Called before a non-empty draft would be thrown away; return false to keep it. */
  confirmDiscard?: () => boolean;
}

export class App {
  readonly api: ApiClient;
  private root: HTMLElement;
  private confirmDiscard: () => boolean;

  pairs: PairSummary[] = [];
  registry: Registry | null = null;
  selectedPairId: string | null = null;
  detail: PairDetail | null = null;
  revision: number | null = null;
  selectedStructure: Record<Side, string | null> = { source: null, target: null };
  draft: Draft = emptyDraft();
  serverViolations: ClientViolation[] = [];
  staleConflict = false;
  statusLine = "";
  spanSelection: SpanSelection = { side: null, tokens: [] };

  /** Latest in-flight operation; tests await this after dispatching events. */
  pending: Promise<void> = Promise.resolve();

  constructor(root: HTMLElement, options: AppOptions) {
    this.root = root;
    this.api = options.api;
    this.confirmDiscard =
      options.confirmDiscard ??
      (() => (typeof window.confirm === "function" ? window.confirm("Discard draft?") : true));
  }

  private track(op: Promise<void>): Promise<void> {
    this.pending = op;
    return op;
  }

  async init(): Promise<void> {
    await this.track(this.reloadAll());
  }

  private async reloadAll(): Promise<void> {
    this.pairs = await this.api.listPairs();
    this.registry = await this.api.getRegistry();
    if (this.selectedPairId !== null) {
      this.detail = await this.api.getPair(this.selectedPairId);
      this.revision = this.detail.revision;
    }
    this.staleConflict = false;
    this.render();
  }

  // -- pair selection --------------------------------------------------

  selectPair(pairId: string): Promise<void> {
    if (!draftIsEmpty(this.draft) && !this.confirmDiscard()) {
      return this.pending;
    }
    return this.track(
      (async () => {
        this.detail = await this.api.getPair(pairId);
        this.selectedPairId = pairId;
        this.revision = this.detail.revision;
        this.selectedStructure = { source: null, target: null };
        this.draft = emptyDraft();
        this.serverViolations = [];
        this.spanSelection = { side: null, tokens: [] };
        this.statusLine = "";
        this.render();
      })(),
    );
  }

  // -- middle pane: structure choice & editor --------------------------

  selectStructure(side: Side, predicateId: string | null): void {
    this.selectedStructure[side] = predicateId;
    this.draft = { ...this.draft, source: null, target: null };
    this.serverViolations = [];
    this.render();
  }

  cycleStructure(side: Side, delta: number): void {
    if (!this.detail) return;
    const predicates = this.detail[side].predicates;
    if (predicates.length === 0) return;
    const ids = predicates.map((p) => p.instance_id);
    const current = this.selectedStructure[side];
    const index = current === null ? -1 : ids.indexOf(current);
    const next = ids[(index + delta + ids.length) % ids.length];
    this.selectStructure(side, next);
  }

  toggleToken(side: Side, index: number, accumulate: boolean): void {
    if (this.spanSelection.side !== side || !accumulate) {
      this.spanSelection = accumulate && this.spanSelection.side === side
        ? this.spanSelection
        : { side, tokens: [] };
    }
    const tokens = new Set(this.spanSelection.tokens);
    if (accumulate && tokens.has(index)) tokens.delete(index);
    else tokens.add(index);
    this.spanSelection = { side, tokens: [...tokens].sort((a, b) => a - b) };
    this.render();
  }

  createPredicate(side: Side, lemma: string, cls: string, groupId: string, tags: string[]): Promise<void> {
    return this.track(
      (async () => {
        if (!this.detail || this.revision === null) return;
        if (this.spanSelection.side !== side || this.spanSelection.tokens.length === 0) {
          this.statusLine = "select the predicate tokens first (ctrl-click accumulates)";
          this.render();
          return;
        }
        try {
          const response = await this.api.postPas(
            this.detail.pair.pair_id,
            {
              predicates: [
                {
                  side,
                  span: this.spanSelection.tokens,
                  lemma,
                  class: cls,
                  group_id: groupId === "" ? null : groupId,
                  tags,
                },
              ],
            },
            this.revision,
          );
          this.statusLine = `created predicate ${response.created.predicates[0]}`;
          this.spanSelection = { side: null, tokens: [] };
          await this.refreshAfterWrite();
        } catch (error) {
          this.handleApiError(error);
        }
      })(),
    );
  }

  createArgument(side: Side, role: string, antecedent: number[] | null): Promise<void> {
    return this.track(
      (async () => {
        if (!this.detail || this.revision === null) return;
        const parent = this.selectedStructure[side];
        if (parent === null) {
          this.statusLine = "choose the predicate structure the argument belongs to";
          this.render();
          return;
        }
        if (this.spanSelection.side !== side || this.spanSelection.tokens.length === 0) {
          this.statusLine = "select the argument tokens first";
          this.render();
          return;
        }
        try {
          const response = await this.api.postPas(
            this.detail.pair.pair_id,
            {
              arguments: [
                {
                  parent,
                  span: this.spanSelection.tokens,
                  role,
                  antecedent_span: antecedent,
                },
              ],
            },
            this.revision,
          );
          this.statusLine = `created argument ${response.created.arguments[0]}`;
          this.spanSelection = { side: null, tokens: [] };
          await this.refreshAfterWrite();
        } catch (error) {
          this.handleApiError(error);
        }
      })(),
    );
  }

  // -- lower pane: draft & submit ---------------------------------------

  pickDraftRef(side: Side, ref: TransemeRefDoc | null): void {
    this.draft = { ...this.draft, [side]: ref };
    this.serverViolations = [];
    this.render();
  }

  toggleTag(tag: ShiftTag): void {
    const staged = this.draft.tags;
    if (staged.includes(tag)) {
      this.draft = { ...this.draft, tags: staged.filter((t) => t !== tag) };
    } else if (canStageTag(staged, tag)) {
      this.draft = { ...this.draft, tags: [...staged, tag] };
    }
    this.serverViolations = [];
    this.render();
  }

  setMarker(marker: SpecialMarker | null): void {
    this.draft = { ...this.draft, marker };
    this.serverViolations = [];
    this.render();
  }

  setNote(note: string): void {
    this.draft = { ...this.draft, note };
    this.serverViolations = [];
    this.renderViolations();
  }

  clientViolations(): ClientViolation[] {
    return checkDraft(this.draft);
  }

  submitAlignment(): Promise<void> {
    return this.track(
      (async () => {
        if (!this.detail || this.revision === null) return;
        const blocking = this.clientViolations();
        if (blocking.length > 0) {
          this.serverViolations = [];
          this.render();
          return;
        }
        if (this.draft.source === null && this.draft.target === null) {
          this.statusLine = "pick at least one transeme to align";
          this.render();
          return;
        }
        try {
          await this.api.postAlignment(
            this.detail.pair.pair_id,
            {
              source: this.draft.source,
              target: this.draft.target,
              tags: this.draft.tags,
              marker: this.draft.marker,
              note: this.draft.note.trim() === "" ? null : this.draft.note,
            },
            this.revision,
          );
          this.draft = emptyDraft();
          this.serverViolations = [];
          this.statusLine = "alignment recorded";
          await this.refreshAfterWrite();
        } catch (error) {
          this.handleApiError(error);
        }
      })(),
    );
  }

  deleteAlignment(alignmentId: string): Promise<void> {
    return this.track(
      (async () => {
        if (!this.detail || this.revision === null) return;
        try {
          await this.api.deleteAlignment(this.detail.pair.pair_id, alignmentId, this.revision);
          await this.refreshAfterWrite();
        } catch (error) {
          this.handleApiError(error);
        }
      })(),
    );
  }

  private async refreshAfterWrite(): Promise<void> {
    if (this.selectedPairId === null) return;
    this.detail = await this.api.getPair(this.selectedPairId);
    this.revision = this.detail.revision;
    this.pairs = await this.api.listPairs();
    this.registry = await this.api.getRegistry();
    this.render();
  }

  private handleApiError(error: unknown): void {
    if (error instanceof ApiError) {
      if (error.stale) {
        this.staleConflict = true;
      } else {
        const details = error.details.filter((d) => d.rule_id || d.message);
        this.serverViolations = details.length
          ? details.map((d) => ({
              ruleId: d.rule_id ?? error.code,
              message: `${d.rule_id ?? error.code}: ${d.message ?? error.message}`,
            }))
          : [{ ruleId: error.code, message: `${error.code}: ${error.message}` }];
      }
      this.render();
      return;
    }
    throw error;
  }

  reloadAfterConflict(): Promise<void> {
    return this.track(this.reloadAll());
  }

  // -- rendering ---------------------------------------------------------

  render(): void {
    this.root.replaceChildren(
      this.renderBanner(),
      this.renderPairsPane(),
      this.renderPasPane(),
      this.renderAlignPane(),
    );
  }

  private renderBanner(): HTMLElement {
    const banner = el("div", { id: "banner" });
    if (this.staleConflict) {
      banner.append(
        el(
          "div",
          { class: "stale-banner", role: "alert" },
          "Someone else changed this project (stale revision). Reload to continue.",
          el("button", { id: "reload-button", click: () => void this.reloadAfterConflict() }, "Reload"),
        ),
      );
    }
    if (this.statusLine) {
      banner.append(el("div", { class: "status", id: "status-line" }, this.statusLine));
    }
    return banner;
  }

  private renderPairsPane(): HTMLElement {
    const rows = this.pairs.map((pair) =>
      el(
        "tr",
        {
          class: `pair-row${pair.pair_id === this.selectedPairId ? " selected" : ""}`,
          "data-pair": pair.pair_id,
          click: () => void this.selectPair(pair.pair_id),
        },
        el("td", {}, pair.pair_id),
        el("td", {}, `${pair.source_doc}:${pair.source_sentence_id}`),
        el("td", { class: "preview" }, pair.source_preview),
        el("td", { class: "preview" }, pair.target_preview),
        el("td", { class: "coverage" }, `${pair.coverage_pct.toFixed(1)}%`),
      ),
    );
    return el(
      "section",
      { id: "pane-pairs" },
      el("h2", {}, "Sentence pairs"),
      el(
        "table",
        {},
        el(
          "thead",
          {},
          el(
            "tr",
            {},
            el("th", {}, "pair"),
            el("th", {}, "sentence"),
            el("th", {}, "source"),
            el("th", {}, "target"),
            el("th", {}, "coverage"),
          ),
        ),
        el("tbody", {}, ...rows),
      ),
    );
  }

  private structureSpan(sentence: SentenceDoc, predicate: PredicateDoc): HTMLElement {
    const args = sentence.arguments.filter((a) => a.parent === predicate.instance_id);
    const argTokens = new Set(args.flatMap((a) => a.span));
    const predTokens = new Set(predicate.span);
    const spans = sentence.tokens.map((token, i) => {
      const cls = predTokens.has(i) ? "tok tok-pred" : argTokens.has(i) ? "tok tok-arg" : "tok";
      return el("span", { class: cls }, token);
    });
    const line = el("div", { class: "structure-tokens" });
    spans.forEach((s, i) => {
      if (i > 0) line.append(" ");
      line.append(s);
    });
    return line;
  }

  private renderStructureList(side: Side): HTMLElement {
    const detail = this.detail!;
    const sentence = detail[side];
    const column = el("div", {
      class: "pas-column",
      id: `pas-${side}`,
      tabindex: "0",
      keydown: ((event: Event) => {
        const key = (event as KeyboardEvent).key;
        if (key === "ArrowDown") {
          event.preventDefault();
          this.cycleStructure(side, 1);
        } else if (key === "ArrowUp") {
          event.preventDefault();
          this.cycleStructure(side, -1);
        }
      }) as EventListener,
    });
    column.append(
      el(
        "h3",
        {},
        `${side} (${sentence.language}) — ${sentence.doc_id}:${sentence.sentence_id}`,
      ),
    );
    if (sentence.predicates.length === 0) {
      column.append(el("p", { class: "empty" }, "no predicate-argument structures yet"));
    }
    for (const predicate of sentence.predicates) {
      const typeLabel = `${predicate.type[1]} (${predicate.type[2] > 1 ? `${predicate.type[0]}, sense ${predicate.type[2]}, ` : ""}${this.classOf(predicate)})`;
      const radio = el("input", {
        type: "radio",
        name: `structure-${side}`,
        value: predicate.instance_id,
        checked: this.selectedStructure[side] === predicate.instance_id,
        change: () => this.selectStructure(side, predicate.instance_id),
      });
      column.append(
        el(
          "div",
          {
            class: `structure${this.selectedStructure[side] === predicate.instance_id ? " selected" : ""}`,
            "data-structure": predicate.instance_id,
          },
          el("label", {}, radio, ` ${typeLabel}`),
          this.structureSpan(sentence, predicate),
        ),
      );
    }
    column.append(this.renderEditor(side, sentence));
    return column;
  }

  private classOf(predicate: PredicateDoc): string {
    const entry = this.registry?.types.find(
      (t) =>
        t.language === predicate.type[0] &&
        t.lemma === predicate.type[1] &&
        t.sense === predicate.type[2],
    );
    return entry ? entry.class : "?";
  }

  private renderEditor(side: Side, sentence: SentenceDoc): HTMLElement {
    const selection = this.spanSelection.side === side ? new Set(this.spanSelection.tokens) : new Set<number>();
    const strip = el("div", { class: "token-strip" });
    sentence.tokens.forEach((token, index) => {
      if (index > 0) strip.append(" ");
      strip.append(
        el(
          "button",
          {
            type: "button",
            class: `token-button${selection.has(index) ? " picked" : ""}`,
            "data-side": side,
            "data-index": String(index),
            click: ((event: Event) =>
              this.toggleToken(side, index, (event as MouseEvent).ctrlKey)) as EventListener,
          },
          token,
        ),
      );
    });

    const language = sentence.language;
    const lemmaList = el("datalist", { id: `lemmas-${side}` });
    const groupSelect = el(
      "select",
      { class: "pred-group" },
      el("option", { value: "" }, "new group"),
    );
    for (const entry of this.registry?.types ?? []) {
      if (entry.language === language) {
        lemmaList.append(el("option", { value: entry.lemma }));
      }
    }
    for (const group of this.registry?.groups ?? []) {
      if (group.language === language) {
        const members = (this.registry?.types ?? [])
          .filter((t) => t.group_id === group.group_id)
          .map((t) => t.lemma)
          .join(", ");
        groupSelect.append(el("option", { value: group.group_id }, `${group.group_id} (${members})`));
      }
    }
    const lemmaInput = el("input", {
      class: "pred-lemma",
      list: `lemmas-${side}`,
      placeholder: "lemma (citation form)",
    });
    const classSelect = el(
      "select",
      { class: "pred-class" },
      ...["v", "n", "a", "c", "l"].map((c) => el("option", { value: c }, c)),
    );
    const tagBoxes = (this.registry?.realization_tags ?? []).map((tag) =>
      el(
        "label",
        { class: "realization-tag" },
        el("input", { type: "checkbox", value: tag, class: "pred-tag" }),
        tag,
      ),
    );
    const predButton = el(
      "button",
      {
        type: "button",
        class: "create-predicate",
        click: () =>
          void this.createPredicate(
            side,
            lemmaInput.value,
            classSelect.value,
            groupSelect.value,
            tagBoxes
              .map((label) => label.querySelector("input")!)
              .filter((box) => box.checked)
              .map((box) => box.value),
          ),
      },
      "create predicate",
    );

    const roleList = el("datalist", { id: `roles-${side}` });
    const selectedId = this.selectedStructure[side];
    if (selectedId !== null) {
      const predicate = sentence.predicates.find((p) => p.instance_id === selectedId);
      if (predicate) {
        const entry = this.registry?.types.find(
          (t) => t.language === predicate.type[0] && t.lemma === predicate.type[1] && t.sense === predicate.type[2],
        );
        const group = this.registry?.groups.find((g) => g.group_id === entry?.group_id);
        for (const role of group?.suggested_roles ?? []) {
          roleList.append(el("option", { value: role }));
        }
      }
    }
    const roleInput = el("input", {
      class: "arg-role",
      list: `roles-${side}`,
      placeholder: "role (e.g. ent_dramatised)",
    });
    const antecedentInput = el("input", {
      class: "arg-antecedent",
      placeholder: "antecedent indices (relative pronouns only)",
    });
    const argButton = el(
      "button",
      {
        type: "button",
        class: "create-argument",
        click: () => {
          const raw = antecedentInput.value.trim();
          const antecedent =
            raw === ""
              ? null
              : raw
                  .split(",")
                  .map((part) => Number.parseInt(part.trim(), 10))
                  .filter((n) => Number.isInteger(n));
          void this.createArgument(side, roleInput.value, antecedent);
        },
      },
      "add argument to selected structure",
    );

    return el(
      "details",
      { class: "editor" },
      el("summary", {}, "annotate new structure"),
      strip,
      el("div", { class: "editor-form" }, lemmaInput, lemmaList, classSelect, groupSelect, ...tagBoxes, predButton),
      el("div", { class: "editor-form" }, roleInput, roleList, antecedentInput, argButton),
    );
  }

  private renderPasPane(): HTMLElement {
    const pane = el("section", { id: "pane-pas" });
    pane.append(
      el(
        "h2",
        {},
        "Predicate-argument structures ",
        el("span", { class: "legend tok-pred" }, "predicate"),
        " ",
        el("span", { class: "legend tok-arg" }, "argument"),
      ),
    );
    if (!this.detail) {
      pane.append(el("p", { class: "empty" }, "select a sentence pair above"));
      return pane;
    }
    pane.append(
      el(
        "div",
        { class: "pas-columns" },
        this.renderStructureList("source"),
        this.renderStructureList("target"),
      ),
    );
    return pane;
  }

  private transemeRows(side: Side): HTMLElement[] {
    const detail = this.detail!;
    const sentence = detail[side];
    const chosen = this.selectedStructure[side];
    const rows: HTMLElement[] = [];
    const noneRadio = el("input", {
      type: "radio",
      name: `draft-${side}`,
      value: "",
      checked: this.draft[side] === null,
      change: () => this.pickDraftRef(side, null),
    });
    rows.push(el("div", { class: "transeme-row" }, el("label", {}, noneRadio, " (none)")));
    if (chosen === null) return rows;
    const predicate = sentence.predicates.find((p) => p.instance_id === chosen);
    if (!predicate) return rows;
    const entries: { ref: TransemeRefDoc; label: string }[] = [
      {
        ref: { kind: "predicate", instance_id: predicate.instance_id },
        label: `${predicate.type[1]} [${this.spanText(sentence, predicate.span)}]`,
      },
      ...sentence.arguments
        .filter((a: ArgumentDoc) => a.parent === chosen)
        .map((a) => ({
          ref: { kind: "argument" as const, instance_id: a.instance_id },
          label: `${a.role} [${this.spanText(sentence, a.span)}]`,
        })),
    ];
    for (const { ref, label } of entries) {
      const picked =
        this.draft[side] !== null && this.draft[side]!.instance_id === ref.instance_id;
      const radio = el("input", {
        type: "radio",
        name: `draft-${side}`,
        value: ref.instance_id,
        "data-kind": ref.kind,
        checked: picked,
        change: () => this.pickDraftRef(side, ref),
      });
      rows.push(
        el(
          "div",
          { class: "transeme-row", "data-instance": ref.instance_id },
          el("label", {}, radio, ` ${ref.kind}: ${label}`),
        ),
      );
    }
    return rows;
  }

  private spanText(sentence: SentenceDoc, span: number[]): string {
    return span.map((i) => sentence.tokens[i]).join(" ");
  }

  private renderViolations(): void {
    const box = this.root.querySelector("#draft-violations");
    if (box) box.replaceWith(this.violationsBox());
  }

  private violationsBox(): HTMLElement {
    const box = el("div", { id: "draft-violations" });
    const client = this.clientViolations();
    for (const violation of client) {
      box.append(el("div", { class: "violation client", "data-rule": violation.ruleId }, violation.message));
    }
    for (const violation of this.serverViolations) {
      box.append(el("div", { class: "violation server", "data-rule": violation.ruleId }, violation.message));
    }
    return box;
  }

  private renderAlignPane(): HTMLElement {
    const pane = el("section", { id: "pane-align" });
    pane.append(el("h2", {}, "Alignment"));
    if (!this.detail) {
      pane.append(el("p", { class: "empty" }, "select a sentence pair above"));
      return pane;
    }
    const coverage = this.detail.coverage;
    pane.append(
      el(
        "p",
        { id: "coverage" },
        `coverage: ${coverage.aligned.length} aligned, ` +
          `${coverage.unaligned_source.length} source + ` +
          `${coverage.unaligned_target.length} target unaligned`,
      ),
    );

    const tagPicker = el("fieldset", { id: "tag-picker" }, el("legend", {}, "shift tags (max one per category)"));
    for (const tag of ALL_TAGS) {
      const staged = this.draft.tags.includes(tag);
      const box = el("input", {
        type: "checkbox",
        value: tag,
        checked: staged,
        disabled: !staged && !canStageTag(this.draft.tags, tag),
        change: () => this.toggleTag(tag),
      });
      tagPicker.append(
        el("label", { class: `tag-option ${categoryOf(tag)}`, "data-tag": tag }, box, ` ${tag}`),
      );
    }

    const markerSelect = el(
      "select",
      {
        id: "marker-select",
        change: ((event: Event) => {
          const value = (event.target as HTMLSelectElement).value;
          this.setMarker(value === "" ? null : (value as SpecialMarker));
        }) as EventListener,
      },
      el("option", { value: "" }, "(no marker)"),
      ...MARKERS.map((marker) =>
        el(
          "option",
          { value: marker, ...(this.draft.marker === marker ? { selected: "" } : {}) },
          marker,
        ),
      ),
    );

    const note = el("textarea", {
      id: "draft-note",
      placeholder: "note (required for semantic_modification)",
      input: ((event: Event) => this.setNote((event.target as HTMLTextAreaElement).value)) as EventListener,
    });
    note.value = this.draft.note;

    const submit = el(
      "button",
      { id: "submit-alignment", type: "button", click: () => void this.submitAlignment() },
      "record alignment",
    );

    const existing = el("div", { id: "existing-alignments" });
    existing.append(el("h3", {}, `records (${this.detail.alignments.length})`));
    for (const record of this.detail.alignments) {
      const text = [
        record.source ? `src ${record.source.kind} ${record.source.instance_id}` : "src —",
        record.target ? `tgt ${record.target.kind} ${record.target.instance_id}` : "tgt —",
        record.tags.length ? `[${record.tags.join(", ")}]` : "[no shift]",
        record.marker ? `marker: ${record.marker}` : "",
        record.note ? `note: ${record.note}` : "",
      ]
        .filter(Boolean)
        .join("  ");
      existing.append(
        el(
          "div",
          { class: "alignment-record", "data-alignment": record.alignment_id },
          text,
          el(
            "button",
            {
              type: "button",
              class: "delete-alignment",
              click: () => void this.deleteAlignment(record.alignment_id),
            },
            "delete",
          ),
        ),
      );
    }

    pane.append(
      el(
        "div",
        { class: "align-columns" },
        el("div", { class: "align-column", id: "draft-source" }, el("h3", {}, "source transeme"), ...this.transemeRows("source")),
        el("div", { class: "align-column", id: "draft-target" }, el("h3", {}, "target transeme"), ...this.transemeRows("target")),
      ),
      tagPicker,
      el("div", { class: "draft-extras" }, markerSelect, note),
      this.violationsBox(),
      submit,
      existing,
    );
    return pane;
  }
}

export function createApp(root: HTMLElement, options: AppOptions): App {
  return new App(root, options);
}
