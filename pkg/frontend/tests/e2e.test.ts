/** End-to-end smoke against a real served project.
 *
 * Spawns the Python annotation service on the demonstration fixture (the
 * voice-change pair annotated but unaligned), mounts the real workbench DOM,
 * and walks the annotator flow: select the pair, stage the redundant
 * [depronominalisation, explicitation] combination and get blocked with R6
 * before any request is sent, then record a valid depassivisation and watch
 * the coverage counters move.
 */

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { createServer } from "node:net";
import { tmpdir } from "node:os";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { createApp, type App } from "../src/app";

const REPO_ROOT = join(dirname(fileURLToPath(import.meta.url)), "..", "..");

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = createServer();
    probe.once("error", reject);
    probe.listen(0, "127.0.0.1", () => {
      const address = probe.address();
      if (address === null || typeof address === "string") {
        reject(new Error("no port"));
        return;
      }
      probe.close(() => resolve(address.port));
    });
  });
}

async function waitForServer(base: string): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt += 1) {
    try {
      const response = await fetch(`${base}/api/pairs`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
  throw new Error("annotation service never came up");
}

let workDir: string;
let server: ChildProcess | null = null;
let base: string;

beforeAll(async () => {
  workDir = mkdtempSync(join(tmpdir(), "parashift-e2e-"));
  const made = spawnSync(
    "python3",
    [join(REPO_ROOT, "scripts", "make_demo_project.py"), workDir, "--open-pair2"],
    { encoding: "utf-8" },
  );
  if (made.status !== 0) throw new Error(`make_demo_project failed: ${made.stderr}`);
  const port = await freePort();
  base = `http://127.0.0.1:${port}`;
  server = spawn(
    "python3",
    [
      "-m",
      "parashift.cli",
      "serve",
      join(workDir, "demo.fuse.json"),
      "--bind",
      `127.0.0.1:${port}`,
    ],
    { stdio: "ignore" },
  );
  await waitForServer(base);
});

afterAll(() => {
  server?.kill();
  rmSync(workDir, { recursive: true, force: true });
});

function radioFor(root: HTMLElement, name: string, value: string): HTMLInputElement {
  const input = root.querySelector<HTMLInputElement>(`input[name="${name}"][value="${value}"]`);
  if (!input) throw new Error(`no ${name} radio for ${value}`);
  return input;
}

function tagBox(root: HTMLElement, tag: string): HTMLInputElement {
  const label = root.querySelector<HTMLElement>(`.tag-option[data-tag="${tag}"]`);
  const input = label?.querySelector <HTMLInputElement>("input");
  if (!input) throw new Error(`no tag option ${tag}`);
  return input;
}

describe("annotation workbench against a live service", () => {
  let root: HTMLElement;
  let app: App;

  it("selects the voice-change pair and shows its structures", async () => {
    root = document.createElement("div");
    document.body.append(root);
    app = createApp(root, { api: new ApiClient(base), confirmDiscard: () => true });
    await app.init();

    const rows = [...root.querySelectorAll<HTMLElement>(".pair-row")];
    expect(rows.map((r) => r.dataset.pair)).toEqual(["pair1", "pair2", "pair3", "pair4"]);

    rows[1].click();
    await app.pending;
    expect(app.selectedPairId).toBe("pair2");
    expect(root.querySelector("#coverage")?.textContent).toContain("0 aligned");

    // one structure per side, sentences render with highlighted transemes
    const sourceStructures = root.querySelectorAll("#pas-source .structure");
    const targetStructures = root.querySelectorAll("#pas-target .structure");
    expect(sourceStructures).toHaveLength(1);
    expect(targetStructures).toHaveLength(1);
    expect(root.querySelector("#pas-source .tok-pred")?.textContent).toBe("dramatised");
    expect(root.querySelectorAll("#pas-source .tok-arg").length).toBeGreaterThan(0);
  });

  it("stages the redundant tag combination and is blocked with R6 before submit", async () => {
    const sourcePredicateId = app.detail!.source.predicates[0].instance_id;
    const targetPredicateId = app.detail!.target.predicates[0].instance_id;
    radioFor(root, "structure-source", sourcePredicateId).click();
    radioFor(root, "structure-target", targetPredicateId).click();

    const it_ = app.detail!.source.arguments.find((a) => a.role === "ent_dramatised")!;
    const sache = app.detail!.target.arguments.find((a) => a.role === "ent_aufgebauscht")!;
    radioFor(root, "draft-source", it_.instance_id).click();
    radioFor(root, "draft-target", sache.instance_id).click();

    tagBox(root, "depronominalisation").click();
    tagBox(root, "explicitation").click();
    expect(app.draft.tags).toEqual(["depronominalisation", "explicitation"]);

    // same-category options are disabled while one is staged (R1 mirror)
    expect(tagBox(root, "pronominalisation").disabled).toBe(true);
    expect(tagBox(root, "generalisation").disabled).toBe(true);

    const recordsBefore = app.detail!.alignments.length;
    const revisionBefore = app.revision;
    root.querySelector<HTMLButtonElement>("#submit-alignment")!.click();
    await app.pending;

    const violations = [...root.querySelectorAll<HTMLElement>("#draft-violations .violation")];
    expect(violations.some((v) => v.dataset.rule === "R6")).toBe(true);
    expect(violations.find((v) => v.dataset.rule === "R6")?.textContent).toContain("R6");
    // blocked client-side: nothing was sent, nothing changed
    expect(app.revision).toBe(revisionBefore);
    expect(app.detail!.alignments).toHaveLength(recordsBefore);
  });

  it("submits a valid depassivisation record and the coverage updates", async () => {
    tagBox(root, "depronominalisation").click();
    tagBox(root, "explicitation").click();
    expect(app.draft.tags).toEqual([]);

    const sourcePredicate = app.detail!.source.predicates[0];
    const targetPredicate = app.detail!.target.predicates[0];
    radioFor(root, "draft-source", sourcePredicate.instance_id).click();
    radioFor(root, "draft-target", targetPredicate.instance_id).click();
    tagBox(root, "depassivisation").click();

    const revisionBefore = app.revision!;
    root.querySelector<HTMLButtonElement>("#submit-alignment")!.click();
    await app.pending;

    expect(app.revision).toBe(revisionBefore + 1);
    expect(app.detail!.alignments).toHaveLength(1);
    expect(app.detail!.alignments[0].tags).toEqual(["depassivisation"]);
    expect(root.querySelector("#coverage")?.textContent).toContain("2 aligned");
    const records = root.querySelectorAll(".alignment-record");
    expect(records).toHaveLength(1);
    expect(records[0].textContent).toContain("depassivisation");

    // the pair list badge refreshed too
    const row = root.querySelector<HTMLElement>('.pair-row[data-pair="pair2"]');
    expect(row?.textContent).toContain("33.3%");
  });

  it("surfaces a stale-revision conflict as a reload prompt, never a silent overwrite", async () => {
    // another client bumps the store behind our back
    const other = new ApiClient(base);
    const detail = await other.getPair("pair2");
    const wir = detail.target.arguments.find((a) => a.role === "agent")!;
    await other.postAlignment(
      "pair2",
      {
        source: null,
        target: { kind: "argument", instance_id: wir.instance_id },
        tags: ["addition"],
        marker: null,
        note: null,
      },
      detail.revision,
    );

    const it_ = app.detail!.source.arguments.find((a) => a.role === "ent_dramatised")!;
    const sache = app.detail!.target.arguments.find((a) => a.role === "ent_aufgebauscht")!;
    radioFor(root, "draft-source", it_.instance_id).click();
    radioFor(root, "draft-target", sache.instance_id).click();
    tagBox(root, "depronominalisation").click();
    root.querySelector<HTMLButtonElement>("#submit-alignment")!.click();
    await app.pending;

    expect(app.staleConflict).toBe(true);
    const banner = root.querySelector(".stale-banner");
    expect(banner?.textContent).toContain("stale");
    root.querySelector<HTMLButtonElement>("#reload-button")!.click();
    await app.pending;
    expect(app.staleConflict).toBe(false);
    expect(app.detail!.alignments).toHaveLength(2);

    // after reloading, the held draft can be submitted cleanly
    radioFor(root, "draft-source", it_.instance_id).click();
    radioFor(root, "draft-target", sache.instance_id).click();
    tagBox(root, "depronominalisation").click();
    root.querySelector<HTMLButtonElement>("#submit-alignment")!.click();
    await app.pending;
    expect(app.detail!.alignments).toHaveLength(3);
    expect(root.querySelector("#coverage")?.textContent).toContain("5 aligned");
  });

  it("creates a new predicate through the span editor with role suggestions available", async () => {
    // annotate EN "want" as a predicate via token clicks (index 3 in pair2? no: pair2 has no 'want')
    const tokens = app.detail!.source.tokens;
    const index = tokens.indexOf("should");
    const button = root.querySelector<HTMLButtonElement>(
      `#pas-source .token-button[data-index="${index}"]`,
    )!;
    button.click();
    expect(app.spanSelection).toEqual({ side: "source", tokens: [index] });

    const lemma = root.querySelector<HTMLInputElement>("#pas-source .pred-lemma")!;
    lemma.value = "shall";
    const revisionBefore = app.revision!;
    root.querySelector<HTMLButtonElement>("#pas-source .create-predicate")!.click();
    await app.pending;
    expect(app.revision).toBe(revisionBefore + 1);
    const lemmas = app.detail!.source.predicates.map((p) => p.type[1]);
    expect(lemmas).toContain("SHALL");
    expect(root.querySelectorAll("#pas-source .structure")).toHaveLength(2);
  });
});
