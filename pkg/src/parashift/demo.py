"""A small, fully annotated English→German demonstration project.

Four parliamentary-debate sentence pairs showing the annotation model end to
end: a straightforward pair with no shifts, a voice change with its knock-on
addition/deletion/depronominalisation, an aktionsart divergence, and a
partially dropped argument. Used by the test suite and as CLI/service demo
data.
"""

from __future__ import annotations

from .corpus import AlignmentLink, Corpus, Document, Sentence, Token
from .extraction import SentencePair
from .project import Project
from .shifts import Side, TransemeKind, TransemeRef

SPEAKER = "Smith, John"
DOC_ID = "ep-00-01-18"

# sentence id -> (tokens, speaker, language_attr)
_EN_SENTENCES = {
    "4.2": "I refer to item 11 on the order of business .",
    "8.4": "It should not be dramatised into something more than that .",
    "11.1": "we agreed yesterday to have the Bourlanges report on today's agenda .",
    "13.3": "I do not want to drag up the issue of this building endlessly .",
}
_DE_SENTENCES = {
    "4.2": "Ich beziehe mich auf Punkt 11 des Arbeitsplans .",
    "8.4": "Wir sollten die ganze Sache nicht weiter aufbauschen .",
    "11.1": "Wir kamen gestern überein , den Bericht Bourlanges auf die Tagesordnung von heute zu setzen .",
    "13.3": "Ich will nicht endlos auf diesem Thema herumreiten .",
}

PAIR_SENTENCE_IDS = ("4.2", "8.4", "11.1", "13.3")


def _sentence(sid: str, text: str, speaker: str | None, language_attr: str | None) -> Sentence:
    tokens = tuple(Token(i, surface) for i, surface in enumerate(text.split()))
    return Sentence(id=sid, tokens=tokens, speaker_name=speaker, language_attr=language_attr)


def build_corpora(sentence_ids=PAIR_SENTENCE_IDS) -> tuple[Corpus, Corpus]:
    en = Corpus(
        language="en",
        documents=(
            Document(
                id=DOC_ID,
                sentences=tuple(
                    _sentence(sid, _EN_SENTENCES[sid], SPEAKER, None) for sid in sentence_ids
                ),
            ),
        ),
    )
    de = Corpus(
        language="de",
        documents=(
            Document(
                id=DOC_ID,
                sentences=tuple(
                    _sentence(sid, _DE_SENTENCES[sid], None, "en") for sid in sentence_ids
                ),
            ),
        ),
    )
    return en, de


def build_project(
    examples: tuple[int, ...] = (1, 2, 3, 4),
    skip_alignments: tuple[int, ...] = (),
) -> Project:
    """Build the demo project; ``examples`` selects which of the four pairs
    to include (1-based, in corpus order). Pairs listed in
    ``skip_alignments`` keep their predicate-argument annotations but stay
    unaligned, e.g. for exercising the annotation workflow."""
    sentence_ids = tuple(PAIR_SENTENCE_IDS[i - 1] for i in examples)
    en, de = build_corpora(sentence_ids)
    project = Project()
    project.add_corpus(en)
    project.add_corpus(de)
    project.links = [
        AlignmentLink(source_ids=((DOC_ID, sid),), target_ids=((DOC_ID, sid),))
        for sid in sentence_ids
    ]
    project.pairs = [
        SentencePair(
            pair_id=f"pair{i + 1}",
            source=("en", DOC_ID, sid),
            target=("de", DOC_ID, sid),
            direction=("en", "de"),
            speaker_name=SPEAKER,
            genre=None,
        )
        for i, sid in enumerate(sentence_ids)
    ]
    builders = {1: _annotate_refer, 2: _annotate_dramatise, 3: _annotate_agenda, 4: _annotate_drag_up}
    for pair_index, example in enumerate(examples):
        builders[example](
            project,
            f"pair{pair_index + 1}",
            PAIR_SENTENCE_IDS[example - 1],
            do_align=example not in skip_alignments,
        )
    return project


def _refs(predicate, arguments):
    side = Side.SOURCE if predicate.sentence[0] == "en" else Side.TARGET
    out = {"pred": TransemeRef(side, TransemeKind.PREDICATE, predicate.instance_id)}
    for name, argument in arguments.items():
        out[name] = TransemeRef(side, TransemeKind.ARGUMENT, argument.instance_id)
    return out


def _annotate_refer(project: Project, pair_id: str, sid: str, do_align: bool = True) -> None:
    # en: [I] refer [to item 11 on the order of business]
    # de: [Ich] beziehe mich [auf Punkt 11 des Arbeitsplans]
    refer = project.register_predicate("en", "refer", "v")
    beziehen = project.register_predicate("de", "beziehen", "v")
    en_key, de_key = ("en", DOC_ID, sid), ("de", DOC_ID, sid)
    p_en = project.annotate_predicate(en_key, {1}, refer.key)
    a_en1 = project.annotate_argument(p_en.instance_id, {0}, "agent")
    a_en2 = project.annotate_argument(p_en.instance_id, set(range(2, 10)), "topic")
    p_de = project.annotate_predicate(de_key, {1, 2}, beziehen.key)
    a_de1 = project.annotate_argument(p_de.instance_id, {0}, "agent")
    a_de2 = project.annotate_argument(p_de.instance_id, set(range(3, 8)), "topic")
    src = _refs(p_en, {"agent": a_en1, "topic": a_en2})
    tgt = _refs(p_de, {"agent": a_de1, "topic": a_de2})
    if not do_align:
        return
    project.align(pair_id, source=src["pred"], target=tgt["pred"])
    project.align(pair_id, source=src["agent"], target=tgt["agent"])
    project.align(pair_id, source=src["topic"], target=tgt["topic"])


def _annotate_dramatise(project: Project, pair_id: str, sid: str, do_align: bool = True) -> None:
    # en: [It] should not be dramatised [into something more than that]   (passive)
    # de: [Wir] sollten [die ganze Sache] nicht weiter aufbauschen        (active)
    dramatise = project.register_predicate("en", "dramatise", "v")
    aufbauschen = project.register_predicate("de", "aufbauschen", "v")
    en_key, de_key = ("en", DOC_ID, sid), ("de", DOC_ID, sid)
    p_en = project.annotate_predicate(en_key, {4}, dramatise.key, tags={"passive"})
    a_it = project.annotate_argument(p_en.instance_id, {0}, "ent_dramatised")
    a_into = project.annotate_argument(p_en.instance_id, set(range(5, 10)), "extent")
    p_de = project.annotate_predicate(de_key, {7}, aufbauschen.key)
    a_wir = project.annotate_argument(p_de.instance_id, {0}, "agent")
    a_sache = project.annotate_argument(p_de.instance_id, {2, 3, 4}, "ent_aufgebauscht")
    src = _refs(p_en, {"it": a_it, "into": a_into})
    tgt = _refs(p_de, {"wir": a_wir, "sache": a_sache})
    if not do_align:
        return
    project.align(pair_id, source=src["pred"], target=tgt["pred"], tags=["depassivisation"])
    project.align(pair_id, target=tgt["wir"], tags=["addition"])
    project.align(pair_id, source=src["into"], tags=["deletion"])
    project.align(pair_id, source=src["it"], target=tgt["sache"], tags=["depronominalisation"])


def _annotate_agenda(project: Project, pair_id: str, sid: str, do_align: bool = True) -> None:
    # en: [we] agreed yesterday to have [the Bourlanges report] [on today's agenda]
    # de: [Wir] kamen gestern überein, [den Bericht Bourlanges] [auf die
    #     Tagesordnung von heute] zu setzen
    have = project.register_predicate("en", "have", "v")
    setzen = project.register_predicate("de", "setzen", "v")
    en_key, de_key = ("en", DOC_ID, sid), ("de", DOC_ID, sid)
    p_en = project.annotate_predicate(en_key, {4}, have.key, tags={"infinitive"})
    a_we = project.annotate_argument(p_en.instance_id, {0}, "agent")
    a_report = project.annotate_argument(p_en.instance_id, {5, 6, 7}, "ent_had")
    a_agenda = project.annotate_argument(p_en.instance_id, {8, 9, 10}, "location")
    p_de = project.annotate_predicate(de_key, {14}, setzen.key, tags={"infinitive"})
    a_wir = project.annotate_argument(p_de.instance_id, {0}, "agent")
    a_bericht = project.annotate_argument(p_de.instance_id, {5, 6, 7}, "ent_gesetzt")
    a_tagesordnung = project.annotate_argument(p_de.instance_id, set(range(8, 13)), "goal")
    src = _refs(p_en, {"we": a_we, "report": a_report, "agenda": a_agenda})
    tgt = _refs(p_de, {"wir": a_wir, "report": a_bericht, "agenda": a_tagesordnung})
    if not do_align:
        return
    project.align(
        pair_id,
        source=src["pred"],
        target=tgt["pred"],
        tags=["semantic_modification"],
        note="aktionsart: stative source predicate, telic target predicate",
    )
    project.align(pair_id, source=src["we"], target=tgt["wir"])
    project.align(pair_id, source=src["report"], target=tgt["report"])
    project.align(pair_id, source=src["agenda"], target=tgt["agenda"])


def _annotate_drag_up(project: Project, pair_id: str, sid: str, do_align: bool = True) -> None:
    # en: [I] do not want to drag up [the issue of this building] endlessly
    # de: [Ich] will nicht endlos [auf diesem Thema] herumreiten
    # "want"/"will" express modality and are left unannotated here.
    drag_up = project.register_predicate("en", "drag up", "v")
    herumreiten = project.register_predicate("de", "herumreiten", "v")
    en_key, de_key = ("en", DOC_ID, sid), ("de", DOC_ID, sid)
    p_en = project.annotate_predicate(en_key, {5, 6}, drag_up.key)
    a_i = project.annotate_argument(p_en.instance_id, {0}, "agent")
    a_issue = project.annotate_argument(p_en.instance_id, set(range(7, 12)), "topic")
    p_de = project.annotate_predicate(de_key, {7}, herumreiten.key)
    a_ich = project.annotate_argument(p_de.instance_id, {0}, "agent")
    a_thema = project.annotate_argument(p_de.instance_id, {4, 5, 6}, "topic")
    src = _refs(p_en, {"i": a_i, "issue": a_issue})
    tgt = _refs(p_de, {"ich": a_ich, "thema": a_thema})
    if not do_align:
        return
    project.align(pair_id, source=src["pred"], target=tgt["pred"])
    project.align(pair_id, source=src["i"], target=tgt["ich"])
    project.align(pair_id, source=src["issue"], target=tgt["thema"], tags=["generalisation"])


MANIFEST = {
    "pairs": 4,
    "predicates": 8,
    "arguments": 18,
    "alignment_records": 14,
    "tag_counts": {
        "depassivisation": 1,
        "addition": 1,
        "deletion": 1,
        "depronominalisation": 1,
        "semantic_modification": 1,
        "generalisation": 1,
    },
}
