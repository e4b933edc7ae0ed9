"""Sentence-aligned bilingual corpus model and interchange parsers.

Two interchange formats are supported, both UTF-8 with LF line endings:

XML dialect::

    <corpus lang="en">
      <doc id="ep-00-01-18">
        <s id="4.2" name="Smith, John" language="EN"><w>I</w> <w>refer</w></s>
      </doc>
    </corpus>

``name`` (speaker) and ``language`` (original language, used when it differs
from the corpus language) are optional on ``<s>``. Language codes are
case-normalized to lowercase on ingest.

Line-delimited alternative (``jsonlines``): one record object per line, a
``corpus`` header first, then ``doc`` and ``sentence`` records in order::

    {"record":"corpus","lang":"en"}
    {"record":"doc","id":"ep-00-01-18"}
    {"record":"sentence","id":"4.2","name":"Smith, John","language":"en","tokens":["I","refer"]}

Alignment files carry one link per line::

    src-doc:src-id[,src-id...] <TAB> tgt-doc:tgt-id[,tgt-id...]

Parsed corpora are immutable; parsing a given byte stream is deterministic.
"""

from __future__ import annotations

import io
import json
import re
import xml.parsers.expat
from dataclasses import dataclass
from enum import Enum
from typing import IO, Iterable

from .errors import DuplicateIdError, MalformedInputError, OverlappingLinkError

_LANG_RE = re.compile(r"^[a-z]{2}$")
_ID_RE = re.compile(r"^[A-Za-z0-9_.-]+$")
# Bare C0 controls (except tab) cannot be represented in XML 1.0 at all,
# so the model rejects them everywhere to keep the XML round-trip exact.
_BAD_CHARS = re.compile(r"[\x00-\x08\x0b\x0c\x0e-\x1f]")


class CorpusFormat(str, Enum):
    XML = "xml"
    JSONLINES = "jsonlines"


def _check_language(code: str, what: str) -> str:
    code = code.lower()
    if not _LANG_RE.match(code):
        raise MalformedInputError(f"{what} {code!r} is not a two-letter language code")
    return code


def _check_id(value: str, what: str) -> str:
    if not _ID_RE.match(value):
        raise MalformedInputError(f"{what} {value!r} contains characters outside [A-Za-z0-9_.-]")
    return value


@dataclass(frozen=True)
class Token:
    index: int
    surface: str

    def __post_init__(self):
        if not self.surface:
            raise MalformedInputError("token surface is empty")
        if "\n" in self.surface or "\r" in self.surface:
            raise MalformedInputError("token surface contains a newline")
        if _BAD_CHARS.search(self.surface):
            raise MalformedInputError("token surface contains a control character")


@dataclass(frozen=True)
class Sentence:
    id: str
    tokens: tuple[Token, ...]
    speaker_name: str | None = None
    language_attr: str | None = None

    def __post_init__(self):
        _check_id(self.id, "sentence id")
        for position, token in enumerate(self.tokens):
            if token.index != position:
                raise MalformedInputError(
                    f"token indices of sentence {self.id!r} are not contiguous from 0"
                )
        if self.speaker_name is not None and _BAD_CHARS.search(self.speaker_name):
            raise MalformedInputError("speaker name contains a control character")
        if self.language_attr is not None:
            object.__setattr__(
                self, "language_attr", _check_language(self.language_attr, "language attribute")
            )

    @property
    def text(self) -> str:
        return " ".join(t.surface for t in self.tokens)


@dataclass(frozen=True)
class Document:
    id: str
    sentences: tuple[Sentence, ...]

    def __post_init__(self):
        _check_id(self.id, "document id")
        seen = set()
        for sentence in self.sentences:
            if sentence.id in seen:
                raise DuplicateIdError("sentence", sentence.id)
            seen.add(sentence.id)


@dataclass(frozen=True)
class Corpus:
    language: str
    documents: tuple[Document, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "language", _check_language(self.language, "corpus language"))
        seen = set()
        for doc in self.documents:
            if doc.id in seen:
                raise DuplicateIdError("document", doc.id)
            seen.add(doc.id)

    def sentence(self, doc_id: str, sentence_id: str) -> Sentence | None:
        for doc in self.documents:
            if doc.id == doc_id:
                for sentence in doc.sentences:
                    if sentence.id == sentence_id:
                        return sentence
        return None

    def token_count(self) -> int:
        return sum(len(s.tokens) for d in self.documents for s in d.sentences)


@dataclass(frozen=True)
class AlignmentLink:
    """A sentence-alignment link; sides are (document id, sentence id) pairs."""

    source_ids: tuple[tuple[str, str], ...]
    target_ids: tuple[tuple[str, str], ...]

    def __post_init__(self):
        if not self.source_ids or not self.target_ids:
            raise MalformedInputError("alignment link with an empty side")

    @property
    def one_to_one(self) -> bool:
        return len(self.source_ids) == 1 and len(self.target_ids) == 1


# --- XML parsing -----------------------------------------------------------


class _XmlDialectTarget:
    """Expat handler set for the corpus dialect; tracks line numbers."""

    def __init__(self, parser):
        self._parser = parser
        self.corpus_lang = None
        self.documents: list[Document] = []
        self._doc_id = None
        self._doc_ids: set[str] = set()
        self._sentences: list[Sentence] = []
        self._sentence_ids: set[str] = set()
        self._sentence_attrs = None
        self._tokens: list[Token] = []
        self._in_w = False
        self._w_text: list[str] = []
        self._stack: list[str] = []

    def _fail(self, message):
        raise MalformedInputError(
            message,
            line=self._parser.CurrentLineNumber,
            offset=self._parser.CurrentByteIndex,
        )

    def _expect_attrs(self, attrs, required, optional, element):
        for name in required:
            if name not in attrs:
                self._fail(f"<{element}> is missing the {name!r} attribute")
        for name in attrs:
            if name not in required and name not in optional:
                self._fail(f"<{element}> has unexpected attribute {name!r}")

    def start(self, name, attrs):
        parent = self._stack[-1] if self._stack else None
        if parent is None:
            if name != "corpus":
                self._fail(f"root element must be <corpus>, found <{name}>")
            self._expect_attrs(attrs, ("lang",), (), "corpus")
            self.corpus_lang = attrs["lang"]
        elif parent == "corpus":
            if name != "doc":
                self._fail(f"<corpus> may only contain <doc>, found <{name}>")
            self._expect_attrs(attrs, ("id",), (), "doc")
            if attrs["id"] in self._doc_ids:
                raise DuplicateIdError("document", attrs["id"], line=self._parser.CurrentLineNumber)
            self._doc_id = attrs["id"]
            self._sentences = []
            self._sentence_ids = set()
        elif parent == "doc":
            if name != "s":
                self._fail(f"<doc> may only contain <s>, found <{name}>")
            self._expect_attrs(attrs, ("id",), ("name", "language"), "s")
            if attrs["id"] in self._sentence_ids:
                raise DuplicateIdError("sentence", attrs["id"], line=self._parser.CurrentLineNumber)
            self._sentence_attrs = attrs
            self._tokens = []
        elif parent == "s":
            if name != "w":
                self._fail(f"<s> may only contain <w>, found <{name}>")
            if attrs:
                self._fail("<w> takes no attributes")
            self._in_w = True
            self._w_text = []
        else:
            self._fail(f"unexpected element <{name}> inside <w>")
        self._stack.append(name)

    def end(self, name):
        self._stack.pop()
        if name == "w":
            self._in_w = False
            surface = "".join(self._w_text)
            try:
                self._tokens.append(Token(index=len(self._tokens), surface=surface))
            except MalformedInputError as exc:
                self._fail(str(exc))
        elif name == "s":
            attrs = self._sentence_attrs
            try:
                sentence = Sentence(
                    id=attrs["id"],
                    tokens=tuple(self._tokens),
                    speaker_name=attrs.get("name"),
                    language_attr=attrs.get("language"),
                )
            except MalformedInputError as exc:
                self._fail(str(exc))
            self._sentences.append(sentence)
            self._sentence_ids.add(sentence.id)
            self._sentence_attrs = None
        elif name == "doc":
            self.documents.append(Document(id=self._doc_id, sentences=tuple(self._sentences)))
            self._doc_ids.add(self._doc_id)
            self._doc_id = None

    def chars(self, data):
        if self._in_w:
            self._w_text.append(data)
        elif data.strip():
            self._fail(f"unexpected text {data.strip()!r} outside <w>")


def _as_bytes(stream: IO[bytes] | bytes) -> bytes:
    if isinstance(stream, (bytes, bytearray)):
        return bytes(stream)
    return stream.read()


def parse_corpus(stream: IO[bytes] | bytes, fmt: CorpusFormat | str = CorpusFormat.XML) -> Corpus:
    """Parse a corpus byte stream in the given interchange format."""
    fmt = CorpusFormat(fmt)
    data = _as_bytes(stream)
    if fmt is CorpusFormat.XML:
        return _parse_corpus_xml(data)
    return _parse_corpus_jsonlines(data)


def _parse_corpus_xml(data: bytes) -> Corpus:
    parser = xml.parsers.expat.ParserCreate("utf-8")
    target = _XmlDialectTarget(parser)
    parser.StartElementHandler = target.start
    parser.EndElementHandler = target.end
    parser.CharacterDataHandler = target.chars
    try:
        parser.Parse(data, True)
    except xml.parsers.expat.ExpatError as exc:
        raise MalformedInputError(
            xml.parsers.expat.errors.messages[exc.code],
            line=exc.lineno,
            offset=exc.offset,
        ) from exc
    if target.corpus_lang is None:
        raise MalformedInputError("empty document: no <corpus> element")
    return Corpus(language=target.corpus_lang, documents=tuple(target.documents))


def _parse_corpus_jsonlines(data: bytes) -> Corpus:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedInputError("input is not valid UTF-8", offset=exc.start) from exc
    lang = None
    documents: list[Document] = []
    doc_ids: set[str] = set()
    doc_id = None
    sentences: list[Sentence] = []
    sentence_ids: set[str] = set()

    def flush_doc():
        nonlocal doc_id
        if doc_id is not None:
            documents.append(Document(id=doc_id, sentences=tuple(sentences)))
            doc_ids.add(doc_id)
            doc_id = None

    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedInputError(f"invalid JSON: {exc.msg}", line=lineno) from exc
        if not isinstance(record, dict) or "record" not in record:
            raise MalformedInputError("record object must carry a 'record' field", line=lineno)
        kind = record["record"]
        if kind == "corpus":
            if lang is not None:
                raise MalformedInputError("second corpus header", line=lineno)
            if "lang" not in record:
                raise MalformedInputError("corpus header is missing 'lang'", line=lineno)
            lang = record["lang"]
        elif kind == "doc":
            if lang is None:
                raise MalformedInputError("doc record before corpus header", line=lineno)
            if "id" not in record:
                raise MalformedInputError("doc record is missing 'id'", line=lineno)
            flush_doc()
            if record["id"] in doc_ids:
                raise DuplicateIdError("document", record["id"], line=lineno)
            doc_id = record["id"]
            sentences = []
            sentence_ids = set()
        elif kind == "sentence":
            if doc_id is None:
                raise MalformedInputError("sentence record before any doc record", line=lineno)
            missing = {"id", "tokens"} - record.keys()
            if missing:
                raise MalformedInputError(
                    f"sentence record is missing {sorted(missing)}", line=lineno
                )
            if record["id"] in sentence_ids:
                raise DuplicateIdError("sentence", record["id"], line=lineno)
            tokens = record["tokens"]
            if not isinstance(tokens, list) or not all(isinstance(t, str) for t in tokens):
                raise MalformedInputError("'tokens' must be a list of strings", line=lineno)
            try:
                sentence = Sentence(
                    id=record["id"],
                    tokens=tuple(Token(i, s) for i, s in enumerate(tokens)),
                    speaker_name=record.get("name"),
                    language_attr=record.get("language"),
                )
            except MalformedInputError as exc:
                raise MalformedInputError(str(exc), line=lineno) from exc
            sentences.append(sentence)
            sentence_ids.add(sentence.id)
        else:
            raise MalformedInputError(f"unknown record kind {kind!r}", line=lineno)
    if lang is None:
        raise MalformedInputError("missing corpus header record")
    flush_doc()
    return Corpus(language=lang, documents=tuple(documents))


# --- serialization ---------------------------------------------------------


def _escape_text(value: str) -> str:
    return value.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _escape_attr(value: str) -> str:
    # Tab/LF/CR become character references so expat's attribute-value
    # normalization cannot fold them into spaces on re-parse.
    return (
        _escape_text(value)
        .replace('"', "&quot;")
        .replace("\t", "&#9;")
        .replace("\n", "&#10;")
        .replace("\r", "&#13;")
    )


def serialize_corpus(corpus: Corpus, fmt: CorpusFormat | str = CorpusFormat.XML) -> bytes:
    """Serialize to the interchange format; inverse of :func:`parse_corpus`."""
    fmt = CorpusFormat(fmt)
    if fmt is CorpusFormat.XML:
        return _serialize_corpus_xml(corpus)
    return _serialize_corpus_jsonlines(corpus)


def _serialize_corpus_xml(corpus: Corpus) -> bytes:
    out = io.StringIO()
    out.write(f'<corpus lang="{corpus.language}">\n')
    for doc in corpus.documents:
        out.write(f'  <doc id="{_escape_attr(doc.id)}">\n')
        for s in doc.sentences:
            attrs = [f'id="{_escape_attr(s.id)}"']
            if s.speaker_name is not None:
                attrs.append(f'name="{_escape_attr(s.speaker_name)}"')
            if s.language_attr is not None:
                attrs.append(f'language="{s.language_attr}"')
            words = " ".join(f"<w>{_escape_text(t.surface)}</w>" for t in s.tokens)
            out.write(f'    <s {" ".join(attrs)}>{words}</s>\n')
        out.write("  </doc>\n")
    out.write("</corpus>\n")
    return out.getvalue().encode("utf-8")


def _serialize_corpus_jsonlines(corpus: Corpus) -> bytes:
    def dump(record: dict) -> str:
        return json.dumps(record, sort_keys=True, ensure_ascii=False, separators=(",", ":"))

    lines = [dump({"record": "corpus", "lang": corpus.language})]
    for doc in corpus.documents:
        lines.append(dump({"record": "doc", "id": doc.id}))
        for s in doc.sentences:
            record = {"record": "sentence", "id": s.id, "tokens": [t.surface for t in s.tokens]}
            if s.speaker_name is not None:
                record["name"] = s.speaker_name
            if s.language_attr is not None:
                record["language"] = s.language_attr
            lines.append(dump(record))
    return ("\n".join(lines) + "\n").encode("utf-8")


# --- alignment links -------------------------------------------------------


def parse_alignment(stream: IO[bytes] | bytes) -> list[AlignmentLink]:
    """Parse a link-per-line alignment file; enforces the partition invariant."""
    try:
        text = _as_bytes(stream).decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MalformedInputError("input is not valid UTF-8", offset=exc.start) from exc
    links: list[AlignmentLink] = []
    seen_source: set[tuple[str, str]] = set()
    seen_target: set[tuple[str, str]] = set()
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedInputError("expected exactly one tab separator", line=lineno)
        try:
            link = AlignmentLink(
                source_ids=_parse_link_side(parts[0], lineno),
                target_ids=_parse_link_side(parts[1], lineno),
            )
        except MalformedInputError as exc:
            if exc.line is None:
                raise MalformedInputError(str(exc), line=lineno) from exc
            raise
        for key in link.source_ids:
            if key in seen_source:
                raise OverlappingLinkError(key[1], line=lineno)
            seen_source.add(key)
        for key in link.target_ids:
            if key in seen_target:
                raise OverlappingLinkError(key[1], line=lineno)
            seen_target.add(key)
        links.append(link)
    return links


def _parse_link_side(side: str, lineno: int) -> tuple[tuple[str, str], ...]:
    if ":" not in side:
        raise MalformedInputError(f"link side {side!r} is missing the doc:id separator", line=lineno)
    doc, ids = side.split(":", 1)
    _check_id(doc, "document id")
    out = []
    for sentence_id in ids.split(","):
        _check_id(sentence_id, "sentence id")
        out.append((doc, sentence_id))
    return tuple(out)


def _serialize_link_side(ids: tuple[tuple[str, str], ...]) -> str:
    docs = {doc for doc, _ in ids}
    if len(docs) > 1:
        raise MalformedInputError("link side spans multiple documents; not representable")
    return f"{ids[0][0]}:" + ",".join(sid for _, sid in ids)


def serialize_alignment(links: Iterable[AlignmentLink]) -> bytes:
    lines = [
        f"{_serialize_link_side(link.source_ids)}\t{_serialize_link_side(link.target_ids)}"
        for link in links
    ]
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""
