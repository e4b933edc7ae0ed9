"""HTTP/JSON facade over a project store for the annotation UI and scripts.

Writes are optimistic-concurrency guarded: clients echo the revision they
read in an ``If-Match`` header and receive 409 ``stale_revision`` when the
store has moved on. Validation failures answer 422 and always cite the
stable rule ids (R1..R12) or error codes shared with the CLI.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import pas, reporting
from .errors import (
    AlignmentViolationError,
    DanglingRefError,
    DuplicateParticipationError,
    DuplicateTypeError,
    IntegrityError,
    MalformedInputError,
    MissingNoteError,
    ParashiftError,
    RoleNameError,
    SpanOutOfRangeError,
    StaleRevisionError,
    UnknownTagError,
    UnsupportedVersionError,
)
from .project import Project, ProjectStore
from .shifts import Side, TransemeKind, TransemeRef

_STATUS_BY_CODE = {
    StaleRevisionError.code: 409,
    MalformedInputError.code: 400,
    UnsupportedVersionError.code: 400,
}
_422_ERRORS = (
    AlignmentViolationError,
    DanglingRefError,
    DuplicateParticipationError,
    DuplicateTypeError,
    IntegrityError,
    MissingNoteError,
    RoleNameError,
    SpanOutOfRangeError,
    UnknownTagError,
)


def _error_response(status: int, code: str, message: str, details=None) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"status": status, "code": code, "message": message, "details": details or []},
    )


def _pair_summary(project: Project, pair) -> dict:
    coverage = project.coverage(pair.pair_id)
    aligned = len(coverage["aligned"])
    total = aligned + len(coverage["unaligned_source"]) + len(coverage["unaligned_target"])
    pct = 100.0 if total == 0 else round(100.0 * aligned / total, 1)
    source = project.sentence_for(pair.source)
    target = project.sentence_for(pair.target)

    def preview(sentence):
        text = sentence.text if sentence else ""
        return text if len(text) <= 80 else text[:77] + "..."

    return {
        "pair_id": pair.pair_id,
        "direction": list(pair.direction),
        "genre": pair.genre,
        "speaker_name": pair.speaker_name,
        "source_doc": pair.source[1],
        "source_sentence_id": pair.source[2],
        "target_doc": pair.target[1],
        "target_sentence_id": pair.target[2],
        "source_preview": preview(source),
        "target_preview": preview(target),
        "coverage_pct": pct,
    }


def _sentence_doc(project: Project, key) -> dict:
    sentence = project.sentence_for(key)
    ann = project.annotations_for(key)
    return {
        "language": key[0],
        "doc_id": key[1],
        "sentence_id": key[2],
        "speaker_name": sentence.speaker_name,
        "language_attr": sentence.language_attr,
        "tokens": [t.surface for t in sentence.tokens],
        "predicates": [
            {
                "instance_id": p.instance_id,
                "type": list(p.type_key),
                "span": sorted(p.span),
                "realization_tags": sorted(p.realization_tags),
            }
            for p in ann.predicates
        ],
        "arguments": [
            {
                "instance_id": a.instance_id,
                "parent": a.parent,
                "role": a.role,
                "span": sorted(a.span),
                "antecedent_span": sorted(a.antecedent_span)
                if a.antecedent_span is not None
                else None,
            }
            for a in ann.arguments
        ],
    }


def _ref_doc(ref: TransemeRef | None):
    if ref is None:
        return None
    return {"kind": ref.kind.value, "instance_id": ref.instance_id}


def _ref_from_payload(doc, side: Side) -> TransemeRef | None:
    if doc is None:
        return None
    if not isinstance(doc, dict) or "kind" not in doc or "instance_id" not in doc:
        raise ValueError("transeme ref needs 'kind' and 'instance_id'")
    return TransemeRef(
        side=side, kind=TransemeKind(doc["kind"]), instance_id=str(doc["instance_id"])
    )


def _pair_detail(project: Project, pair) -> dict:
    coverage = project.coverage(pair.pair_id)
    return {
        "pair": {
            "pair_id": pair.pair_id,
            "direction": list(pair.direction),
            "genre": pair.genre,
            "speaker_name": pair.speaker_name,
        },
        "source": _sentence_doc(project, pair.source),
        "target": _sentence_doc(project, pair.target),
        "alignments": [
            {
                "alignment_id": r.alignment_id,
                "source": _ref_doc(r.source),
                "target": _ref_doc(r.target),
                "tags": [t.value for t in r.tags],
                "marker": r.marker.value if r.marker else None,
                "note": r.note,
            }
            for r in project.alignments.get(pair.pair_id, [])
        ],
        "coverage": {
            bucket: [
                {"side": ref.side.value, "kind": ref.kind.value, "instance_id": ref.instance_id}
                for ref in refs
            ]
            for bucket, refs in coverage.items()
        },
        "revision": project.revision,
    }


async def _json_body(request: Request) -> dict:
    try:
        payload = await request.json()
    except Exception:
        raise MalformedInputError("request body is not valid JSON")
    if not isinstance(payload, dict):
        raise MalformedInputError("request body must be a JSON object")
    return payload


def _expected_revision(request: Request) -> int | None:
    raw = request.headers.get("if-match")
    if raw is None:
        return None
    raw = raw.strip().strip('"')
    try:
        return int(raw)
    except ValueError:
        raise MalformedInputError(f"If-Match header {raw!r} is not a revision number")


def create_app(store: ProjectStore, static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="parashift annotation service", docs_url=None, redoc_url=None)

    @app.exception_handler(ParashiftError)
    async def parashift_error(request: Request, exc: ParashiftError):
        status = _STATUS_BY_CODE.get(exc.code, 422 if isinstance(exc, _422_ERRORS) else 400)
        code = exc.code
        details = []
        if isinstance(exc, AlignmentViolationError):
            code = exc.violations[0].rule_id
            details = [
                {"rule_id": v.rule_id, "message": v.message, "refs": list(v.refs)}
                for v in exc.violations
            ]
        elif isinstance(exc, IntegrityError):
            details = [{"message": p} for p in exc.problems]
        elif isinstance(exc, DanglingRefError):
            details = [{"ref": r} for r in exc.refs]
        return _error_response(status, code, str(exc), details)

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError):
        return _error_response(422, "invalid_request", str(exc))

    @app.exception_handler(RequestValidationError)
    async def validation_error(request: Request, exc: RequestValidationError):
        return _error_response(422, "invalid_request", "request body does not fit the endpoint")

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request: Request, exc: StarletteHTTPException):
        code = {404: "not_found", 405: "method_not_allowed"}.get(exc.status_code, "http_error")
        return _error_response(exc.status_code, code, str(exc.detail))

    def etag(response_body: dict | list) -> JSONResponse:
        response = JSONResponse(content=response_body)
        response.headers["ETag"] = f'"{store.current.revision}"'
        return response

    def get_pair_or_404(pair_id: str):
        pair = store.current.pair_for(pair_id)
        if pair is None:
            raise StarletteHTTPException(status_code=404, detail=f"no pair {pair_id!r}")
        return pair

    @app.get("/api/pairs")
    async def list_pairs():
        project = store.current
        return etag([_pair_summary(project, pair) for pair in project.pairs])

    @app.get("/api/pairs/{pair_id}")
    async def get_pair(pair_id: str):
        project = store.current
        pair = get_pair_or_404(pair_id)
        return etag(_pair_detail(project, pair))

    @app.post("/api/pairs/{pair_id}/pas")
    async def post_pas(pair_id: str, request: Request):
        payload = await _json_body(request)
        pair = get_pair_or_404(pair_id)
        expected = _expected_revision(request)
        created = {"predicates": [], "arguments": []}

        def edit(project: Project) -> None:
            side_keys = {"source": pair.source, "target": pair.target}
            for pred_doc in payload.get("predicates", []):
                side = pred_doc.get("side")
                if side not in side_keys:
                    raise ValueError("predicate needs side 'source' or 'target'")
                key = side_keys[side]
                lemma = str(pred_doc["lemma"]).upper()
                sense = int(pred_doc.get("sense", 1))
                type_key = (key[0], lemma, sense)
                if type_key not in project.registry.types:
                    project.register_predicate(
                        key[0],
                        lemma,
                        pred_doc.get("class", "v"),
                        sense,
                        pred_doc.get("group_id"),
                        pred_doc.get("description"),
                    )
                instance = project.annotate_predicate(
                    key, pred_doc["span"], type_key, pred_doc.get("tags", ())
                )
                created["predicates"].append(instance.instance_id)
            for arg_doc in payload.get("arguments", []):
                parent = str(arg_doc["parent"])
                if parent.startswith("@"):
                    parent = created["predicates"][int(parent[1:])]
                instance = project.annotate_argument(
                    parent,
                    arg_doc["span"],
                    arg_doc["role"],
                    arg_doc.get("antecedent_span"),
                )
                created["arguments"].append(instance.instance_id)

        try:
            project = store.commit(edit, expected)
        except (KeyError, IndexError) as exc:
            return _error_response(422, "invalid_request", f"missing or bad field: {exc}")
        return {"created": created, "revision": project.revision}

    @app.post("/api/pairs/{pair_id}/alignments")
    async def post_alignment(pair_id: str, request: Request):
        payload = await _json_body(request)
        get_pair_or_404(pair_id)
        expected = _expected_revision(request)
        record_id: list[str] = []

        def edit(project: Project) -> None:
            record = project.align(
                pair_id,
                source=_ref_from_payload(payload.get("source"), Side.SOURCE),
                target=_ref_from_payload(payload.get("target"), Side.TARGET),
                tags=payload.get("tags", ()),
                marker=payload.get("marker"),
                note=payload.get("note"),
            )
            record_id.append(record.alignment_id)

        project = store.commit(edit, expected)
        return {"alignment_id": record_id[0], "revision": project.revision}

    @app.delete("/api/pairs/{pair_id}/pas/{instance_id}")
    async def delete_pas(pair_id: str, instance_id: str, request: Request):
        pair = get_pair_or_404(pair_id)
        expected = _expected_revision(request)
        project = store.current
        located = project.find_predicate(instance_id) or project.find_argument(instance_id)
        if located is None or located[0] not in (pair.source, pair.target):
            raise StarletteHTTPException(
                status_code=404, detail=f"no instance {instance_id!r} on pair {pair_id!r}"
            )
        removed: list[str] = []

        def edit(working: Project) -> None:
            removed.extend(working.remove_instance(instance_id))

        project = store.commit(edit, expected)
        return {"removed": removed, "revision": project.revision}

    @app.delete("/api/pairs/{pair_id}/alignments/{alignment_id}")
    async def delete_alignment(pair_id: str, alignment_id: str, request: Request):
        get_pair_or_404(pair_id)
        expected = _expected_revision(request)
        records = store.current.alignments.get(pair_id, [])
        if not any(r.alignment_id == alignment_id for r in records):
            raise StarletteHTTPException(
                status_code=404, detail=f"no alignment {alignment_id!r} on pair {pair_id!r}"
            )
        project = store.commit(lambda p: p.remove_alignment(pair_id, alignment_id), expected)
        return {"revision": project.revision}

    @app.get("/api/registry")
    async def get_registry():
        project = store.current
        return etag(
            {
                "groups": [
                    {
                        "group_id": group.group_id,
                        "language": group.language,
                        "roles": sorted(group.role_registry),
                        "suggested_roles": pas.suggest_roles(
                            group, project.role_usage(group.group_id)
                        ),
                    }
                    for _, group in sorted(project.registry.groups.items())
                ],
                "types": [
                    {
                        "language": t.language,
                        "lemma": t.lemma,
                        "class": t.predicate_class.value,
                        "sense": t.sense,
                        "group_id": t.group_id,
                        "description": t.description,
                    }
                    for _, t in sorted(project.registry.types.items())
                ],
                "realization_tags": sorted(project.config.realization_tags),
            }
        )

    @app.get("/api/reports/shifts")
    async def get_shift_report(group_by: str = "none"):
        try:
            grouping = reporting.GroupBy(group_by)
        except ValueError:
            return _error_response(422, "invalid_group_key", f"unknown group_by {group_by!r}")
        report = reporting.shift_counts(store.current, grouping)
        return etag(
            {
                "group_by": report.group_by.value,
                "rows": [
                    {"group": group, "tag": tag, "count": count}
                    for group, tag, count in report.rows
                ],
                "totals": report.totals,
                "denominators": report.denominator,
            }
        )

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
