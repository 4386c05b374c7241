"""HTTP service exposing the classifier, cohomology answers and verifiers.

The CLI talks to this app in-process through an ASGI transport by default,
so "one source of truth" holds whether equisurf runs locally or as a server.
"""

from __future__ import annotations

import re
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .bigraded import DEFAULT_WINDOW, Bidegree, Window, parse_window
from .cohomology import answer_obj, cohomology
from .ext import ext1_detail
from .les import case_names, find_case, resolve_extension, verify_case
from .render import render_ascii, render_svg
from .stdmod import ShiftedStd, StdKind
from .surfaces import (
    ParseError,
    SemanticError,
    classify_str,
    invariants,
    quotient_surface,
    surface_name,
    underlying_surface,
)
from .verify import SUITES, run_suite

app = FastAPI(title="equisurf", version=__version__)


def _bad_request(exc: Exception, kind: str, status: int):
    raise HTTPException(status_code=status, detail={"kind": kind, "message": str(exc)})


def _window_of(text: Optional[str]) -> Window:
    if text is None:
        return DEFAULT_WINDOW
    try:
        return parse_window(text)
    except ValueError as exc:
        _bad_request(exc, "parse", 400)


class ClassifyRequest(BaseModel):
    expr: str


class ClassifyResponse(BaseModel):
    family: str
    params: dict[str, int]
    name: str
    surgery: str
    invariants: dict
    underlying: str
    quotient: str


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/classify", response_model=ClassifyResponse)
def classify_endpoint(req: ClassifyRequest) -> ClassifyResponse:
    try:
        cls = classify_str(req.expr)
    except ParseError as exc:
        _bad_request(exc, "parse", 400)
    except SemanticError as exc:
        _bad_request(exc, "semantic", 422)
    obj = cls.to_obj()
    return ClassifyResponse(
        family=obj["family"],
        params=obj["params"],
        name=obj["name"],
        surgery=obj["surgery"],
        invariants=invariants(cls).to_obj(),
        underlying=surface_name(underlying_surface(cls)),
        quotient=surface_name(quotient_surface(cls)),
    )


class CohomologyRequest(BaseModel):
    expr: str
    window: Optional[str] = None
    format: Literal["json", "ascii", "svg"] = "json"


class CohomologyResponse(BaseModel):
    answer: dict
    rendered: Optional[str] = None


@app.post("/cohomology", response_model=CohomologyResponse)
def cohomology_endpoint(req: CohomologyRequest) -> CohomologyResponse:
    window = _window_of(req.window)
    try:
        cls = classify_str(req.expr)
        expr = cohomology(cls)
    except ParseError as exc:
        _bad_request(exc, "parse", 400)
    except SemanticError as exc:
        _bad_request(exc, "semantic", 422)
    rendered = None
    if req.format == "ascii":
        rendered = render_ascii(expr, window)
    elif req.format == "svg":
        rendered = render_svg(expr, window)
    return CohomologyResponse(answer=answer_obj(cls), rendered=rendered)


class VerifyRequest(BaseModel):
    suite: str = "all"
    window: Optional[str] = None


@app.post("/verify")
def verify_endpoint(req: VerifyRequest) -> dict:
    if req.suite not in SUITES:
        _bad_request(ValueError(f"unknown suite {req.suite!r}"), "semantic", 422)
    window = parse_window(req.window) if req.window else None
    return run_suite(req.suite, window=window)


_TARGET = re.compile(r"^(M3|HC3|HS1FREE|EB)(?:@(-?\d+),(-?\d+))?$")


class ExtRequest(BaseModel):
    target: str = Field(description="summand token, e.g. EB, M3@2,1, HC3@1,0")


@app.post("/ext")
def ext_endpoint(req: ExtRequest) -> dict:
    m = _TARGET.match(req.target.strip())
    if not m:
        _bad_request(ValueError(f"bad target {req.target!r}"), "parse", 400)
    kind = StdKind(m.group(1))
    shift = (int(m.group(2) or 0), int(m.group(3) or 0))
    try:
        detail = ext1_detail(kind, shift)
    except ValueError as exc:
        _bad_request(exc, "semantic", 422)
    detail["target"] = ShiftedStd(kind, Bidegree(*shift)).label()
    return detail


class ReplayRequest(BaseModel):
    case: str
    window: Optional[str] = None


@app.post("/replay")
def replay_endpoint(req: ReplayRequest) -> dict:
    try:
        case = find_case(req.case)
    except KeyError:
        _bad_request(ValueError(f"unknown case {req.case!r}"), "semantic", 422)
    window = _window_of(req.window)
    report = verify_case(case, window=window)
    if case.pattern == ():  # zero differential: middle is an honest extension
        resolved = resolve_extension(
            case.target, case.third, case.middle_has_fixed_point, window=window
        )
        extension = resolved if isinstance(resolved, str) else resolved.label()
    else:
        extension = "n/a (nonzero differential)"
    return {
        "case": {
            "name": case.name,
            "third": case.third.label(),
            "target": case.target.label() if case.target.terms else "0",
            "middle": case.middle.label(),
        },
        "report": report.to_obj(),
        "extension": extension,
    }


@app.get("/replay/cases")
def replay_cases() -> dict:
    return {"cases": case_names()}
