"""HTTP service wrapping the core package.

Every operation is a stateless request/response computation.  Malformed
inputs map to 400, precondition and certificate failures (non-smooth input to
the fast matcher, a failed collapse) map to 409.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import cat0 as c0
from ..complexes import barycentric_subdivide
from ..dot import cube_dot, hasse_dot
from ..errors import MorsematchError, NotCollapsible, NotSmooth
from ..fileio import certificate_to_dict, complex_from_dict, complex_to_dict, \
    gradient_report, pip_from_dict, smoothness_report_dict
from ..gradient import compute_gradient, trace_vpath
from ..hasse import build_hasse, modified_hasse_for_complex
from ..smoothness import check_smooth, smooth_fast_match
from ..verify import SuiteConfig, run_verification_suite
from . import schemas

app = FastAPI(title="morsematch", version="0.1.0",
              description="Greedy Morse matchings on simplicial and cubical complexes")


def _bad_request(exc: MorsematchError) -> HTTPException:
    return HTTPException(status_code=400,
                         detail={"error": type(exc).__name__, "message": str(exc)})


def _precondition_failed(exc: MorsematchError) -> HTTPException:
    return HTTPException(status_code=409,
                         detail={"error": type(exc).__name__, "message": str(exc)})


def _load_complex(payload: schemas.ComplexPayload):
    try:
        return complex_from_dict(payload.model_dump())
    except MorsematchError as exc:
        raise _bad_request(exc) from exc


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> dict:
    return {"status": "ok", "service": "morsematch"}


@app.post("/gradient", response_model=schemas.GradientResponse,
          response_model_exclude_none=True)
def gradient(request: schemas.GradientRequest) -> dict:
    delta = _load_complex(request.complex)
    if request.fast and request.modified:
        raise HTTPException(status_code=400, detail={
            "error": "InvalidInput",
            "message": "the fast matcher runs on the plain diagram only"})
    try:
        if request.fast:
            field_ = smooth_fast_match(delta)
        else:
            field_ = compute_gradient(delta, modified=request.modified)
    except NotSmooth as exc:
        raise _precondition_failed(exc) from exc
    except MorsematchError as exc:
        raise _bad_request(exc) from exc
    vpaths = None
    if request.include_vpaths:
        vpaths = [trace_vpath(field_, s) for s in delta.sorted_simplices()]
    report = gradient_report(field_, vpaths)
    if request.include_dot:
        diagram = modified_hasse_for_complex(delta) if request.modified else build_hasse(delta)
        report["dot"] = hasse_dot(diagram, matched=set(field_.pairs.items()),
                                  critical=set(field_.critical))
    return report


@app.post("/smoothcheck", response_model=schemas.SmoothcheckResponse)
def smoothcheck(request: schemas.SmoothcheckRequest) -> dict:
    delta = _load_complex(request.complex)
    return smoothness_report_dict(check_smooth(delta))


@app.post("/subdivide", response_model=schemas.SubdivideResponse)
def subdivide(request: schemas.SubdivideRequest) -> dict:
    delta = _load_complex(request.complex)
    return complex_to_dict(barycentric_subdivide(delta))


@app.post("/cat0", response_model=schemas.Cat0Response,
          response_model_exclude_none=True)
def cat0(request: schemas.Cat0Request) -> dict:
    try:
        pip = pip_from_dict(request.pip.model_dump())
        complex_ = c0.CubeComplex(pip)
        certificate = c0.collapse_cat0(pip, element_order=request.element_order)
    except NotCollapsible as exc:
        raise _precondition_failed(exc) from exc
    except MorsematchError as exc:
        raise _bad_request(exc) from exc
    report = certificate_to_dict(pip, certificate, complex_)
    if request.include_dot:
        diagram, _ = c0.modified_cube_diagram(complex_, request.element_order)
        report["dot"] = cube_dot(pip, complex_, diagram, certificate)
    return report


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(request: schemas.VerifyRequest) -> dict:
    cfg = SuiteConfig(seed=request.seed, trials=request.trials,
                      max_vertices=request.max_vertices, max_dim=request.max_dim,
                      checks=tuple(request.checks) if request.checks else None)
    try:
        report = run_verification_suite(cfg)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail={
            "error": "InvalidInput", "message": str(exc)}) from exc
    return report.to_dict()


@app.post("/export-dot", response_model=schemas.DotResponse)
def export_dot(request: schemas.ExportDotRequest) -> dict:
    if (request.complex is None) == (request.pip is None):
        raise HTTPException(status_code=400, detail={
            "error": "InvalidInput",
            "message": "provide exactly one of 'complex' or 'pip'"})
    if request.pip is not None:
        try:
            pip = pip_from_dict(request.pip.model_dump())
            complex_ = c0.CubeComplex(pip)
            certificate = c0.collapse_cat0(pip) if request.with_gradient else None
            diagram, _ = c0.modified_cube_diagram(complex_)
        except MorsematchError as exc:
            raise _bad_request(exc) from exc
        return {"dot": cube_dot(pip, complex_, diagram, certificate)}
    delta = _load_complex(request.complex)
    if request.variant not in ("plain", "modified"):
        raise HTTPException(status_code=400, detail={
            "error": "InvalidInput", "message": f"unknown variant {request.variant!r}"})
    modified = request.variant == "modified"
    diagram = modified_hasse_for_complex(delta) if modified else build_hasse(delta)
    matched, critical = set(), set()
    if request.with_gradient:
        field_ = compute_gradient(delta, modified=modified)
        matched, critical = set(field_.pairs.items()), set(field_.critical)
    return {"dot": hasse_dot(diagram, matched=matched, critical=critical)}
