"""HTTP surface over the core package.

Every endpoint is a POST taking a small JSON body and returning the
structured record plus (where it exists) the text rendering, so the CLI
can stay a thin client.  Domain errors map to 400 with a one-line detail;
body-shape errors are FastAPI's usual 422.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..extend import (
    build_root_extension,
    certify_minimal,
    nonuniqueness_experiment,
    render_certificate,
    render_experiment,
    render_extension,
    subgroup_short,
)
from ..ffield import (
    FieldError,
    SUBGROUP_KEYWORDS,
    make_field,
    parse_element,
    subgroup_by_keyword,
    subgroup_from_generators,
)
from ..hcore import (
    builtin,
    field_hyperfield,
    from_record,
    render_axiom_report,
    render_tables,
    to_record,
    verify_axioms,
)
from ..hpoly import parse_hpoly, root_names
from ..quotient import build_quotient, class_listing
from ..hcore import resolve_element
from . import schemas


def parse_modulus(text: str) -> tuple:
    try:
        return tuple(int(c.strip()) for c in text.split(","))
    except ValueError:
        raise FieldError(f"bad modulus {text!r}:"
                         " expected comma separated integers")


def resolve_subgroup(F, text: str):
    if text in SUBGROUP_KEYWORDS:
        return subgroup_by_keyword(F, text)
    gens = [parse_element(F, t.strip()) for t in text.split(",")]
    return subgroup_from_generators(F, gens)


def resolve_structure(spec: schemas.StructureSpec):
    """(hyperfield, quotient-or-None, display name) for a StructureSpec."""
    if spec.record is not None:
        return from_record(spec.record), None, "record"
    if spec.builtin is not None:
        return builtin(spec.builtin), None, spec.builtin
    mod = parse_modulus(spec.modulus) if spec.modulus else None
    F = make_field(spec.field, mod)
    if spec.subgroup is None:
        return field_hyperfield(F), None, f"F{F.order}"
    qs = build_quotient(F, resolve_subgroup(F, spec.subgroup))
    name = f"F{F.order}/{subgroup_short(qs.subgroup.label)}"
    return qs.hyperfield, qs, name


def quotient_spec(field: int, subgroup: str, modulus):
    mod = parse_modulus(modulus) if modulus else None
    F = make_field(field, mod)
    return build_quotient(F, resolve_subgroup(F, subgroup))


app = FastAPI(title="hyperlab", version=__version__)


@app.exception_handler(ValueError)
async def domain_error(request: Request, exc: ValueError):
    # FieldError, HcoreError, QuotientError, HpolyError, ExtendError ...
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/healthz")
def healthz():
    return {"status": "ok", "version": __version__}


@app.post("/api/build", response_model=schemas.BuildResponse,
          response_model_exclude_none=True)
def api_build(req: schemas.BuildRequest):
    H, qs, name = resolve_structure(req.spec)
    if req.format == "records":
        return schemas.BuildResponse(name=name, size=H.n, record=to_record(H))
    text = class_listing(qs) if qs is not None else render_tables(H)
    return schemas.BuildResponse(name=name, size=H.n, text=text)


@app.post("/api/verify", response_model=schemas.VerifyResponse)
def api_verify(req: schemas.VerifyRequest):
    H, _, name = resolve_structure(req.spec)
    report = verify_axioms(H)
    return schemas.VerifyResponse(
        name=name, passed=report.passed,
        text=render_axiom_report(report), record=report.to_record())


@app.post("/api/eval", response_model=schemas.EvalResponse)
def api_eval(req: schemas.EvalRequest):
    H, _, _ = resolve_structure(req.spec)
    p = parse_hpoly(H, req.poly)
    x = resolve_element(H, req.at)
    return schemas.EvalResponse(values=list(p.eval_names(x)))


@app.post("/api/roots", response_model=schemas.RootsResponse)
def api_roots(req: schemas.RootsRequest):
    H, _, _ = resolve_structure(req.spec)
    p = parse_hpoly(H, req.poly)
    return schemas.RootsResponse(roots=list(root_names(p)))


@app.post("/api/extend", response_model=schemas.ExtendResponse)
def api_extend(req: schemas.ExtendRequest):
    qs = quotient_spec(req.field, req.subgroup, req.modulus)
    ext = build_root_extension(qs, parse_hpoly(qs.hyperfield, req.poly))
    return schemas.ExtendResponse(text=render_extension(ext),
                                  record=ext.to_record())


@app.post("/api/minimal", response_model=schemas.MinimalResponse)
def api_minimal(req: schemas.MinimalRequest):
    qs = quotient_spec(req.field, req.subgroup, req.modulus)
    ext = build_root_extension(qs, parse_hpoly(qs.hyperfield, req.poly))
    cert = certify_minimal(ext, exhaustive=req.exhaustive)
    return schemas.MinimalResponse(minimal=cert.minimal,
                                   text=render_certificate(cert),
                                   record=cert.to_record())


@app.post("/api/reproduce-paper", response_model=schemas.ExperimentResponse)
def api_experiment():
    rep = nonuniqueness_experiment()
    return schemas.ExperimentResponse(verdict=rep.verdict,
                                      text=render_experiment(rep),
                                      record=rep.to_record())
