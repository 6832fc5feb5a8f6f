# api.py
import logging
from typing import Any, Literal, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field, ValidationError, model_validator

from pascaldet.config import load_settings
from pascaldet.determinants import det_sequence
from pascaldet.errors import NoRecursionFound, PascalDetError
from pascaldet.oracles import cross_check, verify_identity
from pascaldet.recurrence import detect
from pascaldet.specfile import SpecLoader
from pascaldet.trees import enumerate_even_tree, explore_sympletric, sympletric_extensions

logger = logging.getLogger(__name__)

settings = load_settings()

# FastAPI App
app = FastAPI(title="pascaldet")

app.add_middleware(
    CORSMiddleware,
    allow_origins=list(settings.cors_origins),
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


class DetSeqIn(BaseModel):
    spec: dict[str, Any]
    n_max: int = Field(..., ge=1)
    engine: Literal["elimination", "condensation"] = "elimination"


class DetectIn(BaseModel):
    values: Optional[list[str]] = None
    spec: Optional[dict[str, Any]] = None
    n_max: Optional[int] = Field(default=None, ge=1)
    step: int = Field(default=1, ge=1)
    d_max: int = Field(default=4, ge=1)
    min_verify: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def one_source(self):
        if (self.values is None) == (self.spec is None):
            raise ValueError("give exactly one of values or spec")
        if self.spec is not None and self.n_max is None:
            raise ValueError("spec needs n_max")
        return self


class VerifyIn(BaseModel):
    identity: Optional[str] = None
    oracle: Optional[str] = None
    params: dict[str, Any] = Field(default_factory=dict)
    n_min: int = Field(default=1, ge=1)
    n_max: int = Field(..., ge=1)

    @model_validator(mode="after")
    def one_target(self):
        if (self.identity is None) == (self.oracle is None):
            raise ValueError("give exactly one of identity or oracle")
        if self.n_max < self.n_min:
            raise ValueError("n_max must be at least n_min")
        return self


class SympletricIn(BaseModel):
    prefix: Optional[list[int]] = None
    explore: Optional[int] = Field(default=None, ge=3)

    @model_validator(mode="after")
    def one_mode(self):
        if (self.prefix is None) == (self.explore is None):
            raise ValueError("give exactly one of prefix or explore")
        return self


def _check_order(n: int):
    if n > settings.max_order:
        raise HTTPException(
            status_code=400,
            detail=f"Requested order {n} exceeds the maximum of {settings.max_order}."
        )


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/")
def read_root():
    return {"message": "API is running"}


@app.post("/det-seq")
def det_seq(body: DetSeqIn):
    """Determinants of the requested family for n = 1..n_max."""
    _check_order(body.n_max)
    logger.info("det-seq n_max=%d engine=%s", body.n_max, body.engine)
    try:
        spec = SpecLoader.parse_family(body.spec)
        sequence = det_sequence(spec, body.n_max, jobs=settings.jobs, engine=body.engine)
    except (PascalDetError, ValidationError) as exc:
        raise _bad_request(exc)
    return sequence.model_dump(mode="json")


@app.post("/detect")
def detect_recursion(body: DetectIn):
    """Minimal recursion of the given values or of a spec's determinants.

    No recursion within d_max is an open instance, not an error.
    """
    logger.info("detect step=%d d_max=%d", body.step, body.d_max)
    try:
        if body.values is not None:
            values = body.values
        else:
            _check_order(body.n_max)
            spec = SpecLoader.parse_family(body.spec)
            values = det_sequence(spec, body.n_max, jobs=settings.jobs).dets
        report = detect(values, body.step, body.d_max, body.min_verify)
    except NoRecursionFound as exc:
        return {"status": "open", "detail": str(exc)}
    except (PascalDetError, ValidationError, ValueError, TypeError) as exc:
        raise _bad_request(exc)
    payload = report.model_dump(mode="json")
    payload["char_poly"] = str(report.char_poly())
    return {"status": "found", "report": payload}


@app.post("/verify")
def verify(body: VerifyIn):
    """Check an identity or a closed form over n_min..n_max."""
    _check_order(body.n_max)
    logger.info("verify %s over %d..%d", body.identity or body.oracle, body.n_min, body.n_max)
    try:
        if body.identity is not None:
            report = verify_identity(body.identity, body.params, (body.n_min, body.n_max))
        else:
            report = cross_check(body.oracle, body.params, (body.n_min, body.n_max))
    except (PascalDetError, ValidationError) as exc:
        raise _bad_request(exc)
    return report.model_dump(mode="json")


@app.get("/tree")
def tree(depth: int = 6, root_sign: int = 1):
    """Even symplectic tree paths with ``depth`` columns."""
    if depth > 8:
        raise HTTPException(status_code=400, detail="Tree depth is limited to 8.")
    logger.info("tree depth=%d root_sign=%d", depth, root_sign)
    try:
        paths = enumerate_even_tree(depth, root_sign)
    except PascalDetError as exc:
        raise _bad_request(exc)
    return {"depth": depth, "root_sign": root_sign, "rows": [p.model_dump() for p in paths]}


@app.post("/sympletric")
def sympletric(body: SympletricIn):
    logger.info("sympletric prefix=%s explore=%s", body.prefix, body.explore)
    try:
        if body.prefix is not None:
            return {"prefix": body.prefix, "extensions": sympletric_extensions(body.prefix)}
        _check_order(body.explore)
        leaves = explore_sympletric(body.explore)
    except PascalDetError as exc:
        raise _bad_request(exc)
    return {"length": body.explore, "rows": [leaf.model_dump() for leaf in leaves]}
