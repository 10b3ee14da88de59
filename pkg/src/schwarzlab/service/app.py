"""HTTP surface: one POST route per command, plus a health probe."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..errors import SchwarzlabError
from ..funcspec import DomainError, ParseError
from . import handlers
from .models import (
    BoundRequest,
    BoundResponse,
    ExtremalRequest,
    ExtremalResponse,
    NormRequest,
    NormResponse,
    SweepRequest,
    SweepResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="schwarzlab",
    version=__version__,
    description="Pre-Schwarzian/Schwarzian norms and sharp-bound checks "
                "for Robertson-class maps of the unit disk.",
)


def _guarded(fn, req):
    try:
        return fn(req)
    except ParseError as exc:
        raise HTTPException(status_code=422, detail=f"parse error: {exc}") from exc
    except DomainError as exc:
        raise HTTPException(status_code=422, detail=f"domain error: {exc}") from exc
    except SchwarzlabError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/bound", response_model=BoundResponse)
def bound(req: BoundRequest) -> BoundResponse:
    return _guarded(handlers.run_bound, req)


@app.post("/norm", response_model=NormResponse)
def norm(req: NormRequest) -> NormResponse:
    return _guarded(handlers.run_norm, req)


@app.post("/extremal", response_model=ExtremalResponse)
def extremal(req: ExtremalRequest) -> ExtremalResponse:
    return _guarded(handlers.run_extremal, req)


@app.post("/sweep", response_model=SweepResponse)
def sweep(req: SweepRequest) -> SweepResponse:
    return _guarded(handlers.run_sweep, req)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    return _guarded(handlers.run_verify, req)
