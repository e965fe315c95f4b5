from __future__ import annotations

import logging
from contextlib import contextmanager
from typing import Iterator

from fastapi import FastAPI, HTTPException

from . import __version__
from .braidcore import parse_braid
from .errors import TanglekitError
from .gtcore import parse_gt, serialize_gt, verify
from .isotopy import connected_sum, simplify_traced
from .knotaction import TwoBridgeForm, act_knot, act_tangle, lambda_power, mirror_tangle
from .render import render
from .schemas import (
    ActRequest,
    FractionModel,
    GTReportModel,
    GTRequest,
    InvariantsModel,
    InvariantsRequest,
    MoveModel,
    PairRequest,
    RenderModel,
    SimplifyModel,
    TangleModel,
    TangleRequest,
    TwoBridgeModel,
    TwoBridgeRequest,
    VerdictModel,
)
from .search import equivalent
from .tanglecalc import alpha, is_knot, parse

logger = logging.getLogger(__name__)

app = FastAPI(title="Tanglekit API", version=__version__)


@contextmanager
def domain_errors() -> Iterator[None]:
    try:
        yield
    except TanglekitError as e:
        logger.info("rejected request: %s", e)
        raise HTTPException(status_code=400, detail=str(e))


@app.get("/")
def root():
    return {"message": "Tanglekit API", "docs": "/docs"}


@app.get("/healthz")
def healthz():
    return {"status": "ok"}


@app.post("/parse", response_model=TangleModel)
def parse_tangle(req: TangleRequest) -> TangleModel:
    with domain_errors():
        return TangleModel.of(parse(req.tangle))


@app.post("/simplify", response_model=SimplifyModel)
def simplify_tangle(req: TangleRequest) -> SimplifyModel:
    with domain_errors():
        reduced, trace = simplify_traced(parse(req.tangle), req.framed)
        return SimplifyModel(tangle=TangleModel.of(reduced), trace=[MoveModel.of(m) for m in trace])


@app.post("/invariants", response_model=InvariantsModel)
def invariants_of(req: InvariantsRequest) -> InvariantsModel:
    with domain_errors():
        return InvariantsModel.of(parse(req.tangle), req.t_variable)


@app.post("/sum", response_model=TangleModel)
def connected_sum_of(req: PairRequest) -> TangleModel:
    with domain_errors():
        return TangleModel.of(connected_sum(parse(req.first), parse(req.second), req.framed))


@app.post("/mirror", response_model=TangleModel)
def mirror_of(req: TangleRequest) -> TangleModel:
    with domain_errors():
        return TangleModel.of(mirror_tangle(parse(req.tangle)))


@app.post("/act", response_model=FractionModel)
def act(req: ActRequest) -> FractionModel:
    with domain_errors():
        p = parse_gt(req.gt)
        t = parse(req.tangle)
        if is_knot(t):
            fraction = act_knot(p, t, req.framed)
            return FractionModel.of(serialize_gt(p), fraction.num, fraction.den)
        return FractionModel.of(serialize_gt(p), act_tangle(p, t), lambda_power(p.f, alpha(t), req.framed))


@app.post("/verify-gt", response_model=GTReportModel)
def verify_gt(req: GTRequest) -> GTReportModel:
    with domain_errors():
        p = parse_gt(req.gt)
        return GTReportModel.of(serialize_gt(p), verify(p))


@app.post("/equiv", response_model=VerdictModel)
def equiv(req: PairRequest) -> VerdictModel:
    with domain_errors():
        verdict = equivalent(parse(req.first), parse(req.second), req.framed, req.budget)
        return VerdictModel.of(verdict)


@app.post("/two-bridge", response_model=TwoBridgeModel)
def two_bridge_of(req: TwoBridgeRequest) -> TwoBridgeModel:
    with domain_errors():
        word = parse_braid(req.b4, 4)
        form = TwoBridgeForm.from_plat(word) if req.plat else TwoBridgeForm.from_braid(word)
        return TwoBridgeModel.of(form)


@app.post("/render", response_model=RenderModel)
def render_tangle(req: TangleRequest) -> RenderModel:
    with domain_errors():
        return RenderModel(text=render(parse(req.tangle)))
