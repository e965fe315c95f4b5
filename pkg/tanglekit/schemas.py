from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Tuple

import sympy
from pydantic import BaseModel, Field

from .braidcore import BraidWord, serialize_braid
from .gtcore import GTReport
from .invariants import format_poly, in_t, poly_terms
from .isotopy import MoveInstance
from .knotaction import TwoBridgeForm, two_bridge
from .search import Distinct, Equal, Unknown, Verdict, link_invariants
from .tanglecalc import BraidBlock, Tangle, alpha, components, crossing_count, dirs_str, is_knot, serialize

ElementKind = Literal["A", "B", "C"]
VerdictKind = Literal["equal", "distinct", "unknown"]


class BraidModel(BaseModel):
    strands: int
    word: str = Field(..., description="Braid in the text grammar, e.g. 's1 s2^-1'")

    @classmethod
    def of(cls, b: BraidWord) -> "BraidModel":
        return cls(strands=b.strands, word=serialize_braid(b))


class ElementModel(BaseModel):
    kind: ElementKind
    left: Optional[str] = None
    arc: Optional[Literal["<", ">"]] = None
    right: Optional[str] = None
    braid: Optional[str] = None
    eps: Optional[str] = None


class TangleModel(BaseModel):
    source: str
    target: str
    text: str = Field(..., description="The tangle in the .tgl grammar")
    items: List[ElementModel]
    components: int
    crossings: int
    alpha: int

    @classmethod
    def of(cls, t: Tangle) -> "TangleModel":
        items = []
        for g in t.items:
            if isinstance(g, BraidBlock):
                items.append(ElementModel(kind="B", braid=serialize_braid(g.braid), eps=dirs_str(g.eps)))
            else:
                items.append(ElementModel(kind=g.kind, left=dirs_str(g.left), arc=g.arc.value, right=dirs_str(g.right)))
        return cls(
            source=dirs_str(t.source),
            target=dirs_str(t.target),
            text=serialize(t),
            items=items,
            components=components(t),
            crossings=crossing_count(t),
            alpha=alpha(t),
        )


class PolyModel(BaseModel):
    terms: List[Tuple[int, int]] = Field(..., description="(exponent of A, coefficient), highest exponent first")
    text: str
    in_t: Optional[str] = Field(None, description="Same polynomial in t = A^-4")

    @classmethod
    def of(cls, poly: Optional[sympy.Expr], t_variable: bool = False) -> Optional["PolyModel"]:
        if poly is None:
            return None
        return cls(terms=poly_terms(poly), text=format_poly(poly), in_t=str(in_t(poly)) if t_variable else None)


class InvariantsModel(BaseModel):
    components: int
    crossings: int
    writhe: int
    bracket: Optional[PolyModel] = None
    jones: Optional[PolyModel] = None

    @classmethod
    def of(cls, link: Tangle, t_variable: bool = False) -> "InvariantsModel":
        data = link_invariants(link)
        return cls(
            components=data["components"],
            crossings=crossing_count(link),
            writhe=data["writhe"],
            bracket=PolyModel.of(data["bracket"]),
            jones=PolyModel.of(data["jones"], t_variable),
        )


class MoveModel(BaseModel):
    move: str
    position: int
    params: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def of(cls, m: MoveInstance) -> "MoveModel":
        return cls(**m.to_json())


class VerdictModel(BaseModel):
    verdict: VerdictKind
    trace: Optional[List[MoveModel]] = None
    invariant: Optional[str] = None
    left: Optional[str] = None
    right: Optional[str] = None
    explored: Optional[int] = None
    budget: Optional[int] = None

    @classmethod
    def of(cls, v: Verdict) -> "VerdictModel":
        if isinstance(v, Equal):
            return cls(verdict="equal", trace=[MoveModel.of(m) for m in v.trace])
        if isinstance(v, Distinct):
            return cls(verdict="distinct", invariant=v.invariant, left=v.left, right=v.right)
        assert isinstance(v, Unknown)
        return cls(verdict="unknown", explored=v.explored, budget=v.budget)


class SimplifyModel(BaseModel):
    tangle: TangleModel
    trace: List[MoveModel]


class FractionModel(BaseModel):
    gt: str
    numerator: TangleModel
    denominator: TangleModel

    @classmethod
    def of(cls, gt: str, num: Tangle, den: Tangle) -> "FractionModel":
        return cls(gt=gt, numerator=TangleModel.of(num), denominator=TangleModel.of(den))


class GTReportModel(BaseModel):
    gt: str
    two_cycle: bool
    hexagon: bool
    pentagon: bool
    is_gt: bool
    two_cycle_witness: str
    hexagon_witness: str
    pentagon_witness: Tuple[str, str]

    @classmethod
    def of(cls, gt: str, report: GTReport) -> "GTReportModel":
        return cls(
            gt=gt,
            two_cycle=report.two_cycle,
            hexagon=report.hexagon,
            pentagon=report.pentagon,
            is_gt=report.is_gt,
            two_cycle_witness=str(report.two_cycle_witness),
            hexagon_witness=str(report.hexagon_witness),
            pentagon_witness=report.pentagon_witness,
        )


class TwoBridgeModel(BaseModel):
    b4: BraidModel
    outer: Literal["<", ">"]
    inner: Literal["<", ">"]
    tangle: TangleModel
    is_knot: bool

    @classmethod
    def of(cls, form: TwoBridgeForm) -> "TwoBridgeModel":
        t = two_bridge(form)
        return cls(
            b4=BraidModel.of(form.b4),
            outer=form.outer.value,
            inner=form.inner.value,
            tangle=TangleModel.of(t),
            is_knot=is_knot(t),
        )


class RenderModel(BaseModel):
    text: str


class ErrorModel(BaseModel):
    error: str
    kind: str
    line: Optional[int] = None
    column: Optional[int] = None


# ---------------------------------------------------------------------------
# requests


class TangleRequest(BaseModel):
    tangle: str = Field(..., description="Tangle in the .tgl grammar")
    framed: bool = Field(False, description="Use the framed move set (FT6 instead of T6)")


class InvariantsRequest(BaseModel):
    tangle: str
    t_variable: bool = Field(False, description="Also print polynomials in t = A^-4")


class PairRequest(BaseModel):
    first: str
    second: str
    framed: bool = False
    budget: Optional[int] = Field(None, ge=0, description="Search node budget; defaults to TANGLEKIT_BUDGET")


class ActRequest(BaseModel):
    gt: str = Field(..., description="GT pair, e.g. 'gt(lambda=-1; f=1)'")
    tangle: str
    framed: bool = False


class GTRequest(BaseModel):
    gt: str


class TwoBridgeRequest(BaseModel):
    b4: str = Field(..., description="Braid on 4 strands")
    plat: bool = Field(False, description="Read b4 as a classical 4-plat word")
