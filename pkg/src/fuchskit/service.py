"""FastAPI service wrapping the core package.

The request handlers delegate to the plain functions below, which build the
pydantic report models; the CLI reuses those functions in-process so both
front ends share one code path.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, model_validator

from .analysis import delta_total, exponent_reports, fuchs_relation_check, is_fuchsian
from .catalog import catalog_entry, catalog_keys
from .errors import FuchskitError
from .genus import genus_report
from .operators import LinearODE
from .parsing import parse_rational_function
from .qnum import qstr
from .reports import (
    SCHEMA,
    AnalysisReportModel,
    BasisModel,
    ExponentReportModel,
    FuchsRelationModel,
    GenusModel,
    OperatorModel,
    RuledSurfaceModel,
)
from .sympow import default_degree, rational_solutions, ruled_surface, symmetric_power
from .transform import projective_normalize, projectively_equivalent, pullback


class OperatorInput(BaseModel):
    """An operator given either by catalog key or by coefficient expressions.

    ``coefficients`` lists a_0 first; the leading coefficient defaults to 1.
    """

    catalog: str | None = None
    coefficients: list[str] | None = None
    leading: str | None = None

    @model_validator(mode="after")
    def _exactly_one_source(self):
        if (self.catalog is None) == (self.coefficients is None):
            raise ValueError("give exactly one of 'catalog' or 'coefficients'")
        return self

    def resolve(self) -> LinearODE:
        if self.catalog is not None:
            return catalog_entry(self.catalog).operator
        coeffs = [parse_rational_function(s) for s in self.coefficients]
        leading = parse_rational_function(self.leading) if self.leading else None
        return LinearODE.from_coefficients(coeffs, leading=leading)


class AnalyzeRequest(BaseModel):
    operator: OperatorInput
    group_order: int | None = None
    base_genus: int = 0


class GenusRequest(BaseModel):
    operator: OperatorInput
    group_order: int
    base_genus: int = 0


class PullbackRequest(BaseModel):
    operator: OperatorInput
    map: str


class NormalizeRequest(BaseModel):
    operator: OperatorInput


class EquivRequest(BaseModel):
    operator: OperatorInput
    other: OperatorInput
    map: str | None = None  # pull ``other`` back through this map first


class SympowRequest(BaseModel):
    operator: OperatorInput
    degree: int


class RatsolRequest(BaseModel):
    operator: OperatorInput
    degree: int | None = None


class RuledRequest(BaseModel):
    group: str
    degree: int | None = None


class EquivResponse(BaseModel):
    schema_: str = Field(default=SCHEMA, alias="schema")
    equivalent: bool

    model_config = {"populate_by_name": True}


class CatalogEntryModel(BaseModel):
    key: str
    description: str
    operator: OperatorModel
    projective_group_order: int | None = None
    pullback_of: str | None = None
    pullback_map: str | None = None


def analyze(L: LinearODE, group_order: int | None = None, base_genus: int = 0) -> AnalysisReportModel:
    reports = exponent_reports(L)
    fuchsian = is_fuchsian(L)
    fuchs = None
    genus = None
    if fuchsian:
        lhs, rhs, ok = fuchs_relation_check(L)
        fuchs = FuchsRelationModel(lhs=qstr(lhs), rhs=qstr(rhs), ok=ok)
        if group_order is not None:
            genus = GenusModel.from_report(
                genus_report(L, group_order, base_genus), group_order, base_genus
            )
    return AnalysisReportModel(
        operator=OperatorModel.from_operator(L),
        fuchsian=fuchsian,
        places=[ExponentReportModel.from_report(r) for r in reports],
        delta=qstr(delta_total(L)),
        fuchs_relation=fuchs,
        genus=genus,
    )


def genus(L: LinearODE, group_order: int, base_genus: int = 0) -> GenusModel:
    return GenusModel.from_report(
        genus_report(L, group_order, base_genus), group_order, base_genus
    )


def pullback_operator(L: LinearODE, map_expr: str) -> OperatorModel:
    return OperatorModel.from_operator(pullback(L, parse_rational_function(map_expr)))


def normalize_operator(L: LinearODE) -> OperatorModel:
    return OperatorModel.from_operator(projective_normalize(L))


def equivalent(L1: LinearODE, L2: LinearODE, map_expr: str | None = None) -> EquivResponse:
    if map_expr is not None:
        L2 = pullback(L2, parse_rational_function(map_expr))
    return EquivResponse(equivalent=projectively_equivalent(L1, L2))


def sympow_operator(L: LinearODE, degree: int) -> OperatorModel:
    return OperatorModel.from_operator(symmetric_power(L, degree))


def ratsol_basis(L: LinearODE, degree: int | None = None) -> BasisModel:
    return BasisModel.from_basis(rational_solutions(L, degree))


def ruled(group: str, degree: int | None = None) -> RuledSurfaceModel:
    d = default_degree(group) if degree is None else degree
    return RuledSurfaceModel.from_descriptor(group, d, ruled_surface(group, degree))


def catalog_model(key: str) -> CatalogEntryModel:
    entry = catalog_entry(key)
    return CatalogEntryModel(
        key=entry.key,
        description=entry.description,
        operator=OperatorModel.from_operator(entry.operator),
        projective_group_order=entry.projective_group_order,
        pullback_of=entry.pullback_of,
        pullback_map=str(entry.pullback_map) if entry.pullback_map else None,
    )


app = FastAPI(title="fuchskit", version="0.1.0")


def _domain(func, *args, **kwargs):
    try:
        return func(*args, **kwargs)
    except FuchskitError as exc:
        raise HTTPException(
            status_code=422,
            detail={"error": type(exc).__name__, "message": str(exc)},
        ) from exc


@app.post("/analyze", response_model=AnalysisReportModel, response_model_by_alias=True)
def analyze_endpoint(req: AnalyzeRequest):
    L = _domain(req.operator.resolve)
    return _domain(analyze, L, req.group_order, req.base_genus)


@app.post("/genus", response_model=GenusModel)
def genus_endpoint(req: GenusRequest):
    L = _domain(req.operator.resolve)
    return _domain(genus, L, req.group_order, req.base_genus)


@app.post("/pullback", response_model=OperatorModel)
def pullback_endpoint(req: PullbackRequest):
    L = _domain(req.operator.resolve)
    return _domain(pullback_operator, L, req.map)


@app.post("/normalize", response_model=OperatorModel)
def normalize_endpoint(req: NormalizeRequest):
    L = _domain(req.operator.resolve)
    return _domain(normalize_operator, L)


@app.post("/equiv", response_model=EquivResponse, response_model_by_alias=True)
def equiv_endpoint(req: EquivRequest):
    L1 = _domain(req.operator.resolve)
    L2 = _domain(req.other.resolve)
    return _domain(equivalent, L1, L2, req.map)


@app.post("/sympow", response_model=OperatorModel)
def sympow_endpoint(req: SympowRequest):
    L = _domain(req.operator.resolve)
    return _domain(sympow_operator, L, req.degree)


@app.post("/ratsol", response_model=BasisModel)
def ratsol_endpoint(req: RatsolRequest):
    L = _domain(req.operator.resolve)
    return _domain(ratsol_basis, L, req.degree)


@app.post("/ruled", response_model=RuledSurfaceModel, response_model_by_alias=True)
def ruled_endpoint(req: RuledRequest):
    return _domain(ruled, req.group, req.degree)


@app.get("/catalog", response_model=list[str])
def catalog_keys_endpoint():
    return catalog_keys()


@app.get("/catalog/{key}", response_model=CatalogEntryModel)
def catalog_entry_endpoint(key: str):
    return _domain(catalog_model, key)
