"""Pydantic report models shared by the service and the CLI.

All rationals are serialized exactly as strings ``"p/q"`` (or ``"p"`` when the
denominator is 1); places as ``{"type": "finite", "min_poly": "..."}`` or
``{"type": "infinity"}``.  Ordering is deterministic: exponents ascending and
places in the canonical order (rational points ascending, algebraic places by
minimal polynomial, infinity last).
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from .analysis import ExponentReport
from .genus import GenusReport
from .operators import LinearODE
from .places import Place
from .qnum import qstr
from .sympow import InvariantBasis, RuledSurfaceDescriptor

SCHEMA = "fuchskit-report/1"


class PlaceModel(BaseModel):
    type: str  # "finite" | "infinity"
    min_poly: str | None = None

    @staticmethod
    def from_place(place: Place) -> "PlaceModel":
        if place.is_infinity:
            return PlaceModel(type="infinity")
        return PlaceModel(type="finite", min_poly=str(place.min_poly))


class ExponentReportModel(BaseModel):
    place: PlaceModel
    exponents: list[str]
    delta: str
    ram_index: int
    apparent: bool

    @staticmethod
    def from_report(rep: ExponentReport) -> "ExponentReportModel":
        return ExponentReportModel(
            place=PlaceModel.from_place(rep.place),
            exponents=[qstr(e) for e in sorted(rep.exponents)],
            delta=qstr(rep.delta),
            ram_index=rep.ram_index,
            apparent=rep.apparent,
        )


class FuchsRelationModel(BaseModel):
    lhs: str
    rhs: str
    ok: bool


class GenusModel(BaseModel):
    hurwitz_sum: str
    group_order: int
    base_genus: int
    genus: str

    @staticmethod
    def from_report(rep: GenusReport, group_order: int, base_genus: int) -> "GenusModel":
        return GenusModel(
            hurwitz_sum=qstr(rep.hurwitz_sum),
            group_order=group_order,
            base_genus=base_genus,
            genus=qstr(rep.genus),
        )


class BasisModel(BaseModel):
    dimension: int
    elements: list[str]

    @staticmethod
    def from_basis(basis: InvariantBasis) -> "BasisModel":
        return BasisModel(
            dimension=len(basis),
            elements=[str(f) for f in basis.basis],
        )


class RuledSurfaceModel(BaseModel):
    schema_: str = Field(default=SCHEMA, alias="schema")
    group: str
    degree: int
    deg_l: int
    deg_lprime: int
    twist: int
    generators_l: list[str]
    generators_lprime: list[str]

    model_config = {"populate_by_name": True}

    @staticmethod
    def from_descriptor(group: str, degree: int, desc: RuledSurfaceDescriptor) -> "RuledSurfaceModel":
        return RuledSurfaceModel(
            group=group,
            degree=degree,
            deg_l=desc.deg_l,
            deg_lprime=desc.deg_lprime,
            twist=desc.twist,
            generators_l=[str(g) for g in desc.generators_l],
            generators_lprime=[str(g) for g in desc.generators_lprime],
        )


class OperatorModel(BaseModel):
    order: int
    coefficients: list[str]  # a_0 first; leading coefficient is an implicit 1

    @staticmethod
    def from_operator(L: LinearODE) -> "OperatorModel":
        return OperatorModel(order=L.order, coefficients=[str(c) for c in L.coefficients])


class AnalysisReportModel(BaseModel):
    schema_: str = Field(default=SCHEMA, alias="schema")
    operator: OperatorModel
    fuchsian: bool
    places: list[ExponentReportModel]
    delta: str
    fuchs_relation: FuchsRelationModel | None = None
    genus: GenusModel | None = None
    ruled_surface: RuledSurfaceModel | None = None

    model_config = {"populate_by_name": True}
