"""Built-in catalog of named operators used throughout the package."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import UnknownKey
from .operators import LinearODE
from .parsing import parse_rational_function
from .ratfunc import RationalFunction
from .sympow import standard_equation


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    description: str
    operator: LinearODE
    projective_group_order: int | None = None
    pullback_of: str | None = None
    pullback_map: RationalFunction | None = None


def _load_raw() -> dict:
    text = resources.files("fuchskit.data").joinpath("catalog.json").read_text()
    return json.loads(text)


_RAW = _load_raw()


def catalog_keys() -> list[str]:
    return list(_RAW)


def catalog_entry(key: str) -> CatalogEntry:
    if key not in _RAW:
        raise UnknownKey(f"no catalog entry {key!r}; known keys: {', '.join(_RAW)}")
    raw = _RAW[key]
    if "standard" in raw:
        operator = standard_equation(raw["standard"])
    else:
        operator = LinearODE([parse_rational_function(s) for s in raw["coefficients"]])
    pmap = raw.get("pullback_map")
    return CatalogEntry(
        key=key,
        description=raw["description"],
        operator=operator,
        projective_group_order=raw.get("projective_group_order"),
        pullback_of=raw.get("pullback_of"),
        pullback_map=parse_rational_function(pmap) if pmap else None,
    )


def catalog_operator(key: str) -> LinearODE:
    return catalog_entry(key).operator
