"""Model documents: the JSON wire format shared by files, CLI and API.

Three document kinds are understood, discriminated by their "kind" field:

* ``grey_program`` — sense, price, consumption, resources, relations
* ``gmop``         — objectives, constraints, variable_count, optional
                     embedded sample_points
* ``portfolio``    — total_funds, bank_rate, assets table

Grey numbers always appear as two-element ``[lower, upper]`` arrays.
Structural problems raise :class:`ParseError` with a field path; documents
that parse but break a numeric invariant (say an inverted interval) raise
:class:`InvariantViolation` with the same diagnostics.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

from .errors import InvariantViolation, ParseError
from .grey import GreyNumber
from .multiobjective import GmopModel
from .portfolio import Asset, PortfolioSpec
from .positioned import GreyLinearProgram

KINDS = ("grey_program", "gmop", "portfolio")

ParsedModel = GreyLinearProgram | GmopModel | PortfolioSpec


def sig12(x: float) -> float:
    """Clamp a float to 12 significant digits for serialization."""
    return float(f"{float(x):.12g}")


def round_floats(obj: Any) -> Any:
    """Recursively apply the 12-significant-digit policy to a payload."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return sig12(obj)
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    return obj


def canonical_text(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), allow_nan=False)


def document_handle(doc: dict) -> str:
    """Content-addressed handle: identical documents share a handle."""
    return hashlib.sha256(canonical_text(doc).encode()).hexdigest()[:16]


def parse_text(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("document root must be an object")
    return doc


def _require(doc: dict, field: str, path: str) -> Any:
    if field not in doc:
        raise ParseError(f"{path}: missing field {field!r}")
    return doc[field]


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{path}: expected a number, got {value!r}")
    return float(value)


def _grey(value: Any, path: str) -> GreyNumber:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ParseError(f"{path}: grey numbers are [lower, upper] pairs, got {value!r}")
    lo = _number(value[0], f"{path}[0]")
    up = _number(value[1], f"{path}[1]")
    try:
        return GreyNumber(lo, up)
    except InvariantViolation as exc:
        raise InvariantViolation(f"{path}: {exc}") from exc


def _grey_list(value: Any, path: str) -> list[GreyNumber]:
    if not isinstance(value, list):
        raise ParseError(f"{path}: expected a list of grey numbers")
    return [_grey(v, f"{path}[{i}]") for i, v in enumerate(value)]


def _relation(value: Any, path: str) -> str:
    if value not in ("<=", ">=", "="):
        raise ParseError(f"{path}: relation must be one of <=, >=, =, got {value!r}")
    return value


def _sense(value: Any, path: str) -> str:
    if value not in ("maximize", "minimize"):
        raise ParseError(f"{path}: sense must be maximize or minimize, got {value!r}")
    return value


def parse_grey_program(doc: dict) -> GreyLinearProgram:
    sense = _sense(_require(doc, "sense", "$"), "$.sense")
    price = _grey_list(_require(doc, "price", "$"), "$.price")
    raw_rows = _require(doc, "consumption", "$")
    if not isinstance(raw_rows, list):
        raise ParseError("$.consumption: expected a list of rows")
    consumption = [_grey_list(row, f"$.consumption[{i}]") for i, row in enumerate(raw_rows)]
    resources = _grey_list(_require(doc, "resources", "$"), "$.resources")
    raw_rels = _require(doc, "relations", "$")
    if not isinstance(raw_rels, list):
        raise ParseError("$.relations: expected a list")
    relations = [_relation(r, f"$.relations[{i}]") for i, r in enumerate(raw_rels)]
    try:
        return GreyLinearProgram(
            sense=sense,
            price=tuple(price),
            consumption=tuple(tuple(row) for row in consumption),
            resources=tuple(resources),
            relations=tuple(relations),  # type: ignore[arg-type]
        )
    except InvariantViolation as exc:
        raise InvariantViolation(f"$: {exc}") from exc


def parse_gmop(doc: dict) -> GmopModel:
    count = _require(doc, "variable_count", "$")
    if not isinstance(count, int) or count < 1:
        raise ParseError(f"$.variable_count: expected a positive integer, got {count!r}")
    raw_objs = _require(doc, "objectives", "$")
    if not isinstance(raw_objs, list) or not raw_objs:
        raise ParseError("$.objectives: expected a non-empty list")
    objectives = []
    for i, obj in enumerate(raw_objs):
        path = f"$.objectives[{i}]"
        if not isinstance(obj, dict):
            raise ParseError(f"{path}: expected an object")
        orientation = _require(obj, "orientation", path)
        if orientation not in ("benefit", "cost"):
            raise ParseError(f"{path}.orientation: must be benefit or cost, got {orientation!r}")
        objectives.append(
            (
                _sense(_require(obj, "sense", path), f"{path}.sense"),
                orientation,
                _grey_list(_require(obj, "coefficients", path), f"{path}.coefficients"),
            )
        )
    raw_cons = doc.get("constraints", [])
    if not isinstance(raw_cons, list):
        raise ParseError("$.constraints: expected a list")
    constraints = []
    for i, con in enumerate(raw_cons):
        path = f"$.constraints[{i}]"
        if not isinstance(con, dict):
            raise ParseError(f"{path}: expected an object")
        constraints.append(
            (
                _grey_list(_require(con, "coefficients", path), f"{path}.coefficients"),
                _relation(_require(con, "relation", path), f"{path}.relation"),
                _grey(_require(con, "rhs", path), f"{path}.rhs"),
            )
        )
    if "sample_points" in doc:
        pts = doc["sample_points"]
        if not isinstance(pts, list):
            raise ParseError("$.sample_points: expected a list of points")
        for i, p in enumerate(pts):
            if not isinstance(p, list) or len(p) != count:
                raise ParseError(f"$.sample_points[{i}]: expected {count} coordinates")
            for j, v in enumerate(p):
                _number(v, f"$.sample_points[{i}][{j}]")
    try:
        return GmopModel.build(objectives, constraints, count)
    except InvariantViolation as exc:
        raise InvariantViolation(f"$: {exc}") from exc


def parse_portfolio(doc: dict) -> PortfolioSpec:
    funds = _number(_require(doc, "total_funds", "$"), "$.total_funds")
    bank = _grey(_require(doc, "bank_rate", "$"), "$.bank_rate")
    raw_assets = _require(doc, "assets", "$")
    if not isinstance(raw_assets, list):
        raise ParseError("$.assets: expected a list")
    assets = []
    for i, asset in enumerate(raw_assets):
        path = f"$.assets[{i}]"
        if not isinstance(asset, dict):
            raise ParseError(f"{path}: expected an object")
        assets.append(
            Asset(
                profit_rate=_grey(_require(asset, "profit_rate", path), f"{path}.profit_rate"),
                risk_rate=_grey(_require(asset, "risk_rate", path), f"{path}.risk_rate"),
                transaction_rate=_grey(
                    _require(asset, "transaction_rate", path), f"{path}.transaction_rate"
                ),
                purchase_floor=_grey(asset.get("purchase_floor", [0, 0]), f"{path}.purchase_floor"),
                name=str(asset.get("name", "")),
            )
        )
    try:
        return PortfolioSpec(total_funds=funds, bank_rate=bank, assets=tuple(assets))
    except InvariantViolation as exc:
        raise InvariantViolation(f"$: {exc}") from exc


def parse_document(doc: dict) -> ParsedModel:
    kind = _require(doc, "kind", "$")
    if kind == "grey_program":
        return parse_grey_program(doc)
    if kind == "gmop":
        return parse_gmop(doc)
    if kind == "portfolio":
        return parse_portfolio(doc)
    raise ParseError(f"$.kind: unknown document kind {kind!r}; expected one of {KINDS}")


def sample_points_of(doc: dict) -> list[list[float]] | None:
    pts = doc.get("sample_points")
    return [[float(v) for v in p] for p in pts] if pts else None
