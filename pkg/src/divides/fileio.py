"""Divide file format: a single JSON object, map mode or polyline mode.

Map mode keys: name, mode="map", double_points, terminals, edges, branches,
sign_seed {edge, side, sign}.  Polyline mode keys: name, mode="polyline",
branches [{points, closed}], disc_radius, sign_seed {point, sign}.
Unknown keys are rejected at every level.  Parsing is total: it returns
either a valid Divide or a list of diagnostics, never an exception.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .core import Divide, DivideError, EdgeDef, SignSeed, validate_divide

_SIGNS = {"+": 1, "-": -1}
_SIGN_TEXT = {1: "+", -1: "-"}

_MAP_KEYS = {"name", "mode", "double_points", "terminals", "edges", "branches", "sign_seed"}
_POLY_KEYS = {"name", "mode", "branches", "disc_radius", "sign_seed"}


def _reject_unknown(obj: dict, allowed: set[str], where: str, diags: list[str]) -> None:
    for key in obj:
        if key not in allowed:
            diags.append(f"unknown key '{key}' in {where}")


def _parse_map(obj: dict, diags: list[str]) -> Optional[Divide]:
    _reject_unknown(obj, _MAP_KEYS, "map divide", diags)
    for key in sorted(_MAP_KEYS):
        if key not in obj:
            diags.append(f"missing key '{key}'")
    if diags:
        return None
    try:
        edges = []
        for e in obj["edges"]:
            _reject_unknown(e, {"id", "ends"}, f"edge {e.get('id')!r}", diags)
            ends = tuple((str(v), int(s)) for v, s in e["ends"])
            if len(ends) != 2:
                diags.append(f"edge {e.get('id')!r} must have exactly two ends")
                continue
            edges.append(EdgeDef(id=str(e["id"]), ends=(ends[0], ends[1])))
        seed_obj = obj["sign_seed"]
        _reject_unknown(seed_obj, {"edge", "side", "sign"}, "sign_seed", diags)
        sign_text = seed_obj.get("sign")
        if sign_text not in _SIGNS:
            diags.append("malformed sign seed: sign must be '+' or '-'")
            return None
        seed = SignSeed(
            edge=str(seed_obj["edge"]),
            side=str(seed_obj["side"]),
            sign=_SIGNS[sign_text],
        )
        divide = Divide(
            name=str(obj["name"]),
            double_points=tuple(str(v) for v in obj["double_points"]),
            terminals=tuple(str(v) for v in obj["terminals"]),
            edges=tuple(edges),
            branches=tuple(tuple(str(e) for e in b) for b in obj["branches"]),
            sign_seed=seed,
        )
    except (KeyError, TypeError, ValueError) as exc:
        diags.append(f"malformed divide object: {exc}")
        return None
    if diags:
        return None
    diags.extend(validate_divide(divide))
    return None if diags else divide


def _parse_polyline(obj: dict, diags: list[str]) -> Optional[Divide]:
    from .geometry import ingest_polyline  # local import to keep core light

    _reject_unknown(obj, _POLY_KEYS, "polyline divide", diags)
    for key in sorted(_POLY_KEYS):
        if key not in obj:
            diags.append(f"missing key '{key}'")
    if diags:
        return None
    try:
        branches = []
        for b in obj["branches"]:
            _reject_unknown(b, {"points", "closed"}, "polyline branch", diags)
            pts = [(int(x), int(y)) for x, y in b["points"]]
            branches.append((pts, bool(b["closed"])))
        seed_obj = obj["sign_seed"]
        _reject_unknown(seed_obj, {"point", "sign"}, "sign_seed", diags)
        if seed_obj.get("sign") not in _SIGNS:
            diags.append("malformed sign seed: sign must be '+' or '-'")
            return None
        seed_point = (int(seed_obj["point"][0]), int(seed_obj["point"][1]))
        radius = int(obj["disc_radius"])
    except (KeyError, TypeError, ValueError) as exc:
        diags.append(f"malformed divide object: {exc}")
        return None
    if diags:
        return None
    try:
        return ingest_polyline(
            branches,
            disc_radius=radius,
            seed_point=seed_point,
            seed_sign=_SIGNS[seed_obj["sign"]],
            name=str(obj["name"]),
        )
    except DivideError as exc:
        diags.extend(exc.diagnostics)
        return None


def parse_divide(text: str) -> tuple[Optional[Divide], list[str]]:
    """Parse divide file text; returns (divide, []) or (None, diagnostics)."""
    diags: list[str] = []
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        return None, [f"not valid JSON: {exc}"]
    if not isinstance(obj, dict):
        return None, ["divide file must contain a single JSON object"]
    mode = obj.get("mode")
    if mode == "map":
        divide = _parse_map(obj, diags)
    elif mode == "polyline":
        divide = _parse_polyline(obj, diags)
    else:
        return None, [f"mode must be 'map' or 'polyline', got {mode!r}"]
    return divide, diags


def divide_to_text(divide: Divide) -> str:
    """Canonical map-mode file text; byte-identical for equal divides."""
    obj: dict[str, Any] = {
        "name": divide.name,
        "mode": "map",
        "double_points": list(divide.double_points),
        "terminals": list(divide.terminals),
        "edges": [
            {"id": e.id, "ends": [[v, s] for v, s in e.ends]} for e in divide.edges
        ],
        "branches": [list(b) for b in divide.branches],
        "sign_seed": {
            "edge": divide.sign_seed.edge,
            "side": divide.sign_seed.side,
            "sign": _SIGN_TEXT[divide.sign_seed.sign],
        },
    }
    return json.dumps(obj, indent=2) + "\n"
