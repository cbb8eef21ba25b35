"""JSON/CSV emitters and parsers for events, group elements and tables.

Numbers are rounded to a fixed count of significant digits and then written
with Python's shortest round-tripping ``repr``, so output is byte-stable.
"""
from __future__ import annotations

import io
import json
import math
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError
from .groups import ORTHO_TOL, GroupElement, renormalize, signature_defect
from .model import Event

DEFAULT_PRECISION = 12
PRECISION_RANGE = (6, 17)


def check_precision(precision: int) -> int:
    lo, hi = PRECISION_RANGE
    if not lo <= int(precision) <= hi:
        raise DomainError(f"precision must lie in [{lo}, {hi}]")
    return int(precision)


def rounded(value, precision: int = DEFAULT_PRECISION):
    """Round to ``precision`` significant digits; ``-0.0`` becomes ``0.0``."""
    if value is None or isinstance(value, (str, bool)):
        return value
    v = float(f"{float(value):.{precision}g}")
    return 0.0 if v == 0.0 else v


def format_number(value, precision: int = DEFAULT_PRECISION) -> str:
    v = rounded(value, precision)
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if not math.isfinite(v):
        raise DomainError(f"cannot serialise non-finite value {v!r}")
    return repr(v)


def _round_tree(obj, precision):
    if isinstance(obj, dict):
        return {k: _round_tree(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_tree(v, precision) for v in obj]
    if isinstance(obj, (float, int, np.floating, np.integer)) and not isinstance(obj, bool):
        return rounded(obj, precision)
    return obj


def dumps_json(obj, precision: int = DEFAULT_PRECISION) -> str:
    return json.dumps(_round_tree(obj, precision), indent=2, allow_nan=False) + "\n"


def dumps_csv(header: Sequence[str], rows: Iterable[Sequence], precision: int = DEFAULT_PRECISION) -> str:
    """Comma-separated, LF line endings, header always present."""
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(format_number(v, precision) for v in row) + "\n")
    return buf.getvalue()


# -- events ----------------------------------------------------------------

EVENT_KEYS = ("x", "y", "z", "t")


def event_to_dict(e: Event) -> dict:
    return {"x": e.x, "y": e.y, "z": e.z, "t": e.t}


def event_from_dict(d) -> Event:
    if not isinstance(d, dict) or set(d) != set(EVENT_KEYS):
        raise DomainError(f"an event is an object with keys {EVENT_KEYS}, got {d!r}")
    try:
        return Event(*(float(d[k]) for k in EVENT_KEYS))
    except (TypeError, ValueError) as exc:
        raise DomainError(f"bad event record {d!r}: {exc}") from None


def loads_events(text: str) -> list[Event]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"events file is not valid JSON: {exc}") from None
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise DomainError("events JSON must be an object or a list of objects")
    return [event_from_dict(d) for d in data]


def dumps_events(events: Sequence[Event], fmt: str = "json",
                 precision: int = DEFAULT_PRECISION) -> str:
    if fmt == "csv":
        return dumps_csv(EVENT_KEYS, ([e.x, e.y, e.z, e.t] for e in events), precision)
    return dumps_json([event_to_dict(e) for e in events], precision)


# -- group elements --------------------------------------------------------

def group_element_to_dict(g: GroupElement) -> dict:
    return {"matrix": g.M.tolist()}


def group_element_from_dict(d) -> GroupElement:
    """Parse ``{"matrix": 5x5}``; a defect from printed rounding is refined away."""
    if not isinstance(d, dict) or "matrix" not in d:
        raise DomainError('a group element is an object with key "matrix"')
    try:
        M = np.array(d["matrix"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"bad matrix: {exc}") from None
    if M.shape != (5, 5):
        raise DomainError("matrix must be 5 rows of 5 numbers")
    for _ in range(4):
        if signature_defect(M) < ORTHO_TOL:
            break
        M = renormalize(M)
    return GroupElement(M)


def loads_group_element(text: str) -> GroupElement:
    try:
        return group_element_from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise DomainError(f"group element file is not valid JSON: {exc}") from None


def dumps_group_element(g: GroupElement, fmt: str = "json",
                        precision: int = DEFAULT_PRECISION) -> str:
    if fmt == "csv":
        return dumps_csv([f"u{i}" for i in range(1, 6)], g.M.tolist(), precision)
    return dumps_json(group_element_to_dict(g), precision)
