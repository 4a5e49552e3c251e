# JSON instance files. Numbers are written as exact strings ("3/7", "5") and
# read back through Fraction, so nothing passes through binary floats.

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Union

from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from rectpack.errors import ParseError, ValidationError
from rectpack.geom.instance import Instance
from rectpack.geom.rect import Rect
from rectpack.geom.scalar import format_scalar

logger = logging.getLogger(__name__)

Number = Union[str, int, float]


class RectangleRecord(BaseModel):
    id: Union[str, int]
    x1: Number
    y1: Number
    x2: Number
    y2: Number
    weight: Number = "1"


class InstanceFile(BaseModel):
    rectangles: List[RectangleRecord] = Field(default_factory=list)


def _number(value: Number, field: str, rect_id: str) -> Fraction:
    try:
        # str() of a float is its shortest round-trip form, e.g. "0.1"
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact number: {value!r}", location=f"{rect_id}.{field}") from None


def _location(error: PydanticValidationError) -> str:
    loc = error.errors()[0].get("loc", ())
    return ".".join(str(part) for part in loc) or "document"


def parse_instance(text: str, drop_zero_weight: bool = False) -> Instance:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, location=f"line {e.lineno}") from None
    try:
        parsed = InstanceFile.model_validate(document)
    except PydanticValidationError as e:
        raise ParseError(e.errors()[0]["msg"], location=_location(e)) from None

    rects = []
    for record in parsed.rectangles:
        rect_id = str(record.id)
        values = {f: _number(getattr(record, f), f, rect_id) for f in ("x1", "y1", "x2", "y2", "weight")}
        if values["x1"] >= values["x2"]:
            raise ValidationError(f"rectangle {rect_id}: x1 must be < x2", rect_id=rect_id)
        if values["y1"] >= values["y2"]:
            raise ValidationError(f"rectangle {rect_id}: y1 must be < y2", rect_id=rect_id)
        rects.append(Rect(rect_id, values["x1"], values["x2"], values["y1"], values["y2"], values["weight"]))

    if drop_zero_weight:
        dropped = [r.id for r in rects if r.weight == 0]
        if dropped:
            logger.warning("dropping %d zero-weight rectangles: %s", len(dropped), ", ".join(dropped[:5]))
        rects = [r for r in rects if r.weight > 0]
    return Instance(rects)


def load(path: Union[str, Path], drop_zero_weight: bool = False) -> Instance:
    """
    Read an instance file.

    Example:
        ```python
        inst = load("grid.json", drop_zero_weight=True)
        ```
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(str(e), location=str(path)) from None
    return parse_instance(text, drop_zero_weight=drop_zero_weight)


def instance_document(inst: Instance) -> Dict[str, Any]:
    return {
        "rectangles": [
            {
                "id": r.id,
                "x1": format_scalar(r.x_lo),
                "y1": format_scalar(r.y_lo),
                "x2": format_scalar(r.x_hi),
                "y2": format_scalar(r.y_hi),
                "weight": format_scalar(r.weight),
            }
            for r in inst
        ]
    }


def dumps(document: Any) -> str:
    return json.dumps(document, indent=2) + "\n"


def save(inst: Instance, path: Union[str, Path]):
    Path(path).write_text(dumps(instance_document(inst)))


def write_json(document: Any, path: Union[str, Path]):
    Path(path).write_text(dumps(document))


def read_json(path: Union[str, Path]) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise ParseError(str(e), location=str(path)) from None
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, location=f"{path}: line {e.lineno}") from None


def load_coloring(path: Union[str, Path]) -> Dict[str, int]:
    """The ``colors`` map of a coloring file (or a bare id -> color map)."""
    document = read_json(path)
    colors = document.get("colors", document) if isinstance(document, dict) else None
    if not isinstance(colors, dict):
        raise ParseError("expected an object with a 'colors' map", location=str(path))
    try:
        return {str(k): int(v) for k, v in colors.items()}
    except (TypeError, ValueError):
        raise ParseError("color indices must be integers", location=f"{path}: colors") from None


def load_id_list(path: Union[str, Path]) -> List[str]:
    """Ids from a bare JSON list or from the ``chosen`` field of an mwisr result."""
    document = read_json(path)
    ids: Iterable[Any] = document.get("chosen") if isinstance(document, dict) else document
    if not isinstance(ids, list):
        raise ParseError("expected a list of ids or an object with 'chosen'", location=str(path))
    return [str(i) for i in ids]
