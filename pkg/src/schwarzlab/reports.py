"""Deterministic report and table serialization.

Floats render with 17 significant digits (round-trip exact for
doubles), object keys sort lexicographically, lines end with LF, and
the decimal separator is always ".".  Two runs with identical inputs
therefore produce byte-identical artifacts, which keeps goldens
diff-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


def format_float(x: float) -> str:
    return f"{float(x):.17g}"


def format_complex(z: complex) -> str:
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}j"


def _render(obj, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, complex):
        return _render({"im": obj.imag, "re": obj.real}, indent)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = (f'{inner}{json.dumps(str(k))}: {_render(obj[k], indent + 1)}'
                 for k in sorted(obj, key=str))
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = (f"{inner}{_render(v, indent + 1)}" for v in obj)
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def render_json(obj) -> str:
    """Deterministic JSON text (sorted keys, fixed float format, LF)."""
    return _render(obj, 0) + "\n"


@dataclass(frozen=True)
class Report:
    """Outcome of one command: echo, resolved parameters, named results,
    and plain-language notes saying what each number means."""

    command: str
    params: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    notes: tuple = ()

    def to_json(self) -> str:
        return render_json({
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "notes": list(self.notes),
        })


def render_csv(header: list[str], rows: list[list]) -> str:
    """CSV text with "," separators, LF endings, and blank for None."""
    def cell(v) -> str:
        if v is None:
            return ""
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, float):
            return format_float(v)
        return str(v)

    lines = [",".join(header)]
    lines.extend(",".join(cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"
