"""Run reports and their byte-deterministic serialization.

Reports serialize to a single JSON object with sorted keys; every float is
rendered with 12 significant digits via the same formatter, so identical
inputs produce identical bytes regardless of platform or dict build order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lhv import COMPLETE_SET_SLACK, LP_RESIDUAL_TOL
from .operators import BOUND_SLACK, DEFAULT_TOLERANCES

TOOL_VERSION = "0.1.0"

REPORT_TOLERANCES = {
    **DEFAULT_TOLERANCES.as_dict(),
    "bound_slack": BOUND_SLACK,
    "lp_residual": LP_RESIDUAL_TOL,
    "complete_set_slack": COMPLETE_SET_SLACK,
}


def format_float(x: float) -> str:
    return format(float(x), ".12g")


def render_json(obj) -> str:
    """Deterministic JSON: sorted keys, 12-significant-digit floats."""
    return _render(obj) + "\n"


def _render(obj) -> str:
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return _render_string(obj)
    if obj is None:
        return "null"
    if isinstance(obj, dict):
        items = ", ".join(
            f"{_render_string(str(k))}: {_render(v)}" for k, v in sorted(obj.items())
        )
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _render_string(s: str) -> str:
    out = ['"']
    for ch in s:
        if ch in ('"', "\\"):
            out.append("\\" + ch)
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


@dataclass
class RunReport:
    command: str
    parameters: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    tool_version: str = TOOL_VERSION
    tolerances: dict = field(default_factory=lambda: dict(REPORT_TOLERANCES))

    def to_json(self) -> str:
        return render_json(
            {
                "command": self.command,
                "parameters": self.parameters,
                "results": self.results,
                "verdicts": self.verdicts,
                "tool_version": self.tool_version,
                "tolerances": self.tolerances,
            }
        )
