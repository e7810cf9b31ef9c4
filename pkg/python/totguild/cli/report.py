"""Command reports and their JSON and text renderings."""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from totguild.utils import dump_canonical, sanitize_fields


class RunReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    command: List[str]
    # path -> sha256 of the file text
    inputs: Dict[str, str] = Field(default_factory=dict)
    verdict: Optional[str] = None
    result: Dict[str, Any] = Field(default_factory=dict)
    # preformatted blocks shown only in text mode (page grids)
    text: List[str] = Field(default_factory=list, exclude=True)
    format: Literal["json", "text"] = Field(default="text", exclude=True)
    # argparse already wrote usage or help
    quiet: bool = Field(default=False, exclude=True)
    error: Optional[Dict[str, Any]] = None
    exit_code: int = 0


def render_json(report: RunReport) -> str:
    return dump_canonical(sanitize_fields(report.model_dump(exclude_none=True)))


def _lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                out.append(f"{pad}{k}:")
                out.extend(_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {_inline(v)}")
        return out
    if isinstance(value, list):
        out = []
        for item in value:
            if isinstance(item, (dict, list)) and not _flat(item):
                out.append(f"{pad}-")
                out.extend(_lines(item, indent + 1))
            else:
                out.append(f"{pad}- {_inline(item)}")
        return out
    return [f"{pad}{_inline(value)}"]


def _flat(value: Any) -> bool:
    if isinstance(value, dict):
        return all(not isinstance(v, (dict, list)) for v in value.values())
    if isinstance(value, list):
        return all(not isinstance(v, (dict, list)) for v in value)
    return True


def _inline(value: Any) -> str:
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_inline(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def render_text(report: RunReport) -> str:
    """The JSON payload laid out as indented ``key: value`` lines."""
    data = sanitize_fields(report.model_dump(exclude_none=True))
    lines = [f"totguild {' '.join(report.command)}"]
    for path, sha in data.get("inputs", {}).items():
        lines.append(f"input {path} sha256={sha}")
    if "verdict" in data:
        lines.append(f"verdict: {data['verdict']}")
    lines.extend(_lines(data.get("result", {}), 0))
    lines.extend(report.text)
    if "error" in data:
        lines.append("error:")
        lines.extend(_lines(data["error"], 1))
    lines.append(f"exit code: {report.exit_code}")
    return "\n".join(lines) + "\n"


def render(report: RunReport) -> str:
    return render_json(report) if report.format == "json" else render_text(report)
