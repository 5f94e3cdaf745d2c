"""Deterministic renderers: tab-separated tables, canonical JSON, SVG bar chart.

Tables round reals half-even to 6 decimals; JSON keeps full precision with
shortest round-trip floats and lexicographically sorted keys. All output
uses LF line endings regardless of platform.
"""
from __future__ import annotations

import json
from typing import Any

from .model import TopsisResult, TopsisRow, WeightVector
from .sensitivity import LeaveOneOutReport, SensitivityReport


def _fmt(x: float) -> str:
    return format(x, ".6f")


def render_topsis_table(result: TopsisResult) -> str:
    """Tab-separated table with the published column layout; rows in input order."""
    lines = ["Alternative\tSi-\tSi+\tci\trank"]
    for r in result.rows:
        lines.append(
            f"{r.alternative}\t{_fmt(r.s_minus)}\t{_fmt(r.s_plus)}\t{_fmt(r.closeness)}\t{r.rank}"
        )
    return "\n".join(lines) + "\n"


def render_weight_table(criteria: list[str], weights: WeightVector) -> str:
    lines = [f"Criterion\tweight ({weights.method})"]
    for name, w in zip(criteria, weights.weights):
        lines.append(f"{name}\t{_fmt(w)}")
    return "\n".join(lines) + "\n"


def render_sensitivity_table(report: SensitivityReport) -> str:
    lines = [
        f"baseline ranks\t{','.join(str(r) for r in report.baseline_ranks)}",
        f"stability score\t{_fmt(report.stability_score)}",
        f"grid\tstep={report.step:g} max_delta={report.max_delta:g}",
        "Criterion\tflip threshold",
    ]
    for sweep in report.criteria:
        flip = "none within grid" if sweep.flip_threshold is None else f"{sweep.flip_threshold:g}"
        lines.append(f"{sweep.criterion}\t{flip}")
    return "\n".join(lines) + "\n"


def _topsis_to_obj(result: TopsisResult) -> list[dict[str, Any]]:
    return [
        {
            "alternative": r.alternative,
            "s_plus": r.s_plus,
            "s_minus": r.s_minus,
            "closeness": r.closeness,
            "rank": r.rank,
        }
        for r in result.rows
    ]


def _sensitivity_to_obj(report: SensitivityReport) -> dict[str, Any]:
    return {
        "baseline_ranks": list(report.baseline_ranks),
        "criteria": [
            {
                "criterion": s.criterion,
                "flip_threshold": s.flip_threshold,
                "grid": [
                    {"delta": g.delta, "ranks": list(g.ranks)} for g in s.grid
                ],
            }
            for s in report.criteria
        ],
        "max_delta": report.max_delta,
        "stability_score": report.stability_score,
        "step": report.step,
    }


def _leave_one_out_to_obj(report: LeaveOneOutReport) -> dict[str, Any]:
    return {
        "any_reversal": report.any_reversal,
        "effects": [
            {
                "degenerate": e.degenerate,
                "removed": e.removed,
                "reversed_pairs": [list(p) for p in e.reversed_pairs],
            }
            for e in report.effects
        ],
    }


def to_jsonable(obj: Any) -> Any:
    """Convert a result object into plain JSON-ready data."""
    if isinstance(obj, TopsisResult):
        return _topsis_to_obj(obj)
    if isinstance(obj, SensitivityReport):
        return _sensitivity_to_obj(obj)
    if isinstance(obj, LeaveOneOutReport):
        return _leave_one_out_to_obj(obj)
    if hasattr(obj, "to_jsonable"):  # e.g. the reproduction report
        return obj.to_jsonable()
    raise TypeError(f"no JSON schema for {type(obj).__name__}")


def export_json(obj: Any) -> str:
    """Canonical JSON: sorted keys, shortest-round-trip floats, LF-terminated."""
    if not isinstance(obj, (dict, list)):
        obj = to_jsonable(obj)
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def parse_topsis_json(text: str) -> TopsisResult:
    """Inverse of ``export_json`` for TopsisResult payloads."""
    rows = json.loads(text)
    return TopsisResult(
        rows=tuple(
            TopsisRow(
                alternative=r["alternative"],
                s_plus=r["s_plus"],
                s_minus=r["s_minus"],
                closeness=r["closeness"],
                rank=r["rank"],
            )
            for r in rows
        )
    )


def _xml_escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def emit_bar_chart(result: TopsisResult) -> str:
    """One bar per alternative, height proportional to closeness, rank on top.

    Valid SVG 1.1 with a fixed, deterministic layout.
    """
    if len(result) < 2:
        raise ValueError("bar chart needs at least two alternatives")
    m = len(result)
    bar_w, gap, left, top = 40, 14, 50, 30
    plot_h = 240
    width = left + m * (bar_w + gap) + gap
    height = top + plot_h + 120
    peak = max(r.closeness for r in result.rows)
    scale = plot_h / peak if peak > 0 else 0.0

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<line x1="{left}" y1="{top + plot_h}" x2="{width - gap}" y2="{top + plot_h}" '
        'stroke="black" stroke-width="1"/>',
    ]
    for i, r in enumerate(result.rows):
        h = r.closeness * scale
        x = left + gap + i * (bar_w + gap)
        y = top + plot_h - h
        parts.append(
            f'<rect x="{x}" y="{y:.2f}" width="{bar_w}" height="{h:.2f}" fill="#4878a8"/>'
        )
        parts.append(
            f'<text x="{x + bar_w / 2}" y="{y - 6:.2f}" font-size="11" '
            f'text-anchor="middle">{r.rank}</text>'
        )
        parts.append(
            f'<text x="{x + bar_w / 2}" y="{top + plot_h + 10}" font-size="9" '
            f'text-anchor="start" transform="rotate(60 {x + bar_w / 2} {top + plot_h + 10})">'
            f"{_xml_escape(r.alternative)}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
