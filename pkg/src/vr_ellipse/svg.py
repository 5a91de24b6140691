"""Minimal hand-rolled SVG output: profile line plots and type barcodes.

Plain path elements only, no plotting dependency, so the rendered files are
byte-reproducible across environments.
"""

from __future__ import annotations

import math

from .classifier import ClassificationReport
from .extrema import SideProfile

_W, _H, _PAD = 640, 420, 50


def _polyline(xs: list[float], ys: list[float]) -> str:
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(xs, ys))
    return f'<polyline fill="none" stroke="#1f4e8c" stroke-width="1" points="{pts}"/>'


def _text(x: float, y: float, s: str, size: int = 12, anchor: str = "middle") -> str:
    return f'<text x="{x:.1f}" y="{y:.1f}" font-size="{size}" text-anchor="{anchor}">{s}</text>'


def profile_svg(prof: SideProfile, quadrant: bool = True) -> str:
    """Line plot of the side-length profile; by default restricted to the
    first quadrant, where the four-fold symmetry puts all the structure."""
    if quadrant:
        mask = prof.thetas <= math.pi / 2 + 1e-12
        xs_raw = prof.thetas[mask]
        ys_raw = prof.values[mask]
    else:
        xs_raw, ys_raw = prof.thetas, prof.values
    x0, x1 = float(xs_raw.min()), float(xs_raw.max())
    y0, y1 = float(ys_raw.min()), float(ys_raw.max())
    if y1 - y0 <= 0.0:
        y0, y1 = y0 - 1e-12, y1 + 1e-12
    sx = (_W - 2 * _PAD) / (x1 - x0)
    sy = (_H - 2 * _PAD) / (y1 - y0)
    xs = [_PAD + (x - x0) * sx for x in xs_raw.tolist()]
    ys = [_H - _PAD - (y - y0) * sy for y in ys_raw.tolist()]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<line x1="{_PAD}" y1="{_H-_PAD}" x2="{_W-_PAD}" y2="{_H-_PAD}" stroke="black"/>',
        f'<line x1="{_PAD}" y1="{_PAD}" x2="{_PAD}" y2="{_H-_PAD}" stroke="black"/>',
        _polyline(xs, ys),
        _text(_W / 2, _H - 12, "theta (rad)"),
        _text(_W / 2, 24, f"star side length, a={prof.a!r}, target {prof.target}"),
        _text(_PAD, _H - _PAD + 16, f"{x0:.3g}", anchor="start"),
        _text(_W - _PAD, _H - _PAD + 16, f"{x1:.3g}", anchor="end"),
        _text(_PAD - 4, _H - _PAD, f"{y0:.12g}", size=10, anchor="end"),
        _text(_PAD - 4, _PAD + 4, f"{y1:.12g}", size=10, anchor="end"),
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


def barcode_svg(report: ClassificationReport) -> str:
    """Stacked interval bars of the homotopy types along the scale axis."""
    th = report.thresholds
    r_lo, r_hi = th.r2 * 0.95, th.r5 * 1.01
    sx = (_W - 2 * _PAD) / (r_hi - r_lo)

    def x_of(r: float) -> float:
        return _PAD + (max(r, r_lo) - r_lo) * sx

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        _text(_W / 2, 24, f"homotopy types of the Rips complex, a={th.a!r}"),
        f'<line x1="{_PAD}" y1="{_H-_PAD}" x2="{_W-_PAD}" y2="{_H-_PAD}" stroke="black"/>',
        _text(_W / 2, _H - 12, "scale r"),
    ]
    row_h = (_H - 2 * _PAD - 20) / max(len(report.intervals), 1)
    for i, (kind, lo, hi, cond) in enumerate(report.intervals):
        y = _H - _PAD - 20 - (i + 0.5) * row_h
        color = "#b0432f" if cond else "#2f6db0"
        parts.append(
            f'<line x1="{x_of(lo):.2f}" y1="{y:.2f}" x2="{x_of(hi):.2f}" y2="{y:.2f}" '
            f'stroke="{color}" stroke-width="6"/>'
        )
        parts.append(_text(x_of(hi) + 6, y + 4, kind.label, size=11, anchor="start"))
    for name in ("r1", "r2", "r3", "r7half", "r4", "r5"):
        r = getattr(th, name)
        if r is None or r < r_lo:
            continue
        parts.append(
            f'<line x1="{x_of(r):.2f}" y1="{_H-_PAD}" x2="{x_of(r):.2f}" y2="{_H-_PAD-8}" '
            'stroke="black"/>'
        )
        parts.append(_text(x_of(r), _H - _PAD + 16, name, size=10))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
