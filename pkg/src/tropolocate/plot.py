"""Deterministic SVG drawings of planar location problems."""

import numpy as np

from .exceptions import DimensionUnsupported
from .location import ConstraintKind

CANVAS = 800
MARGIN = 40


def _fmt(v):
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _data(v):
    s = repr(float(v) + 0.0)
    return s[:-2] if s.endswith(".0") else s


class _Frame:
    """Square data window mapped onto the canvas with y pointing up."""

    def __init__(self, coords):
        lo, hi = coords.min(axis=0), coords.max(axis=0)
        centre = (lo + hi) / 2
        half = max(float(np.max(hi - lo)) / 2, 1.0) * 1.25
        self.x0, self.y0 = centre - half
        self.x1, self.y1 = centre + half
        self.scale = (CANVAS - 2 * MARGIN) / (2 * half)

    def __call__(self, x, y):
        return (MARGIN + (x - self.x0) * self.scale,
                CANVAS - MARGIN - (y - self.y0) * self.scale)

    def diagonal(self, offset):
        """Endpoints of ``y = x + offset`` clipped to the window, or None."""
        t0 = max(self.x0, self.y0 - offset)
        t1 = min(self.x1, self.y1 - offset)
        if t0 >= t1:
            return None
        return (t0, t0 + offset), (t1, t1 + offset)


def _constraint_offsets(matrix):
    # boundary of x1 >= a12 + x2 is y = x - a12; of x2 >= a21 + x1 is y = x + a21
    offsets = []
    if np.isfinite(matrix[0, 1]):
        offsets.append(-float(matrix[0, 1]))
    if np.isfinite(matrix[1, 0]):
        offsets.append(float(matrix[1, 0]))
    return offsets


def render_svg(problem, report):
    """Render points, the ``[q, p]`` rectangle, constraint lines and the solution."""
    if problem.dim != 2:
        raise DimensionUnsupported(f"plotting needs 2-D points, got dimension {problem.dim}")

    parts = [problem.points, report.p[None, :], report.q[None, :], report.witness[None, :]]
    if report.box_lower is not None:
        parts += [report.box_lower[None, :], report.box_upper[None, :]]
    frame = _Frame(np.vstack(parts))

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        f'  <rect class="background" x="0" y="0" width="{CANVAS}" height="{CANVAS}" fill="white"/>',
    ]

    if problem.constraint is not None:
        dash = "" if problem.constraint.kind is ConstraintKind.EQUALITY else ' stroke-dasharray="8 4"'
        for offset in _constraint_offsets(problem.constraint.matrix):
            seg = frame.diagonal(offset)
            if seg is None:
                continue
            (ax, ay), (bx, by) = frame(*seg[0]), frame(*seg[1])
            out.append(
                f'  <line class="constraint" data-offset="{_data(offset)}" x1="{_fmt(ax)}" y1="{_fmt(ay)}" '
                f'x2="{_fmt(bx)}" y2="{_fmt(by)}" stroke="#1f77b4" stroke-width="1.5"{dash}/>')

    qx, qy = report.q
    px, py = report.p
    (ax, ay), (bx, by) = frame(min(qx, px), max(qy, py)), frame(max(qx, px), min(qy, py))
    out.append(
        f'  <rect class="pq-rect" x="{_fmt(ax)}" y="{_fmt(ay)}" width="{_fmt(bx - ax)}" '
        f'height="{_fmt(by - ay)}" fill="none" stroke="#777777" stroke-dasharray="4 3"/>')

    if report.box_lower is not None:
        (ax, ay), (bx, by) = frame(*report.box_lower), frame(*report.box_upper)
        out.append(
            f'  <line class="solution-set" x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" y2="{_fmt(by)}" '
            'stroke="black" stroke-width="5" stroke-linecap="round"/>')

    for x, y in problem.points:
        cx, cy = frame(x, y)
        out.append(
            f'  <circle class="point" data-x="{_data(x)}" data-y="{_data(y)}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            'r="6" fill="white" stroke="black" stroke-width="2"/>')

    wx, wy = report.witness
    cx, cy = frame(wx, wy)
    out.append(
        f'  <circle class="witness" data-x="{_data(wx)}" data-y="{_data(wy)}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
        'r="7" fill="black"/>')
    out.append(
        f'  <text x="{MARGIN}" y="{MARGIN - 12}" font-family="sans-serif" font-size="16">'
        f'{report.constraint_kind.value}: optimum {_data(report.delta)} at ({_data(wx)}, {_data(wy)})</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
