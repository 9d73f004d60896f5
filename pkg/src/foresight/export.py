"""CSV and SVG emission for trajectories and ensembles.

CSV floats use Python's shortest round-trip repr, so identical simulations
serialize to identical bytes. The SVG writer draws three stacked panels
(one per index) with a mean line and, for ensembles, the 5-95% quantile
band; its output is a pure function of the data.
"""

from __future__ import annotations

import io

import numpy as np

from .quant import INDEX_NAMES, Ensemble, Trajectory

INDEX_TITLES = {
    "E": "Economic Growth",
    "S": "Social Well-being",
    "T": "Technology Advancement",
}

_PANEL_W = 640
_PANEL_H = 180
_MARGIN_L = 56
_MARGIN_R = 16
_MARGIN_T = 34
_MARGIN_B = 34
_COLORS = {"E": "#1f77b4", "S": "#2ca02c", "T": "#d62728"}


def _fmt(x: float) -> str:
    return repr(float(x))


def trajectory_csv(traj: Trajectory) -> str:
    buf = io.StringIO()
    buf.write("t,E,S,T\n")
    for t, e, s, a in zip(traj.times, traj.E, traj.S, traj.T):
        buf.write(f"{_fmt(t)},{_fmt(e)},{_fmt(s)},{_fmt(a)}\n")
    return buf.getvalue()


def ensemble_csv(ens: Ensemble) -> str:
    buf = io.StringIO()
    buf.write("t,stat,index,value\n")
    for name in INDEX_NAMES:
        for stat in ("mean", "std", "q05", "q50", "q95"):
            values = ens.stats[name][stat]
            for t, v in zip(ens.times, values):
                buf.write(f"{_fmt(t)},{stat},{name},{_fmt(v)}\n")
    return buf.getvalue()


def _scale(values, lo, hi, out_lo, out_hi):
    span = hi - lo
    if span == 0:
        span = 1.0
    return out_lo + (np.asarray(values) - lo) / span * (out_hi - out_lo)


def _polyline_points(xs, ys) -> str:
    return " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(xs, ys))


def _panel(svg, panel_idx, title, times, mean, band, color):
    top = _MARGIN_T + panel_idx * (_PANEL_H + _MARGIN_T + _MARGIN_B)
    bottom = top + _PANEL_H
    left, right = _MARGIN_L, _MARGIN_L + _PANEL_W

    lo_candidates = [np.min(mean)] + ([np.min(band[0])] if band else [])
    hi_candidates = [np.max(mean)] + ([np.max(band[1])] if band else [])
    y_lo, y_hi = float(min(lo_candidates)), float(max(hi_candidates))
    if y_lo == y_hi:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    pad = 0.05 * (y_hi - y_lo)
    y_lo, y_hi = y_lo - pad, y_hi + pad

    xs = _scale(times, float(times[0]), float(times[-1]), left, right)
    svg.append(
        f'<rect x="{left}" y="{top}" width="{_PANEL_W}" height="{_PANEL_H}" '
        'fill="none" stroke="#999" stroke-width="1"/>'
    )
    svg.append(
        f'<text x="{left}" y="{top - 10}" font-size="14" fill="#222">{title}</text>'
    )
    if band is not None:
        lo_y = _scale(band[0], y_lo, y_hi, bottom, top)
        hi_y = _scale(band[1], y_lo, y_hi, bottom, top)
        pts = _polyline_points(xs, hi_y) + " " + _polyline_points(xs[::-1], lo_y[::-1])
        svg.append(f'<polygon points="{pts}" fill="{color}" fill-opacity="0.18" stroke="none"/>')
    mean_y = _scale(mean, y_lo, y_hi, bottom, top)
    svg.append(
        f'<polyline points="{_polyline_points(xs, mean_y)}" fill="none" '
        f'stroke="{color}" stroke-width="1.5"/>'
    )
    # axis labels: y extremes, x extremes, axis names
    svg.append(
        f'<text x="{left - 6}" y="{bottom}" font-size="10" fill="#444" text-anchor="end">{y_lo:.3g}</text>'
    )
    svg.append(
        f'<text x="{left - 6}" y="{top + 10}" font-size="10" fill="#444" text-anchor="end">{y_hi:.3g}</text>'
    )
    svg.append(
        f'<text x="{left}" y="{bottom + 14}" font-size="10" fill="#444">{float(times[0]):.3g}</text>'
    )
    svg.append(
        f'<text x="{right}" y="{bottom + 14}" font-size="10" fill="#444" text-anchor="end">{float(times[-1]):.3g}</text>'
    )
    svg.append(
        f'<text x="{(left + right) / 2:.1f}" y="{bottom + 26}" font-size="11" '
        'fill="#222" text-anchor="middle">time</text>'
    )


def _figure(times, panels) -> str:
    height = len(panels) * (_PANEL_H + _MARGIN_T + _MARGIN_B)
    width = _MARGIN_L + _PANEL_W + _MARGIN_R
    svg = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for i, (title, mean, band, color) in enumerate(panels):
        _panel(svg, i, title, times, mean, band, color)
    svg.append("</svg>")
    return "\n".join(svg) + "\n"


def trajectory_svg(traj: Trajectory) -> str:
    panels = [
        (f"{INDEX_TITLES[name]} over time", traj.index(name), None, _COLORS[name])
        for name in INDEX_NAMES
    ]
    return _figure(traj.times, panels)


def ensemble_svg(ens: Ensemble) -> str:
    panels = []
    for name in INDEX_NAMES:
        per = ens.stats[name]
        title = f"{INDEX_TITLES[name]} over time (mean, 5-95% of {ens.n_runs} runs)"
        panels.append((title, per["mean"], (per["q05"], per["q95"]), _COLORS[name]))
    return _figure(ens.times, panels)
