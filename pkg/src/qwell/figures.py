"""Deterministic CSV and self-contained SVG rendering of density profiles.

The nine reference panels pair three fragmentation layouts with six
single-plateau configurations; each panel renders the density curve with the
detected plateau centers as solid vertical lines and the interior plateau
boundaries dashed.
"""
from __future__ import annotations

from fractions import Fraction

from .plateau import PlateauReport, detect_plateaux
from .wavefield import WellParams, density_p

# panel -> (lam, n_state, tau)
PANELS: dict[str, tuple[Fraction, int, Fraction]] = {
    "frag-a": (Fraction(107, 10), 1, Fraction(2, 7)),
    "frag-b": (Fraction(107, 10), 2, Fraction(1, 12)),
    "frag-c": (Fraction(107, 10), 1, Fraction(3, 10)),
    "plat-a": (Fraction(5, 2), 1, Fraction(1, 3)),
    "plat-b": (Fraction(5, 2), 3, Fraction(13, 18)),
    "plat-c": (Fraction(5, 4), 2, Fraction(11, 6)),
    "zero-a": (Fraction(3, 2), 1, Fraction(5, 3)),
    "zero-b": (Fraction(3, 2), 3, Fraction(1, 6)),
    "zero-c": (Fraction(3, 2), 3, Fraction(7, 18)),
}


def panel_params(panel: str) -> WellParams:
    lam, n_state, tau = PANELS[panel]
    return WellParams(lam, n_state, tau)


def density_samples(params: WellParams, samples: int) -> list[tuple[float, float]]:
    """Density on a half-step offset grid over [0, 1/2], away from the exact
    singular points."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    step = 0.5 / samples
    return [((i + 0.5) * step, density_p((i + 0.5) * step, params)) for i in range(samples)]


def render_csv(rows: list[tuple[float, float]]) -> str:
    lines = ["x,p"]
    lines.extend(f"{x:.12g},{p:.12g}" for x, p in rows)
    return "\n".join(lines) + "\n"


_VIEW_W, _VIEW_H = 640, 360
_ML, _MR, _MT, _MB = 46, 12, 12, 30


def render_svg(rows: list[tuple[float, float]], report: PlateauReport) -> str:
    """Self-contained SVG: density polyline, solid plateau center lines,
    dashed boundary lines (boundaries on 0 or 1/2 are skipped)."""
    w = _VIEW_W - _ML - _MR
    h = _VIEW_H - _MT - _MB
    y_max = max((p for _, p in rows), default=1.0)
    y_max = y_max * 1.05 if y_max > 0 else 1.0

    def px(x: float) -> float:
        return _ML + x / 0.5 * w

    def py(p: float) -> float:
        return _MT + h - p / y_max * h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_VIEW_W} {_VIEW_H}">',
        f'<rect x="0" y="0" width="{_VIEW_W}" height="{_VIEW_H}" fill="white"/>',
        f'<rect x="{_ML}" y="{_MT}" width="{w}" height="{h}" fill="none" stroke="black" stroke-width="1"/>',
    ]
    for interval in report.intervals:
        center = (interval.lo + interval.hi) / 2
        cx = px(float(center))
        parts.append(
            f'<line x1="{cx:.2f}" y1="{_MT}" x2="{cx:.2f}" y2="{_MT + h}" '
            f'stroke="black" stroke-width="1.2"><title>center {center.numerator}/'
            f'{center.denominator}</title></line>'
        )
        for edge in (interval.lo, interval.hi):
            if edge == 0 or edge == Fraction(1, 2):
                continue
            ex = px(float(edge))
            parts.append(
                f'<line x1="{ex:.2f}" y1="{_MT}" x2="{ex:.2f}" y2="{_MT + h}" '
                f'stroke="black" stroke-width="1" stroke-dasharray="6 4">'
                f'<title>boundary {edge.numerator}/{edge.denominator}</title></line>'
            )
    points = " ".join(f"{px(x):.2f},{py(p):.2f}" for x, p in rows)
    parts.append(
        f'<polyline points="{points}" fill="none" stroke="#1060c0" stroke-width="1.3"/>'
    )
    for tick in (0.0, 0.25, 0.5):
        tx = px(tick)
        parts.append(
            f'<line x1="{tx:.2f}" y1="{_MT + h}" x2="{tx:.2f}" y2="{_MT + h + 5}" '
            f'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{tx:.2f}" y="{_MT + h + 20}" font-size="12" '
            f'text-anchor="middle" font-family="sans-serif">{tick:g}</text>'
        )
    parts.append(
        f'<text x="{_ML - 8}" y="{_MT + 12}" font-size="12" text-anchor="end" '
        f'font-family="sans-serif">{y_max:.3g}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_panel(panel: str, samples: int = 2000) -> tuple[str, str]:
    """CSV and SVG content for one reference panel."""
    params = panel_params(panel)
    report = detect_plateaux(params)
    rows = density_samples(params, samples)
    return render_csv(rows), render_svg(rows, report)
