#!/usr/bin/env python3
"""
Regression Figure SVG Exporter

Scatter of the measurements with the fitted regression line drawn across the
observed x range, rendered by matplotlib's SVG backend. The hash salt is
pinned and the date metadata dropped, so identical input always produces
byte-identical text.

Markers live in <g id="markers"> (one <use> per point) and the line in
<g id="regression">.
"""

import io
import logging
import math
from dataclasses import dataclass
from typing import Tuple

import matplotlib.pyplot as plt
from matplotlib.ticker import MaxNLocator

from models.errors import ValidationError
from models.regression import LinearModel
from regression.ols import predict


logger = logging.getLogger(__name__)

# SVG user units are points; at 72 dpi one figure pixel is one point
DPI = 72
MIN_WIDTH = 160
MIN_HEIGHT = 120
MAX_TICKS = 6

MARKERS_GID = "markers"
REGRESSION_GID = "regression"

SVG_RC = {
    "svg.hashsalt": "efpm",
    "svg.fonttype": "none",
    "font.family": "sans-serif",
    "font.size": 10,
}

Point = Tuple[float, float]


@dataclass(frozen=True)
class PlotSpec:
    """Everything needed to draw one regression figure"""
    points: Tuple[Point, ...]
    model: LinearModel
    x_label: str
    y_label: str
    title: str
    width: int = 640
    height: int = 480
    marker_radius: float = 3.0

    def __post_init__(self):
        points = tuple((float(x), float(y)) for x, y in self.points)
        object.__setattr__(self, "points", points)
        if len(points) < 2:
            raise ValidationError(f"a figure needs at least 2 points, got {len(points)}", field="points")
        if not all(math.isfinite(x) and math.isfinite(y) for x, y in points):
            raise ValidationError("points must be finite numbers", field="points")
        for field_name in ("x_label", "y_label", "title"):
            if not str(getattr(self, field_name)).strip():
                raise ValidationError(f"{field_name} must not be empty", field=field_name)
        if self.width < MIN_WIDTH or self.height < MIN_HEIGHT:
            raise ValidationError(f"figure size {self.width}x{self.height} leaves no plot area "
                                  f"(minimum {MIN_WIDTH}x{MIN_HEIGHT})", field="width")
        if self.marker_radius <= 0:
            raise ValidationError(f"marker radius must be positive, got {self.marker_radius}",
                                  field="marker_radius")


def regression_segment(spec: PlotSpec) -> Tuple[Point, Point]:
    """
    Endpoints of the drawn regression line in data coordinates

    Returns:
        ((x_min, predict(x_min)), (x_max, predict(x_max))) over the observed x range

    Raises:
        ValidationError: every x is equal (no horizontal extent)
    """
    xs = [x for x, _ in spec.points]
    x_min, x_max = min(xs), max(xs)
    if x_min == x_max:
        raise ValidationError(f"all x values equal {x_min:g}; cannot draw a regression line", field="points")
    return (x_min, predict(spec.model, x_min)), (x_max, predict(spec.model, x_max))


def scatter_svg(spec: PlotSpec) -> str:
    """
    Render a PlotSpec as an SVG document

    Args:
        spec: Points, model, labels and figure size

    Returns:
        SVG text

    Raises:
        ValidationError: every x is equal (no horizontal extent)
    """
    (x_start, y_start), (x_end, y_end) = regression_segment(spec)
    xs = [x for x, _ in spec.points]
    ys = [y for _, y in spec.points]

    buffer = io.BytesIO()
    with plt.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(spec.width / DPI, spec.height / DPI), dpi=DPI)
        try:
            # scatter sizes are marker areas in points squared
            ax.scatter(xs, ys, s=(2 * spec.marker_radius) ** 2, color="steelblue",
                       linewidths=0, gid=MARKERS_GID)
            ax.plot([x_start, x_end], [y_start, y_end], color="firebrick", linewidth=1.5,
                    gid=REGRESSION_GID)
            ax.set_title(spec.title)
            ax.set_xlabel(spec.x_label)
            ax.set_ylabel(spec.y_label)
            for axis in (ax.xaxis, ax.yaxis):
                axis.set_major_locator(MaxNLocator(nbins=MAX_TICKS, steps=[1, 2, 2.5, 5, 10]))
            fig.tight_layout()
            fig.savefig(buffer, format="svg", dpi=DPI, metadata={"Date": None})
        finally:
            plt.close(fig)

    logger.debug(f"Rendered {len(spec.points)} markers on a {spec.width}x{spec.height} figure")
    return buffer.getvalue().decode("utf-8")
