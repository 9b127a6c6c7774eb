"""SVG cross-sections of chamber decompositions.

A rank three cone is drawn through its intersection with the affine plane
{x : ⟨ℓ, x⟩ = 1}. Each ray r meets the plane in r / ⟨ℓ, r⟩, which is then
expressed in an orthonormal frame of the plane and fitted to the viewport.

Attributes:
    DEFAULT_WIDTH (int): Default width of the image in pixels.
    DEFAULT_HEIGHT (int): Default height of the image in pixels.
    PADDING (float): Fraction of the viewport left empty around the drawing.
"""

import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from .arith import IntVector, RatMatrix, RationalLike, RationalVector, dot, nullspace, solve, vector
from .cone import Cone
from .errors import DimensionMismatch, FanError, MissingData
from .models import VarietyModel, ray_label

__all__ = ["DEFAULT_WIDTH", "DEFAULT_HEIGHT", "SVG", "default_slice", "plot_mcd"]

log = logging.getLogger(__name__)

DEFAULT_WIDTH = 480
DEFAULT_HEIGHT = 400
PADDING = 0.1

Point = Tuple[float, float]

PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="{width}" height="{height}" viewBox="0 0 {width} {height}" version="1.1" \
xmlns="http://www.w3.org/2000/svg">
<rect x="0" y="0" width="{width}" height="{height}" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</svg>
"""

_FILLS = ("#dbe9f6", "#fbe3d6", "#e2f0d9", "#fff2cc", "#e4dff0", "#f8d7e3", "#d9f2f0", "#ececec")


def _format_points(points: Sequence[Point]) -> str:
    return " ".join(f"{x:.2f},{y:.2f}" for x, y in points)


class SVG:
    """Collects SVG elements in viewport coordinates.

    Args:
        width: Width of the image in pixels
        height: Height of the image in pixels
    """
    width: int
    height: int
    commands: List[str]

    def __init__(self, width: int = DEFAULT_WIDTH, height: int = DEFAULT_HEIGHT) -> None:
        self.width = width
        self.height = height
        self.commands = []

    def polygon(self, points: Sequence[Point], fill: str = "none", stroke: str = "#000000") -> None:
        self.commands.append(
            f'<polygon points="{_format_points(points)}" style="fill:{fill};stroke:{stroke};stroke-width:1"/>'
        )

    def polyline(self, points: Sequence[Point], stroke: str = "#000000", width: float = 2) -> None:
        self.commands.append(
            f'<polyline points="{_format_points(points)}" style="fill:none;stroke:{stroke};stroke-width:{width}"/>'
        )

    def text(self, x: float, y: float, text: str, color: str = "#333333") -> None:
        self.commands.append(
            f'<text x="{x:.2f}" y="{y:.2f}" fill="{color}" font-size="12" font-family="monospace" '
            f'text-anchor="middle">{escape(text)}</text>'
        )

    def render(self) -> str:
        """The complete SVG 1.1 document."""
        return PREAMBLE.format(width=self.width, height=self.height) + "".join(
            command + "\n" for command in self.commands) + POSTAMBLE


def default_slice(c: Cone) -> RationalVector:
    """Functional taking the value 1 on every extremal ray of a cone.

    Raises:
        FanError: If no such functional exists.
    """
    if not c.generators:
        raise FanError("can't slice a cone without rays")

    functional = solve(RatMatrix.from_rows(c.generators), [1] * len(c.generators))
    if functional is None:
        raise FanError("no functional takes the value 1 on every ray, pass a slice explicitly")

    return functional


class _Frame:
    """Orthonormal coordinates on the slice plane."""

    def __init__(self, functional: RationalVector, origin: RationalVector) -> None:
        u, v = nullspace(RatMatrix.from_rows([functional]))
        # Gram-Schmidt, exact up to the final normalisation
        v = tuple(b - dot(u, v) / dot(u, u) * a for a, b in zip(u, v))

        self.functional = functional
        self.origin = origin
        self.axes = [(axis, math.sqrt(dot(axis, axis))) for axis in (u, v)]

    def project(self, ray: Sequence[int]) -> Point:
        value = dot(self.functional, vector(ray))
        if value <= 0:
            raise FanError(f"the slice doesn't meet the ray {tuple(ray)}")

        offset = [x / value - o for x, o in zip(vector(ray), self.origin)]
        x, y = (float(dot(axis, offset)) / norm for axis, norm in self.axes)
        return x, y


def _convex_order(points: List[Point]) -> List[Point]:
    cx = sum(x for x, _ in points) / len(points)
    cy = sum(y for _, y in points) / len(points)
    return sorted(points, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


def plot_mcd(m: VarietyModel, slice_functional: Sequence[RationalLike] = None,
             width: int = DEFAULT_WIDTH, height: int = DEFAULT_HEIGHT) -> str:
    """Draw the cross-section of the Mori chamber decomposition of a model.

    Draws one polygon per chamber, the outline of the effective cone and a
    label at every ray of a chamber.

    Args:
        m: Model to draw
        slice_functional: Functional ℓ defining the slice. Defaults to the
            functional taking the value 1 on every ray of the effective cone.
        width: Width of the image in pixels
        height: Height of the image in pixels

    Returns:
        The SVG document.

    Raises:
        DimensionMismatch: If the model doesn't have Picard rank three.
        MissingData: If the model has no chamber decomposition.
        FanError: If the slice doesn't meet every ray.
    """
    if m.rank != 3:
        raise DimensionMismatch(3, m.rank)

    if m.mcd is None:
        raise MissingData(m.name, "mcd")

    support = m.mcd.support
    functional = vector(slice_functional) if slice_functional is not None else default_slice(support)
    if len(functional) != 3:
        raise DimensionMismatch(3, len(functional))

    for ray in support.generators:
        if dot(functional, vector(ray)) <= 0:
            raise FanError(f"the slice doesn't meet the ray {ray}")

    frame = _Frame(functional, tuple(x / dot(functional, vector(support.generators[0]))
                                     for x in vector(support.generators[0])))

    rays: Dict[IntVector, Point] = {}
    for cone in [support] + [chamber.cone for chamber in m.mcd.chambers]:
        for ray in cone.generators:
            if ray not in rays:
                rays[ray] = frame.project(ray)

    xs = [x for x, _ in rays.values()]
    ys = [y for _, y in rays.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = min(width, height) * (1 - 2 * PADDING) / span
    offset_x = (width - (max(xs) - min(xs)) * scale) / 2
    offset_y = (height - (max(ys) - min(ys)) * scale) / 2

    def to_viewport(p: Point) -> Point:
        return offset_x + (p[0] - min(xs)) * scale, height - offset_y - (p[1] - min(ys)) * scale

    svg = SVG(width, height)
    for i, chamber in enumerate(m.mcd.chambers):
        points = _convex_order([rays[ray] for ray in chamber.cone.generators])
        svg.polygon([to_viewport(p) for p in points], fill=_FILLS[i % len(_FILLS)])

    outline = [to_viewport(p) for p in _convex_order([rays[ray] for ray in support.generators])]
    svg.polyline(outline + outline[:1])

    labelled = {ray for chamber in m.mcd.chambers for ray in chamber.cone.generators}
    for ray in sorted(labelled):
        label: Optional[str] = ray_label(m, ray) or str(ray)
        x, y = to_viewport(rays[ray])
        svg.text(x, y - 6, label)

    log.debug(f"plotted {len(m.mcd.chambers)} chambers and {len(labelled)} rays of {m.name}")
    return svg.render()
