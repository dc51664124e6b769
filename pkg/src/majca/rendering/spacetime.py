"""
Space-time diagrams: one row per time step, one column per cell.
"""

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from majca.analysis.stability import StabilityMap
from majca.core.automaton import Trajectory
from majca.exceptions import OverlayUnavailable, PreconditionViolated

CELL_CHARS = {0: ".", 1: "#"}
CELL_FILLS = {0: "#ffffff", 1: "#1f1f1f"}
LETTER_FILLS = {0: "#1f1f1f", 1: "#ffffff"}


class RenderFormat(str, Enum):
    TEXT = "text"
    SVG = "svg"
    PGM = "pgm"


class RenderSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    format: RenderFormat = RenderFormat.TEXT
    overlay: bool = False
    cell_size: int = Field(default=10, ge=1)


class SVG:
    def __init__(self):
        self.svg = ""

    def header(self, width, height):
        self.svg += (
            '<?xml version="1.0" standalone="no"?>\n'
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">\n'
        )

    def filled_rectangle(self, x, y, size, fill):
        self.svg += f'<rect x="{x}" y="{y}" width="{size}" height="{size}" fill="{fill}"/>\n'

    def centered_letter(self, x, y, size, letter, fill):
        cx, cy = x + size / 2, y + size / 2
        self.svg += (
            f'<text x="{cx:.1f}" y="{cy:.1f}" font-size="{size * 0.7:.1f}" '
            f'font-family="monospace" text-anchor="middle" dominant-baseline="central" '
            f'fill="{fill}">{letter}</text>\n'
        )

    def get_svg(self):
        return f"{self.svg}</svg>\n"


def _render_text(trajectory: Trajectory, maps: list[StabilityMap] | None) -> bytes:
    rows = []
    for t, state in enumerate(trajectory.states):
        row = "".join(CELL_CHARS[cell] for cell in state.cells())
        if maps is not None:
            row += " " + maps[t].letters()
        rows.append(row)
    return ("\n".join(rows) + "\n").encode("ascii")


def _render_svg(
    trajectory: Trajectory, maps: list[StabilityMap] | None, size: int
) -> bytes:
    n = trajectory.states[0].n
    svg = SVG()
    svg.header(n * size, len(trajectory.states) * size)
    for t, state in enumerate(trajectory.states):
        for i, cell in enumerate(state.cells()):
            svg.filled_rectangle(i * size, t * size, size, CELL_FILLS[cell])
            if maps is not None:
                svg.centered_letter(i * size, t * size, size, maps[t][i].value, LETTER_FILLS[cell])
    return svg.get_svg().encode("utf-8")


def _render_pgm(trajectory: Trajectory, size: int) -> bytes:
    grid = np.array([state.cells() for state in trajectory.states], dtype=np.uint8)
    # state 1 is drawn black
    pixels = np.where(grid == 1, 0, 255).astype(np.uint8)
    pixels = np.repeat(np.repeat(pixels, size, axis=0), size, axis=1)
    height, width = pixels.shape
    return f"P5\n{width} {height}\n255\n".encode("ascii") + pixels.tobytes()


def render_spacetime(
    trajectory: Trajectory,
    maps: list[StabilityMap] | None,
    spec: RenderSpec,
) -> bytes:
    overlay = maps if spec.overlay else None
    if spec.overlay:
        if spec.format == RenderFormat.PGM:
            raise OverlayUnavailable(
                "Stability letters cannot be drawn on a greymap", format=spec.format.value
            )
        if maps is None or len(maps) != len(trajectory.states):
            raise PreconditionViolated(
                "Overlay needs one stability map per recorded state",
                operation="render_spacetime",
            )

    if spec.format == RenderFormat.TEXT:
        return _render_text(trajectory, overlay)
    if spec.format == RenderFormat.SVG:
        return _render_svg(trajectory, overlay, spec.cell_size)
    return _render_pgm(trajectory, spec.cell_size)
