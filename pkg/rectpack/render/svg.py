# Static SVG figures of an instance, optionally colored and with highlighted
# rectangles. The document is assembled as text, element by element.

from html import escape
from typing import Iterable, Mapping, Optional, Union

from rectpack.coloring.types import Coloring
from rectpack.geom.instance import Instance

NEUTRAL_FILL = "#bbbbbb"


class SVG:
    def __init__(self):
        self.svg = ""

    def header(self, width: float, height: float):
        self.svg += (
            '<?xml version="1.0" standalone="no"?>\n'
            '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">\n'
            f'<svg version="1.1" width="{width:.2f}" height="{height:.2f}" viewBox="0 0 {width:.2f} {height:.2f}" '
            'xmlns="http://www.w3.org/2000/svg">\n'
        )

    def filled_rectangle(self, element_id: str, x: float, y: float, width: float, height: float,
                         fill: str, opacity: float, stroke_width: float):
        self.svg += (
            f'<rect id="{escape(element_id, quote=True)}" x="{x:.2f}" y="{y:.2f}" '
            f'width="{width:.2f}" height="{height:.2f}" fill="{fill}" fill-opacity="{opacity:g}" '
            f'stroke="#000000" stroke-width="{stroke_width:g}"/>\n'
        )

    def get_svg(self) -> str:
        return f"{self.svg}</svg>\n"


def render_svg(
    inst: Instance,
    coloring: Optional[Union[Coloring, Mapping[str, int]]] = None,
    highlight: Iterable[str] = (),
    scale: Optional[float] = None,
) -> str:
    """
    One ``rect`` element per rectangle, filled by color index from a 12-hue
    palette; highlighted ids get a thick outline. The y axis points up, as in
    the instance coordinates.
    """
    from rectpack.config.config_manager import config

    settings = config.get_render_config()
    palette = settings.get("palette") or [NEUTRAL_FILL]
    opacity = float(settings.get("opacity", 0.4))
    margin = float(settings.get("margin", 10.0))
    thick = float(settings.get("highlight_stroke", 3))
    colors = coloring.colors if isinstance(coloring, Coloring) else (coloring or {})
    highlight = set(highlight)

    doc = SVG()
    if len(inst) == 0:
        doc.header(2 * margin, 2 * margin)
        return doc.get_svg()

    x_min, x_max = inst.x_values[0], inst.x_values[-1]
    y_min, y_max = inst.y_values[0], inst.y_values[-1]
    if scale is None:
        span = max(x_max - x_min, y_max - y_min)
        scale = float(settings.get("scale", 10.0)) if span <= 100 else 1000.0 / float(span)
    doc.header(float(x_max - x_min) * scale + 2 * margin, float(y_max - y_min) * scale + 2 * margin)

    for r in inst:
        fill = palette[colors[r.id] % len(palette)] if r.id in colors else NEUTRAL_FILL
        doc.filled_rectangle(
            r.id,
            margin + float(r.x_lo - x_min) * scale,
            margin + float(y_max - r.y_hi) * scale,
            float(r.width) * scale,
            float(r.height) * scale,
            fill,
            opacity,
            thick if r.id in highlight else 1,
        )
    return doc.get_svg()
