from rectpack.render.svg import SVG, render_svg

__all__ = ["SVG", "render_svg"]
