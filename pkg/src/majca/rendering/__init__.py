from majca.rendering.spacetime import RenderFormat, RenderSpec, render_spacetime

__all__ = ["RenderFormat", "RenderSpec", "render_spacetime"]
