from plotkit.render import PanelSpec, PlotSpec, RenderResult, fig1_spec, render

__all__ = ["PanelSpec", "PlotSpec", "RenderResult", "fig1_spec", "render"]
