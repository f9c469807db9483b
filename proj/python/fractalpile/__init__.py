"""Abelian sandpiles on fractal graph approximations.

Thin wrapper over the native module; everything lives in ``_core``.
"""

from ._core import (
    ConfigurationError,
    ConsistencyError,
    Graph,
    ResourceLimitError,
    bottom_center_vertex,
    build,
    conjectured_order_sg,
    distance_map,
    group_order,
    growth_run,
    id_f,
    identity,
    identity_survey,
    is_recurrent,
    max_stable,
    oplus,
    periodicity_run,
    random_recurrent,
    reduced_laplacian,
    render_ppm,
    restrict_with_sinks,
    sandpile_group,
    stabilize,
    triangle_chain,
)

__all__ = [
    "ConfigurationError",
    "ConsistencyError",
    "Graph",
    "ResourceLimitError",
    "bottom_center_vertex",
    "build",
    "conjectured_order_sg",
    "distance_map",
    "group_order",
    "growth_run",
    "id_f",
    "identity",
    "identity_survey",
    "is_recurrent",
    "max_stable",
    "oplus",
    "periodicity_run",
    "random_recurrent",
    "reduced_laplacian",
    "render_ppm",
    "restrict_with_sinks",
    "sandpile_group",
    "stabilize",
    "triangle_chain",
]
