"""Equivariant maps from the torus to the sphere and their invariants."""

from ._core import (
    TorhomError,
    TorusMap,
    degree_pair,
    degree_pair_from_samples,
    degree_triple,
    degree_triple_from_samples,
    jump,
    jump_count,
    normal_form,
    physics_map,
    realizable_pair,
    realizable_triple,
    realize_pair,
    realize_triple,
    total_degree,
    weierstrass,
)

__all__ = [
    "TorhomError",
    "TorusMap",
    "degree_pair",
    "degree_pair_from_samples",
    "degree_triple",
    "degree_triple_from_samples",
    "jump",
    "jump_count",
    "normal_form",
    "physics_map",
    "realizable_pair",
    "realizable_triple",
    "realize_pair",
    "realize_triple",
    "total_degree",
    "weierstrass",
]
