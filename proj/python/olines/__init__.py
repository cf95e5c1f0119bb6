"""Exact point configurations, line statistics and ordinary-line checks."""

from ._olines import (
    Config,
    ParseError,
    coplanar_plus,
    dependency_matrix,
    fermat,
    fermat_affine,
    fermat_with_apex,
    latin_square,
    property_s,
    prune,
    random_generic,
    scale,
    triple_system_ok,
    verify,
)

__all__ = [
    "Config",
    "ParseError",
    "coplanar_plus",
    "dependency_matrix",
    "fermat",
    "fermat_affine",
    "fermat_with_apex",
    "latin_square",
    "property_s",
    "prune",
    "random_generic",
    "scale",
    "triple_system_ok",
    "verify",
]
