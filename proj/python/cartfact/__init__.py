"""Cartesian prime factorization of directed graphs with loops."""

from ._core import (
    DiGraph,
    Error,
    brute_force_prime,
    cartesian_product,
    factor,
    gen_product_instance,
    iso_check,
    isomorphic_multisets,
    parse_graph,
    serialize_graph,
)

__all__ = [
    "DiGraph",
    "Error",
    "brute_force_prime",
    "cartesian_product",
    "factor",
    "gen_product_instance",
    "iso_check",
    "isomorphic_multisets",
    "parse_graph",
    "serialize_graph",
]
