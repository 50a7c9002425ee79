"""Elaboration of ring expressions into concrete tables."""

from __future__ import annotations

from . import expr as ex
from .rings import (
    DEFAULT_MAX_SIZE,
    Ideal,
    RingTable,
    element_index,
    make_corner,
    make_cyclic,
    make_gaussian,
    make_matrix,
    make_product,
    make_quotient,
    make_triangular,
)


def elaborate(expression, max_size: int = DEFAULT_MAX_SIZE) -> RingTable:
    """Build the ring a (possibly textual) expression denotes."""
    if isinstance(expression, str):
        expression = ex.parse_ring_expr(expression)
    if ex.has_param(expression):
        raise ValueError("family template still contains the parameter 'n'; substitute first")
    if isinstance(expression, ex.Cyclic):
        return make_cyclic(expression.n, max_size)
    if isinstance(expression, ex.Gaussian):
        return make_gaussian(expression.n, max_size)
    if isinstance(expression, ex.Matrix):
        return make_matrix(expression.dim, elaborate(expression.base, max_size), max_size)
    if isinstance(expression, ex.Triangular):
        return make_triangular(expression.dim, elaborate(expression.base, max_size), max_size)
    if isinstance(expression, ex.Product):
        factors = [elaborate(f, max_size) for f in expression.factors]
        return make_product(factors, max_size)
    if isinstance(expression, ex.Quotient):
        base = elaborate(expression.base, max_size)
        ideal = resolve_ideal(base, expression.ideal)
        return make_quotient(base, ideal)[0]
    if isinstance(expression, ex.Corner):
        base = elaborate(expression.base, max_size)
        return make_corner(base, element_index(base, expression.element))[0]
    raise TypeError(f"not a ring expression: {expression!r}")


def resolve_ideal(ring: RingTable, spec) -> Ideal:
    """Materialize an ideal spec (or its text) inside a concrete ring."""
    from .structure import full_ideal, ideal_generated_by, jacobson_radical, zero_ideal

    if isinstance(spec, str):
        spec = ex.parse_ideal_spec(spec)
    if isinstance(spec, ex.ZeroIdeal):
        return zero_ideal(ring)
    if isinstance(spec, ex.AllIdeal):
        return full_ideal(ring)
    if isinstance(spec, ex.JacobsonIdeal):
        return jacobson_radical(ring)
    if isinstance(spec, ex.GeneratedIdeal):
        gens = [element_index(ring, g) for g in spec.generators]
        ideal = ideal_generated_by(ring, gens)
        ideal.spec = spec
        return ideal
    raise TypeError(f"not an ideal spec: {spec!r}")
