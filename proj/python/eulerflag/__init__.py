"""Euler flag enumeration of quasi-graded posets.

Polynomials are canonical strings such as ``"c^2 - d"``; rational values are
returned as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _eulerflag
from ._eulerflag import (
    Error,
    NotAShelling,
    NotCdExpressible,
    Poset,
    SimplicialComplex,
    ab_index,
    ab_to_cd,
    boolean_algebra,
    cartesian_product,
    cd_expand,
    cd_index,
    complete_eulerian,
    dual,
    find_zippers,
    h_triangle,
    is_eulerian,
    merge_equal_upset,
    ngon_poset,
    omega_poset,
    phi,
    pyramid,
    qsym,
    semisuspension,
    semisuspension_via_intersections,
    stanley_product,
    zip_zipper,
)

__all__ = [
    "Error",
    "NotAShelling",
    "NotCdExpressible",
    "Poset",
    "SimplicialComplex",
    "ab_index",
    "ab_to_cd",
    "boolean_algebra",
    "cartesian_product",
    "cd_expand",
    "cd_index",
    "complete_eulerian",
    "dual",
    "find_zippers",
    "flag_f_vector",
    "flag_h_vector",
    "h_triangle",
    "is_eulerian",
    "manifold_poset",
    "merge_equal_upset",
    "ngon_poset",
    "omega_poset",
    "phi",
    "pyramid",
    "qsym",
    "semisuspension",
    "semisuspension_via_intersections",
    "simple_chain_poset",
    "stanley_product",
    "zeta",
    "zip_zipper",
]


def _fractions(values):
    return {subset: Fraction(v) for subset, v in values.items()}


def flag_f_vector(poset):
    """Flag f-vector as {"{1,3}": Fraction}."""
    return _fractions(_eulerflag.flag_f_vector(poset))


def flag_h_vector(poset):
    """Flag h-vector as {"{1,3}": Fraction}."""
    return _fractions(_eulerflag.flag_h_vector(poset))


def zeta(poset, x, y):
    return Fraction(poset.zeta(x, y))


def simple_chain_poset(face_numbers):
    return _eulerflag.simple_chain_poset([str(Fraction(f)) for f in face_numbers])


def manifold_poset(n, chi):
    return _eulerflag.manifold_poset(n, str(Fraction(chi)))
