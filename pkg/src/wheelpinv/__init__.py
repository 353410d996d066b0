"""Exact Moore-Penrose inverses of wheel-graph incidence and Laplacian matrices."""

from wheelpinv.exact_field import QuadExt, Rational, extract_rational, quad_pow
from wheelpinv.dense import DenseMatrix
from wheelpinv.circulant import Circulant, TridiagCircSpec
from wheelpinv.wheel_matrices import (
    WheelSpec,
    build_incidence,
    build_laplacian,
    build_oriented_incidence,
    build_signless_laplacian,
)
from wheelpinv.closed_form import (
    PinvBundle,
    mp_incidence,
    mp_incidence_entrywise,
    mp_laplacian,
    mp_laplacian_entrywise,
    mp_oriented,
    mp_oriented_entrywise,
    mp_signless_laplacian,
    mp_signless_laplacian_entrywise,
    pseudoinverse,
)
from wheelpinv.oracle import penrose_check, pinv_oracle, rank_factorize

__version__ = "0.1.0"
