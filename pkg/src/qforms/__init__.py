"""Exact computations with highest-weight modules of quantum groups.

Rational functions in ``v`` (with ``q = v**D``), Cartan data, the free word
algebra and the Shapovalov form, weight-space models of Verma, parabolic and
irreducible modules, singular vectors of tensor products with the extremal
twist, and Hermitian forms at real ``q``.
"""

from .cartan import RootDatum, get_datum, enumerate_drops, enumerate_words, height
from .coeffs import LaurentPoly, RatFunc, qint, qfact, qbinom, eval_at, eval_q
from .hwmodule import HWModule, build, act, singular_in, annihilator_ideal
from .tensor import (
    TensorProduct,
    singular_space,
    canonical_gram,
    extremal_subspaces,
    delta_l,
    delta_r,
    theta,
    theta_zv,
    theta_via_verma,
    verdict,
    filtration_check,
    closure_oracle,
)
from .unitarity import StarData, hermitian_gram, positivity_check

__version__ = "0.1.0"
