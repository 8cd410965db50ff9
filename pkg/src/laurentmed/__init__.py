"""Exact algebra for locally finite derivations and E-derivations of
Laurent polynomial algebras over the rationals."""
from laurentmed.kernels import BACKEND
from laurentmed.laurent import DimensionError, LaurentPoly
from laurentmed.parser import ParseError, format_poly, parse_poly
from laurentmed.maps import (
    ClassificationResult,
    Derivation,
    Kind,
    MonomialEndo,
    NotLocallyFinite,
    classify_derivation,
    classify_endo,
    derive,
    endo_apply,
    endo_compose,
    endo_conjugate,
    endo_power_monomial,
    orbit,
)
from laurentmed.image import (
    ImageDescription,
    MembershipReport,
    averaging_projector,
    brute_force_member,
    image_description,
    image_member_derivation,
    image_member_ederivation,
    kernel_ideal_member,
    poly_variant_member,
)
from laurentmed.mzspace import dvk_check, ms_probe, origin_in_polytope, poly_z_origin, radical_scan

__version__ = "0.1.0"
