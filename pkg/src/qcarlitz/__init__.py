"""Exact q-Bernoulli-Carlitz numbers and the orthogonal polynomials they are moments of.

Arithmetic is exact throughout: ``FieldQ`` is Q(q), ``FieldQZ`` is Q(q)(z).
"""
from .ratfunc import FieldQ, FieldQZ, Poly, PoleError, Series, SeriesError, q, qpow, z
from .qcombinat import qbinom, qfact, qint, qpoch, phi21_terminating
from .bernoulli import (
    GeneralParams,
    beta_number,
    beta_numbers,
    beta_poly,
    legendre_moment,
    moment_general,
    normalization_constant,
    psi,
)
from .orthopoly import (
    Hahn,
    Jacobi,
    Legendre,
    Recurrence,
    generate_polys,
    hahn_recurrence,
    hypergeometric_Pn,
    jacobi_recurrence,
    legendre_recurrence,
    moments_from_recurrence,
)
from .hankel import HankelSpec, closed_form_shift, closed_form_z, determinant, hankel_det
from .contfrac import JFraction, SFraction, closed_sfraction, contract, jfraction_series, sfraction_series

__version__ = "0.1.0"
