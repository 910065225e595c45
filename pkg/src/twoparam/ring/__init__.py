"""Exact coefficient arithmetic over Q(v, t)."""
from fractions import Fraction as Rat

from .lpoly import LPoly
from .gcd import poly_gcd
from .ratfunc import RatFunc, ratfunc_normalize, as_ratfunc, rsum, lincomb, vt_monomial, mono_mul
from .ratfunc import ZERO, ONE, V, T
from .qnum import QInt, qint_eval, qint_poly, qfactorial, qfactorial_poly, qbinom, qbinom_poly
from .series import series_in_vinv, is_t_free, NotRegularError, in_one_plus_vinv_z
from .parse import parse_coeff, ParseError

__all__ = [
    "Rat", "LPoly", "poly_gcd", "RatFunc", "ratfunc_normalize", "as_ratfunc",
    "rsum", "lincomb", "vt_monomial", "mono_mul", "ZERO", "ONE", "V", "T",
    "QInt", "qint_eval", "qint_poly", "qfactorial", "qfactorial_poly",
    "qbinom", "qbinom_poly", "series_in_vinv", "is_t_free", "NotRegularError",
    "in_one_plus_vinv_z", "parse_coeff", "ParseError",
]
