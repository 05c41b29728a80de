"""Arbitrary-precision arithmetic and special functions.

The exported surface is small: the two number types, the constants pi and
log2, elementary functions, and the zeta/gamma/polylog family used by the
higher-level modules.
"""

from .cplx import MpComplex, cexp, cln, cpow, csin
from .real import (
    MAX_FUNC_PREC,
    MpReal,
    atan,
    atan2,
    cos,
    exp,
    ln,
    pow_int,
    pow_real,
    sin,
    tan,
)
from .real import log2_const as log2
from .real import pi_const as pi
from .special import (
    BERNOULLI_MAX,
    HurwitzChain,
    bernoulli,
    beta_fn,
    dirichlet_beta,
    gamma,
    hurwitz,
    polylog,
    taylor_coeffs,
    zeta,
)

__all__ = [
    "MAX_FUNC_PREC",
    "BERNOULLI_MAX",
    "MpReal",
    "MpComplex",
    "pi",
    "log2",
    "exp",
    "ln",
    "sin",
    "cos",
    "tan",
    "atan",
    "atan2",
    "pow_int",
    "pow_real",
    "cexp",
    "cln",
    "cpow",
    "csin",
    "bernoulli",
    "zeta",
    "hurwitz",
    "HurwitzChain",
    "dirichlet_beta",
    "gamma",
    "beta_fn",
    "polylog",
    "taylor_coeffs",
]
