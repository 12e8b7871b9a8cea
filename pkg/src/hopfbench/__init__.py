"""Exact workbench for right coideal subalgebras of small quantum groups.

The package constructs liftings of finite quantum linear spaces over an odd
root of unity — in particular the small quantum group attached to sl2 and the
reduced quantized coordinate ring of SL2 — and mechanically verifies their
structure: Hopf axioms, the classification of right coideal subalgebras,
minimal polynomials and semisimplicity, integrals, and the duality between
the two sides.  All arithmetic is exact (cyclotomic fields over Q).
"""

from .cyclofield import (CycField, CycScalar, Poly, make_context, q_binomial,
                         q_factorial, q_integer, parse_scalar, format_scalar)

__version__ = "0.1.0"

__all__ = [
    "CycField", "CycScalar", "Poly", "make_context",
    "q_binomial", "q_factorial", "q_integer",
    "parse_scalar", "format_scalar",
    "__version__",
]
