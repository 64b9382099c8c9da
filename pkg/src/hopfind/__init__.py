"""hopfind: exact-arithmetic induction of interior algebras and Hopf module algebras.

Finite-dimensional algebras are given by structure constants over the
rationals or a prime field; every construction (Frobenius systems, smash
products, the induction operations and the duality isomorphisms relating
them) is materialized on an explicit basis and verified by exact linear
algebra.
"""

from .fields import QQ, PrimeField, Rationals, FieldError, field_from_spec
from .kernels import BACKEND
from .report import Report, VerificationError, UnsupportedInstanceError

__all__ = [
    "QQ",
    "PrimeField",
    "Rationals",
    "FieldError",
    "field_from_spec",
    "BACKEND",
    "Report",
    "VerificationError",
    "UnsupportedInstanceError",
]

__version__ = "0.1.0"
