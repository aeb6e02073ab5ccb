"""Kernel backend selection.

The Cython extension is preferred; set ``GKOD_PURE_PYTHON=1`` to force the
pure-Python fallback.
"""

import os

if os.environ.get("GKOD_PURE_PYTHON"):
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

sieve_tables = _impl.sieve_tables
primes_from_table = _impl.primes_from_table
factorial_exponents = _impl.factorial_exponents
alt_degrees = _impl.alt_degrees
sym_degrees = _impl.sym_degrees

__all__ = [
    "BACKEND",
    "sieve_tables",
    "primes_from_table",
    "factorial_exponents",
    "alt_degrees",
    "sym_degrees",
]
