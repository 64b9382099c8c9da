"""Backend selection for the row-reduction kernels.

The compiled extension is used when available; HOPFIND_PURE=1 forces the
pure-Python fallback.  Both backends produce identical output (the RREF is
canonical), so the choice only affects speed.
"""

import os

if os.environ.get("HOPFIND_PURE") == "1":
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

rref_rational = _impl.rref_rational
rref_prime = _impl.rref_prime
BACKEND = _impl.BACKEND


def thread_cap() -> int:
    """Parallelism cap from HOPFIND_THREADS (positive integer, default 1).

    All kernels are deterministic and the reference executor is sequential;
    the cap is validated here so a bad value fails loudly at startup.
    """
    raw = os.environ.get("HOPFIND_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"HOPFIND_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise ValueError(f"HOPFIND_THREADS must be a positive integer, got {raw!r}")
    return n
