"""Dense-matrix kernels behind the poset and lattice types.

The compiled extension is used when it was built and imports cleanly;
otherwise the numpy versions are used. Set ``BIRKHOFF_PURE=1`` to force
the fallback. ``BACKEND`` names the active implementation.
"""
import os

from . import _pykernels

_FORCE_PURE = os.environ.get("BIRKHOFF_PURE", "").strip() not in ("", "0")

try:
    if _FORCE_PURE:
        raise ImportError("pure backend requested")
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

transitive_closure = _impl.transitive_closure
cover_matrix = _impl.cover_matrix
lattice_tables = _impl.lattice_tables
distributive_witness = _impl.distributive_witness

__all__ = [
    "BACKEND",
    "transitive_closure",
    "cover_matrix",
    "lattice_tables",
    "distributive_witness",
]
