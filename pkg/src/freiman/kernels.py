"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
twin is used.  Setting ``FREIMAN_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("FREIMAN_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

sumset = _impl.sumset
sumset_size = _impl.sumset_size
power_sizes = _impl.power_sizes
minimal_rows = _impl.minimal_rows
rank = _impl.rank

__all__ = ["BACKEND", "sumset", "sumset_size", "power_sizes", "minimal_rows", "rank"]
