"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python twin.  Setting ``CAPUT_KIT_PURE=1`` forces the Python version.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("CAPUT_KIT_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "compiled"

cycle_multiplicities = _impl.cycle_multiplicities
cycle_type_histogram = _impl.cycle_type_histogram
count_invariant_blockings = _impl.count_invariant_blockings

__all__ = ["BACKEND", "cycle_multiplicities", "cycle_type_histogram", "count_invariant_blockings"]
