"""Kernel selection at import time.

The compiled Cython kernel is preferred; the pure-Python twin is the
fallback when the extension was not built.  Set FRAGILETAG_BACKEND to
"python" or "compiled" to force one; forcing "compiled" raises if the
extension is unavailable.
"""

import os

from . import _select_py

_requested = os.environ.get("FRAGILETAG_BACKEND", "").strip().lower()

if _requested not in ("", "python", "compiled"):
    raise ImportError(
        f"FRAGILETAG_BACKEND must be 'python' or 'compiled', not {_requested!r}")

if _requested == "python":
    _impl = _select_py
    BACKEND = "python"
else:
    try:
        from . import _select_c as _impl
        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        _impl = _select_py
        BACKEND = "python"

select_positions_kernel = _impl.select_positions_kernel
