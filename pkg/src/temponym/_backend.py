"""Select the row-parsing kernel at import time.

The compiled extension is preferred; the pure-Python twin is used when the
extension is missing or when TEMPONYM_PURE=1 is set (useful for testing
and benchmarking both paths).
"""
from __future__ import annotations

import os

if os.environ.get("TEMPONYM_PURE") == "1":
    from . import _pyparse as _impl
    BACKEND = "python"
else:
    try:
        from . import _fastparse as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        from . import _pyparse as _impl  # type: ignore[no-redef]
        BACKEND = "python"

merge_rows = _impl.merge_rows
