"""Selects the minimal-L1 solver kernel at import time.

The compiled extension (_minl1_cy) is preferred when present; the
pure-Python twin (_minl1_py) is the fallback.  COPRIMETRIC_SOLVER=py
forces the fallback, COPRIMETRIC_SOLVER=cy demands the extension and
fails loudly when it is missing.  Both kernels implement the identical
contract; the test suite runs the full solver checks against each.
"""

from __future__ import annotations

import os

_choice = os.environ.get("COPRIMETRIC_SOLVER", "auto").strip().lower()

if _choice in ("py", "python", "pure"):
    from . import _minl1_py as _impl
elif _choice in ("cy", "cython", "compiled", "c"):
    from . import _minl1_cy as _impl  # type: ignore[no-redef]
elif _choice in ("auto", ""):
    try:
        from . import _minl1_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _minl1_py as _impl  # type: ignore[no-redef]
else:
    raise RuntimeError(
        f"COPRIMETRIC_SOLVER={_choice!r} not understood (use auto, py, or cy)"
    )

solve_two = _impl.solve_two
solve_general = _impl.solve_general


def active_kernel() -> str:
    """Name of the kernel in use: 'python' or 'cython'."""
    return _impl.BACKEND
