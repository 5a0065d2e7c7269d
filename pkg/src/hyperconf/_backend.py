"""Pick the kernel implementation once, at import.

``HYPERCONF_BACKEND=python`` forces the pure-Python fallback; otherwise the
compiled extension is used when it imports.
"""

import os

from . import _pykernels

_requested = os.environ.get("HYPERCONF_BACKEND", "").strip().lower()

if _requested in ("python", "py", "pure"):
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        if _requested in ("cython", "c", "compiled"):
            raise
        kernels = _pykernels

NAME = kernels.NAME
