"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``POWERGRAPH_BACKEND=python`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("POWERGRAPH_BACKEND", "").lower() == "python":
    kernels = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels
        BACKEND = "cython"
    except ImportError:
        kernels = _pykernels
        BACKEND = "python"


def available() -> dict:
    """All importable kernel modules keyed by backend name."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
