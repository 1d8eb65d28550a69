"""Pick the kernel implementation at import time.

The compiled ``_kernels`` extension is used when it was built; otherwise the
numpy fallback. Set ``MADFC_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _kernels_py

python_kernels = _kernels_py

try:
    from . import _kernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and not os.environ.get("MADFC_PURE_PYTHON"):
    kernels = compiled_kernels
    BACKEND = "cython"
else:
    kernels = python_kernels
    BACKEND = "python"


def available_backends():
    """Return ``{name: module}`` for every importable kernel backend."""
    found = {"python": python_kernels}
    if compiled_kernels is not None:
        found["cython"] = compiled_kernels
    return found
