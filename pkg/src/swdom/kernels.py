"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or
when ``SWDOM_PURE_PYTHON`` is set to a non-empty value, the numpy
implementation in ``_pykernels`` takes over.  Both expose the same functions
and return bit-identical results.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

from . import _pykernels


def load(name: str | None = None) -> ModuleType:
    """Return the kernel module ``"cython"``/``"python"``, or the preferred one if ``None``."""
    if name == "python":
        return _pykernels
    try:
        return importlib.import_module("swdom._ckernels")
    except ImportError:
        if name == "cython":
            raise
        return _pykernels


backend: ModuleType = _pykernels if os.environ.get("SWDOM_PURE_PYTHON") else load()
BACKEND: str = backend.BACKEND
