"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``BERNCERT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
power_sum_mod = _pykernels.power_sum_mod

if not os.environ.get("BERNCERT_PURE_PYTHON"):
    try:
        from ._ckernels import power_sum_mod  # noqa: F811
    except ImportError:
        pass
    else:
        BACKEND = "cython"

__all__ = ["BACKEND", "power_sum_mod"]
