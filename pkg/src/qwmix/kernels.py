"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the NumPy
fallback is used.  Set ``QWMIX_FORCE_PY_KERNELS=1`` to force the fallback
(used by the backend-agreement tests and the benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("QWMIX_FORCE_PY_KERNELS"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

flatness_profile = _impl.flatness_profile
cycle_eps_profile = _impl.cycle_eps_profile
