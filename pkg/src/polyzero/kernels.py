"""Backend selection for the hot kernels.

The compiled ``_speedups`` extension is used when it imports; otherwise
the pure-Python ``_purepy`` module is used.  Setting ``POLYZERO_PURE=1``
forces the pure backend.  ``BACKEND`` names the active one.
"""

import os

from . import _purepy

if os.environ.get("POLYZERO_PURE", "") not in ("", "0"):
    _impl = _purepy
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _purepy

BACKEND = "compiled" if _impl is not _purepy else "pure"

homogeneous_eval = _impl.homogeneous_eval
sign_at = _impl.sign_at
sturm_variations = _impl.sturm_variations
sturm_variations_inf = _impl.sturm_variations_inf
aberth = _impl.aberth


def backends():
    """Return ``{name: module}`` for every importable backend."""
    found = {"pure": _purepy}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        found["compiled"] = _speedups
    return found
