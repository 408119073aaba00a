"""Kernel backend selection.

The compiled extension is preferred; the pure-Python module is a
drop-in fallback. Set PLANARSPAN_PURE=1 to force the fallback (used by
the benchmark and the backend-agreement tests).
"""

import os

if os.environ.get("PLANARSPAN_PURE"):
    from . import _pure as _impl
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND
orient_sign = _impl.orient_sign
segments_properly_cross = _impl.segments_properly_cross
crossing_pairs = _impl.crossing_pairs


def load_backend(name):
    """Explicitly load one backend module ("pure" or "compiled")."""
    if name == "pure":
        from . import _pure
        return _pure
    if name == "compiled":
        from . import _fast  # type: ignore[attr-defined]
        return _fast
    raise ValueError(f"unknown backend {name!r}")
