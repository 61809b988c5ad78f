"""Hot loops with a compiled backend and a numpy fallback.

The compiled extension is used when it was built and importable; set
``CONSENSUS_LIMITS_PURE=1`` to force the fallback.
"""
import os

from . import _fallback

fallback = _fallback
compiled = None

if not os.environ.get("CONSENSUS_LIMITS_PURE"):
    try:
        from . import _ext as compiled
    except ImportError:
        compiled = None

_active = compiled if compiled is not None else _fallback
BACKEND = "cython" if compiled is not None else "numpy"
FILTERS = _fallback.FILTERS

scan = _active.scan
count_connected = _active.count_connected
em_run = _active.em_run


def backends() -> dict:
    """Every available backend module, keyed by name."""
    out = {"numpy": _fallback}
    if compiled is not None:
        out["cython"] = compiled
    return out
