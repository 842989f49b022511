"""Backend selection for the enumeration kernels.

numba is used by default.  Setting ``HERMQC_NUMBA=0`` (or running without
numba installed) switches to the pure-numpy implementations, which give the
same answers more slowly.
"""
import os

from . import _np

BACKEND = "numpy"
if os.environ.get("HERMQC_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off"):
    try:
        from . import _nb
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _nb = None
    else:
        BACKEND = "numba"
else:
    _nb = None


def _pick(name):
    return getattr(_nb if _nb is not None else _np, name)


exhaustive_units = _pick("exhaustive_units")
combo_min = _pick("combo_min")
left_patterns = _pick("left_patterns")
right_search = _pick("right_search")

BACKENDS = {"numpy": _np}
if _nb is not None:
    BACKENDS["numba"] = _nb

__all__ = ["BACKEND", "BACKENDS", "exhaustive_units", "combo_min", "left_patterns", "right_search"]
