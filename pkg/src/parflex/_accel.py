"""Pick the compiled kernel when it was built, else the pure-Python one."""
from __future__ import annotations

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

KERNELS = {"python": _kernels_py.apc_kernel}
if _compiled is not None:
    KERNELS["compiled"] = _compiled.apc_kernel

BACKEND = "compiled" if _compiled is not None else "python"


def apc_kernel(*args, backend: str | None = None, **kwargs):
    name = backend or BACKEND
    try:
        fn = KERNELS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(KERNELS)}") from None
    return fn(*args, **kwargs)
