"""Backend selection for the GF(p) kernels.

The compiled extension ``revcrit._ckernels`` is used when it was built;
otherwise the pure-Python module is used. ``BACKEND`` names the active one.
"""

from __future__ import annotations

from types import ModuleType

from revcrit import _pykernels

try:
    from revcrit import _ckernels as _active
    BACKEND = "cython"
except ImportError:  # extension not built
    _active = _pykernels
    BACKEND = "python"


def backend_module(name: str | None = None) -> ModuleType:
    """Return the kernel module for ``name`` ("cython", "python") or the active one."""
    if name is None:
        return _active
    if name == "python":
        return _pykernels
    if name == "cython":
        from revcrit import _ckernels
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


gcd_modp = _active.gcd_modp
inv_modp = _active.inv_modp
