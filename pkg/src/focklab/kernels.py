"""Backend selection for the fermionic kernels.

The compiled module is used when it imports; set ``FOCKLAB_PURE=1`` to
force the pure-Python implementation.
"""
import os

from . import _kernels_py

if os.environ.get("FOCKLAB_PURE", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
black_positions2 = _impl.black_positions2
psi = _impl.psi
psi_star = _impl.psi_star
psi_psi_star = _impl.psi_psi_star
bead_moves = _impl.bead_moves


def available_backends():
    """Every kernel module importable in this environment, pure Python first."""
    out = [_kernels_py]
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out.append(_ckernels)
    return out
