"""Backend selection for the hot kernels.

The compiled extension ``arbcount._kernels`` is used when importable;
otherwise everything runs on ``arbcount._pykernels``. Inputs whose minors
could exceed 60 bits always take the pure-Python path, so results are exact
on either backend.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _kernels as _native
except ImportError:  # extension not built
    _native = None

_LIMIT = 1 << 120

_backend = "native" if _native is not None else "python"


def available_backends() -> list[str]:
    return ["python"] + (["native"] if _native is not None else [])


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("python", "native"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "native" and _native is None:
        raise RuntimeError("compiled kernels are not built")
    _backend = name


def fits_native(rows) -> bool:
    """Hadamard bound: every minor is at most prod(max(1, |row|)) in absolute value.

    Requiring the squared bound below 2**120 keeps minors under 2**60, and
    Bareiss cross products under 2**121, inside signed 128-bit arithmetic.
    """
    bound = 1
    for r in rows:
        s = 0
        for x in r:
            s += x * x
        if s > 1:
            bound *= s
            if bound >= _LIMIT:
                return False
    return True


def _use_native(rows) -> bool:
    return _backend == "native" and fits_native(rows)


def det(rows) -> int:
    if _use_native(rows):
        return _native.det(rows)
    return _pykernels.det(rows)


def rooted_minor_sum(rows) -> int:
    if _use_native(rows):
        return _native.rooted_minor_sum(rows)
    return _pykernels.rooted_minor_sum(rows)


def skew4_det_counts(rows) -> dict[int, int]:
    if _backend == "native" and all(abs(x) < (1 << 15) for r in rows for x in r):
        return _native.skew4_det_counts(rows)
    return _pykernels.skew4_det_counts(rows)
