"""Kernel backend selection.

Hot inner loops (permutation sums, Ryser, projector action) exist in two
flavours: numba-compiled and pure numpy.  The active flavour is chosen by,
in order of precedence:

1. ``set_backend("numba" | "numpy" | None)`` -- programmatic override,
2. the ``IMMDFUN_BACKEND`` environment variable (``numba`` or ``numpy``),
3. numba availability (used when importable, numpy otherwise).
"""

import os

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised on numba-free installs
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


_forced: str | None = None


def set_backend(name: str | None) -> None:
    """Force a backend for this process; ``None`` restores automatic choice."""
    global _forced
    if name not in (None, "numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise ValueError("numba backend requested but numba is not installed")
    _forced = name


def active_backend() -> str:
    if _forced is not None:
        return _forced
    env = os.environ.get("IMMDFUN_BACKEND", "").strip().lower()
    if env in ("numba", "numpy"):
        if env == "numba" and not HAVE_NUMBA:
            return "numpy"
        return env
    if os.environ.get("IMMDFUN_NO_NUMBA", ""):
        return "numpy"
    return "numba" if HAVE_NUMBA else "numpy"


def use_numba() -> bool:
    return active_backend() == "numba"
