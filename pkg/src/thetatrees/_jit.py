"""Backend switch for the compiled kernels.

Set ``THETATREES_DISABLE_JIT=1`` to run the vectorised numpy fallbacks instead
of the numba kernels. ``THETATREES_NUM_THREADS`` caps numba's thread pool.
"""

import os

# the TBB layer warns on import when the system library is too old
os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

DISABLE_JIT = os.environ.get("THETATREES_DISABLE_JIT", "0").lower() not in ("", "0", "false", "no")
HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not DISABLE_JIT


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise a pass-through decorator."""
    if HAVE_NUMBA:
        return numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


if HAVE_NUMBA and os.environ.get("THETATREES_NUM_THREADS"):
    numba.set_num_threads(int(os.environ["THETATREES_NUM_THREADS"]))


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
