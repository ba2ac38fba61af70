"""Search kernels for the sequence-number (mu) scan.

The beta-scheme encode is a least-witness search: scan x = 0, 1, 2, ...
and test a conjunction of remainder equations against the Cantor unpairing
of x. That inner loop dominates beta-scheme runtime (tens of millions of
candidates for short sequences), so it is JIT-compiled with numba by
default. A vectorized pure-numpy path and a pure-python reference are
selectable with the GODELLAB_KERNEL environment variable:

    GODELLAB_KERNEL=numba   (default when numba imports)
    GODELLAB_KERNEL=numpy
    GODELLAB_KERNEL=python

The compiled paths work in int64; calls whose cutoff or targets would
overflow int64 silently take the python path, which is exact at any size.
benchmarks/bench_mu_search.py compares the three.
"""

from __future__ import annotations

import math
import os

import numpy as np

_ENV_VAR = "GODELLAB_KERNEL"
_BACKENDS = ("numba", "numpy", "python")

_backend: str | None = None
_numba_fn = None

# int64 safety: candidate x, 8x+1, and the largest modulus (1+(n+1)*x) must
# all stay below 2**63, and the float sqrt seed must stay in the exact
# range of float64, so compiled paths are used only below these limits.
_INT64_PRODUCT_LIMIT = 1 << 62
_FLOAT_SEED_LIMIT = 1 << 49
_MAX_TARGETS = 64


def _choose_default() -> str:
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


def active_backend() -> str:
    global _backend
    if _backend is None:
        requested = os.environ.get(_ENV_VAR, "").strip().lower()
        if requested:
            if requested not in _BACKENDS:
                raise ValueError(
                    f"{_ENV_VAR} must be one of {_BACKENDS}, got {requested!r}"
                )
            _backend = requested
        else:
            _backend = _choose_default()
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in _BACKENDS:
        raise ValueError(f"backend must be one of {_BACKENDS}, got {name!r}")
    _backend = name


# ---------------------------------------------------------------------------
# Pure python reference (exact at any size; also the oracle in tests)


def cantor_unpair(x: int) -> tuple[int, int]:
    """Invert x = (u+v)(u+v+1)/2 + v."""
    w = (math.isqrt(8 * x + 1) - 1) // 2
    v = x - w * (w + 1) // 2
    return w - v, v


def cantor_pair(u: int, v: int) -> int:
    w = u + v
    return w * (w + 1) // 2 + v


def mu_search_python(targets: list[int], cutoff: int, start: int = 0) -> int:
    """First x in [start, cutoff) whose beta projections match targets, else -1.

    targets[i] is compared against first(x) mod (1 + (i+1)*second(x)).
    """
    for x in range(start, cutoff):
        u, v = cantor_unpair(x)
        for i, t in enumerate(targets):
            if u % (1 + (i + 1) * v) != t:
                break
        else:
            return x
    return -1


# ---------------------------------------------------------------------------
# Numpy path: chunked candidate vectors


def mu_search_numpy(targets: list[int], cutoff: int, start: int = 0,
                    max_chunk: int = 1 << 19) -> int:
    tgt = np.asarray(targets, dtype=np.int64)
    n = tgt.shape[0]
    lo = start
    chunk = 1 << 12  # grow chunks so small searches stay cheap
    while lo < cutoff:
        hi = min(lo + chunk, cutoff)
        chunk = min(chunk * 4, max_chunk)
        x = np.arange(lo, hi, dtype=np.int64)
        w = ((np.sqrt(8.0 * x + 1.0)).astype(np.int64) - 1) // 2
        # the float sqrt is only a seed; fix it up exactly in integers
        w += (w + 1) * (w + 2) // 2 <= x
        w -= w * (w + 1) // 2 > x
        v = x - w * (w + 1) // 2
        u = w - v
        mask = np.ones(x.shape[0], dtype=bool)
        alive = True
        for i in range(n):
            np.logical_and(mask, u % (1 + (i + 1) * v) == tgt[i], out=mask)
            if not mask.any():
                alive = False
                break
        if alive:
            idx = np.flatnonzero(mask)
            if idx.size:
                return lo + int(idx[0])
        lo = hi
    return -1


# ---------------------------------------------------------------------------
# Numba path, compiled lazily on first use


def _get_numba_fn():
    global _numba_fn
    if _numba_fn is None:
        from numba import njit

        @njit(cache=True)
        def _mu(targets, start, cutoff):  # pragma: no cover - compiled
            n = targets.shape[0]
            for x in range(start, cutoff):
                w = (int(math.sqrt(8.0 * x + 1.0)) - 1) // 2
                while (w + 1) * (w + 2) // 2 <= x:
                    w += 1
                while w * (w + 1) // 2 > x:
                    w -= 1
                v = x - w * (w + 1) // 2
                u = w - v
                ok = True
                for i in range(n):
                    if u % (1 + (i + 1) * v) != targets[i]:
                        ok = False
                        break
                if ok:
                    return x
            return -1

        _numba_fn = _mu
        # warm the JIT so the first real search is not billed compile time
        _numba_fn(np.array([0], dtype=np.int64), 0, 2)
    return _numba_fn


def mu_search(targets: list[int], cutoff: int, start: int = 0) -> int:
    """Least x in [start, cutoff) matching targets under beta, else -1."""
    if cutoff <= start:
        return -1
    if not targets:
        return start  # no conjuncts: everything matches
    fits_int64 = (
        len(targets) <= _MAX_TARGETS
        and cutoff <= _FLOAT_SEED_LIMIT
        and (len(targets) + 1) * cutoff <= _INT64_PRODUCT_LIMIT
        and all(0 <= t <= _INT64_PRODUCT_LIMIT for t in targets)
    )
    backend = active_backend() if fits_int64 else "python"
    if backend == "numba":
        tgt = np.asarray(targets, dtype=np.int64)
        return int(_get_numba_fn()(tgt, start, cutoff))
    if backend == "numpy":
        return mu_search_numpy(targets, cutoff, start)
    return mu_search_python(targets, cutoff, start)
