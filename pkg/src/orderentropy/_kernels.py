"""Hot combinatorial kernels.

Each kernel exists in two flavours: a plain Python/numpy implementation
(``*_py``) and, when numba is importable, an ``@njit``-compiled twin
(``*_jit``).  The active backend is chosen once at import time: setting the
environment variable ``ORDERENTROPY_DISABLE_NUMBA=1`` forces the pure path,
as does numba simply being absent.  ``benchmarks/bench_kernels.py`` times the
two flavours side by side.

Conventions: posets enter as ``n x n`` boolean strict-order matrices
(``lt[i, j]`` means element ``i`` lies strictly below ``j``, transitively
closed, 0-based) or as per-element predecessor bitmasks.  Sizes are capped by
the callers (n <= 12), so masks and counts fit comfortably in int64.
"""

import os

import numpy as np

_flag = os.environ.get("ORDERENTROPY_DISABLE_NUMBA", "").strip().lower()
NUMBA_DISABLED = _flag in {"1", "true", "yes", "on"}

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env flag instead
    HAVE_NUMBA = False

NUMBA_ENABLED = HAVE_NUMBA and not NUMBA_DISABLED


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "python"


def predecessor_masks(lt: np.ndarray) -> np.ndarray:
    """Per-element bitmask of strict predecessors, from a closed lt matrix."""
    n = lt.shape[0]
    masks = np.zeros(n, dtype=np.int64)
    for j in range(n):
        m = 0
        for i in range(n):
            if lt[i, j]:
                m |= 1 << i
        masks[j] = m
    return masks


def count_extensions_py(pred: np.ndarray) -> int:
    """Number of linear extensions, by memoized backtracking.

    Walks placement prefixes (down-closed subsets, encoded as bitmasks) and
    shares counts between prefixes that placed the same element set, so no
    extension is ever materialized.  O(2^n * n) time, 2^n memo words.
    """
    n = pred.shape[0]
    size = 1 << n
    counts = np.zeros(size, dtype=np.int64)
    counts[0] = 1
    for mask in range(size):
        c = counts[mask]
        if c == 0:
            continue
        for j in range(n):
            bit = 1 << j
            if mask & bit == 0 and (pred[j] & ~mask) == 0:
                counts[mask | bit] += c
    return counts[size - 1]


def enumerate_extensions_py(pred: np.ndarray, count: int, n: int) -> np.ndarray:
    """All linear extensions as root-state rows, by iterative DFS backtracking.

    Row ``r`` holds the rank permutation of the r-th extension found
    (``row[e] == k`` when element ``e`` was placed k-th); the caller supplies
    ``count`` (from :func:`count_extensions_py`) to preallocate the output.
    """
    out = np.zeros((count, n), dtype=np.int8)
    if n == 0:
        return out
    cand = np.zeros(n, dtype=np.int64)
    placed = np.full(n, -1, dtype=np.int64)
    perm = np.zeros(n, dtype=np.int8)
    mask = 0
    d = 0
    row = 0
    while d >= 0:
        j = cand[d]
        found = -1
        while j < n:
            bit = 1 << j
            if mask & bit == 0 and (pred[j] & ~mask) == 0:
                found = j
                break
            j += 1
        if found == -1:
            cand[d] = 0
            d -= 1
            if d >= 0:
                mask &= ~(1 << placed[d])
                cand[d] = placed[d] + 1
            continue
        placed[d] = found
        perm[found] = d + 1
        mask |= 1 << found
        if d == n - 1:
            out[row, :] = perm
            row += 1
            mask &= ~(1 << found)
            cand[d] = found + 1
        else:
            d += 1
    return out


def find_embedding_py(lt_a: np.ndarray, lt_b: np.ndarray, require_iso: bool) -> bool:
    """Is there a permutation mapping a's relation into (onto, if iso) b's?

    Backtracking over injective assignments with incremental consistency
    checks against every previously assigned element.
    """
    n = lt_a.shape[0]
    if n == 0:
        return True
    sigma = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    cand = np.zeros(n, dtype=np.int64)
    d = 0
    while d >= 0:
        t = cand[d]
        found = -1
        while t < n:
            if not used[t]:
                ok = True
                for k in range(d):
                    s = sigma[k]
                    if lt_a[k, d] and not lt_b[s, t]:
                        ok = False
                    elif lt_a[d, k] and not lt_b[t, s]:
                        ok = False
                    elif require_iso and lt_b[s, t] and not lt_a[k, d]:
                        ok = False
                    elif require_iso and lt_b[t, s] and not lt_a[d, k]:
                        ok = False
                    if not ok:
                        break
                if ok:
                    found = t
                    break
            t += 1
        if found == -1:
            cand[d] = 0
            d -= 1
            if d >= 0:
                used[sigma[d]] = False
                cand[d] = sigma[d] + 1
                sigma[d] = -1
            continue
        sigma[d] = found
        used[found] = True
        if d == n - 1:
            return True
        d += 1
    return False


def _has_n_quadruple_loop(lt: np.ndarray) -> bool:
    # Induced sub-order on {x, y, u, v} equal to the N: the relations are
    # exactly x < y, u < v, x < v, with the remaining pairs incomparable.
    n = lt.shape[0]
    for x in range(n):
        for y in range(n):
            if not lt[x, y]:
                continue
            for u in range(n):
                if u == y or lt[u, y] or lt[y, u]:
                    continue
                if u == x or lt[x, u] or lt[u, x]:
                    continue
                for v in range(n):
                    if not (lt[u, v] and lt[x, v]):
                        continue
                    if v == y or lt[y, v] or lt[v, y]:
                        continue
                    return True
    return False


def has_n_quadruple_py(lt: np.ndarray) -> bool:
    """Vectorized induced-N detection for the no-numba path."""
    n = lt.shape[0]
    if n < 4:
        return False
    incomp = ~(lt | lt.T)
    np.fill_diagonal(incomp, False)
    hit = (
        lt[:, :, None, None]  # x < y
        & lt[None, None, :, :]  # u < v
        & lt[:, None, None, :]  # x < v
        & incomp.T[None, :, :, None]  # y incomparable u
        & incomp[:, None, :, None]  # x incomparable u
        & incomp[None, :, None, :]  # y incomparable v
    )
    return bool(hit.any())


if HAVE_NUMBA:
    count_extensions_jit = njit(cache=True)(count_extensions_py)
    enumerate_extensions_jit = njit(cache=True)(enumerate_extensions_py)
    find_embedding_jit = njit(cache=True)(find_embedding_py)
    has_n_quadruple_jit = njit(cache=True)(_has_n_quadruple_loop)
else:
    count_extensions_jit = None
    enumerate_extensions_jit = None
    find_embedding_jit = None
    has_n_quadruple_jit = None

if NUMBA_ENABLED:
    count_extensions_kernel = count_extensions_jit
    enumerate_extensions_kernel = enumerate_extensions_jit
    find_embedding_kernel = find_embedding_jit
    has_n_quadruple_kernel = has_n_quadruple_jit
else:
    count_extensions_kernel = count_extensions_py
    enumerate_extensions_kernel = enumerate_extensions_py
    find_embedding_kernel = find_embedding_py
    has_n_quadruple_kernel = has_n_quadruple_py
