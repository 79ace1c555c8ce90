"""Codeword-enumeration kernels: numba-accelerated with pure-numpy twins.

Both backends walk the same enumeration order and return identical results,
including tie-breaking (first index attaining the minimum weight). The
backend is chosen by the TORICODE_BACKEND environment variable ("numba" or
"numpy"); default is numba when importable.

Enumeration order for the exhaustive scan: messages are projectively
normalized (first nonzero coefficient = 1) and ordered by the position of
that leading coefficient, then lexicographically by the remaining digits
(last digit fastest). Consecutive messages differ in few digits, so each
step costs a handful of scaled-row additions instead of a full k x N
product.
"""

from __future__ import annotations

import os
from itertools import product as _iproduct

import numpy as np

os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")

try:
    import numba
    from numba import njit, prange

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

ENV_BACKEND = "TORICODE_BACKEND"
_BLOCK_CAP = 1 << 16  # rows per vectorized block in the numpy twins
_CHUNK = 1 << 15      # messages per parallel task in the numba path


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if HAS_NUMBA else ("numpy",)


def default_backend() -> str:
    env = os.environ.get(ENV_BACKEND, "").strip().lower()
    if env:
        return resolve_backend(env)
    return "numba" if HAS_NUMBA else "numpy"


def resolve_backend(name: str | None) -> str:
    if name is None:
        return default_backend()
    name = name.lower()
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}; use 'numba' or 'numpy'")
    if name == "numba" and not HAS_NUMBA:
        raise ValueError("numba backend requested but numba is not importable")
    return name


def set_num_threads(threads: int | None) -> None:
    if threads is None or not HAS_NUMBA:
        return
    limit = numba.config.NUMBA_NUM_THREADS
    numba.set_num_threads(max(1, min(int(threads), limit)))


def scaled_rows(spec, generator: np.ndarray) -> np.ndarray:
    """(k, q, N) uint8 table: scaled[i, v, :] = v * generator[i, :] over GF(q)."""
    q = spec.q
    spec.kernel_tables()  # raises early if q is too large for uint8 kernels
    vals = np.arange(q, dtype=np.int64)
    table = spec.mul_arrays(vals[None, :, None], generator[:, None, :])
    return np.ascontiguousarray(table.astype(np.uint8))


# ---------------------------------------------------------------------------
# numba kernels
# ---------------------------------------------------------------------------

if HAS_NUMBA:

    @njit(cache=True, parallel=True)
    def _exhaustive_scan_numba(scaled, add_t, sub_t, tasks, out_w, out_idx):
        k = scaled.shape[0]
        q = scaled.shape[1]
        n_cols = scaled.shape[2]
        for ti in prange(tasks.shape[0]):
            lead = tasks[ti, 0]
            start = tasks[ti, 1]
            stop = tasks[ti, 2]
            free = k - 1 - lead
            digits = np.zeros(free, np.int64)
            rem = start
            for i in range(free - 1, -1, -1):
                digits[i] = rem % q
                rem //= q
            c = scaled[lead, 1].copy()
            for i in range(free):
                dv = digits[i]
                if dv != 0:
                    row = lead + 1 + i
                    for t in range(n_cols):
                        c[t] = add_t[c[t], scaled[row, dv, t]]
            best_w = n_cols + 1
            best_j = np.int64(-1)
            j = start
            while True:
                wt = 0
                for t in range(n_cols):
                    if c[t] != 0:
                        wt += 1
                if wt < best_w:
                    best_w = wt
                    best_j = j
                j += 1
                if j >= stop:
                    break
                pos = free - 1
                while True:
                    old = digits[pos]
                    new = old + 1
                    if new == q:
                        new = 0
                    digits[pos] = new
                    d = sub_t[new, old]
                    row = lead + 1 + pos
                    for t in range(n_cols):
                        c[t] = add_t[c[t], scaled[row, d, t]]
                    if new != 0:
                        break
                    pos -= 1
            out_w[ti] = best_w
            out_idx[ti] = best_j

    @njit(cache=True, parallel=True)
    def _isd_level_numba(scaled, add_t, sub_t, supports, pivot_rows, out_w, out_idx):
        n_sup, w = supports.shape
        q = scaled.shape[1]
        n_cols = scaled.shape[2]
        total = np.int64(1)
        for _ in range(w - 1):
            total *= q - 1
        for si in prange(n_sup):
            sup = supports[si]
            hits = 0
            for i in range(w):
                if sup[i] < pivot_rows:
                    hits += 1
            c = scaled[sup[0], 1].copy()
            for i in range(1, w):
                for t in range(n_cols):
                    c[t] = add_t[c[t], scaled[sup[i], 1, t]]
            vals = np.ones(w, np.int64)
            best_w = n_cols + w + 1
            best_j = np.int64(-1)
            j = np.int64(0)
            while True:
                wt = hits
                for t in range(n_cols):
                    if c[t] != 0:
                        wt += 1
                if wt < best_w:
                    best_w = wt
                    best_j = j
                j += 1
                if j >= total:
                    break
                pos = w - 1
                while True:
                    old = vals[pos]
                    new = old + 1
                    if new == q:
                        new = 1
                    vals[pos] = new
                    d = sub_t[new, old]
                    for t in range(n_cols):
                        c[t] = add_t[c[t], scaled[sup[pos], d, t]]
                    if new != 1:
                        break
                    pos -= 1
            out_w[si] = best_w
            out_idx[si] = best_j


# ---------------------------------------------------------------------------
# numpy twins
# ---------------------------------------------------------------------------

def _expand_blocks(scaled, rows, add_t, lo, cap=_BLOCK_CAP):
    """Yield (offset, block) chunks of all digit combinations over `rows`.

    Each row's digit runs over lo..q-1; combinations are ordered with the
    first row most significant. Blocks arrive in ascending offset order.
    """
    q = scaled.shape[1]
    n_cols = scaled.shape[2]
    if not rows:
        yield 0, np.zeros((1, n_cols), dtype=np.uint8)
        return
    vals = q - lo
    t = 1
    while t < len(rows) and vals ** (t + 1) <= cap:
        t += 1
    tail = rows[-t:]
    block = scaled[tail[0], lo:q, :]
    for row in tail[1:]:
        block = add_t[block[:, None, :], scaled[row, lo:q, :][None, :, :]]
        block = block.reshape(-1, n_cols)
    head = rows[:-t]
    if not head:
        yield 0, block
        return
    span = block.shape[0]
    for combo_idx, combo in enumerate(_iproduct(range(lo, q), repeat=len(head))):
        head_cw = np.zeros(n_cols, dtype=np.uint8)
        for row, val in zip(head, combo):
            if val:
                head_cw = add_t[head_cw, scaled[row, val]]
        yield combo_idx * span, add_t[head_cw[None, :], block]


def _exhaustive_scan_numpy(scaled, add_t, q, max_messages):
    k, _, n_cols = scaled.shape
    best_w = n_cols + 1
    best_idx = -1
    base = 0
    for lead in range(k):
        if base >= max_messages:
            break
        count = min(q ** (k - 1 - lead), max_messages - base)
        lead_row = scaled[lead, 1]
        for off, blk in _expand_blocks(scaled, list(range(lead + 1, k)), add_t, 0):
            if off >= count:
                break
            take = min(blk.shape[0], count - off)
            cw = add_t[lead_row[None, :], blk[:take]]
            weights = np.count_nonzero(cw, axis=1)
            wmin = int(weights.min())
            if wmin < best_w:
                best_w = wmin
                best_idx = base + off + int(np.argmin(weights))
        base += q ** (k - 1 - lead)
    return best_w, best_idx


def _isd_level_numpy(scaled, add_t, supports, pivot_rows):
    n_sup, w = supports.shape
    n_cols = scaled.shape[2]
    out_w = np.empty(n_sup, dtype=np.int64)
    out_idx = np.empty(n_sup, dtype=np.int64)
    for si in range(n_sup):
        sup = supports[si]
        hits = int(np.sum(sup < pivot_rows))
        base = scaled[sup[0], 1]
        best_w = n_cols + w + 1
        best_j = -1
        for off, blk in _expand_blocks(scaled, [int(r) for r in sup[1:]], add_t, 1):
            cw = add_t[base[None, :], blk]
            weights = hits + np.count_nonzero(cw, axis=1)
            wmin = int(weights.min())
            if wmin < best_w:
                best_w = wmin
                best_j = off + int(np.argmin(weights))
        out_w[si] = best_w
        out_idx[si] = best_j
    return out_w, out_idx


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def exhaustive_scan(scaled, add_t, sub_t, q, max_messages, backend=None):
    """Minimum weight over the first max_messages normalized messages.

    Returns (weight, enumeration_index); the index is the first one attaining
    the minimum, identically for both backends and any thread count.
    """
    backend = resolve_backend(backend)
    if backend == "numpy":
        return _exhaustive_scan_numpy(scaled, add_t, q, max_messages)
    k = scaled.shape[0]
    tasks = []
    offsets = []
    base = 0
    for lead in range(k):
        if base >= max_messages:
            break
        count = min(q ** (k - 1 - lead), max_messages - base)
        pos = 0
        while pos < count:
            step = min(_CHUNK, count - pos)
            tasks.append((lead, pos, pos + step))
            offsets.append(base)
            pos += step
        base += q ** (k - 1 - lead)
    tasks_arr = np.array(tasks, dtype=np.int64).reshape(-1, 3)
    out_w = np.empty(len(tasks), dtype=np.int64)
    out_idx = np.empty(len(tasks), dtype=np.int64)
    _exhaustive_scan_numba(scaled, add_t, sub_t, tasks_arr, out_w, out_idx)
    best = min(
        (int(out_w[i]), offsets[i] + int(out_idx[i])) for i in range(len(tasks))
    )
    return best


def isd_level_scan(scaled, add_t, sub_t, supports, pivot_rows, backend=None):
    """Per-support minimum weight over all nonzero value patterns.

    `scaled` covers the non-pivot columns only; the weight on the pivot
    columns equals the number of support rows below `pivot_rows` and is
    added by the kernel.
    """
    backend = resolve_backend(backend)
    supports = np.ascontiguousarray(supports, dtype=np.int64)
    if backend == "numpy":
        return _isd_level_numpy(scaled, add_t, supports, pivot_rows)
    out_w = np.empty(supports.shape[0], dtype=np.int64)
    out_idx = np.empty(supports.shape[0], dtype=np.int64)
    _isd_level_numba(scaled, add_t, sub_t, supports, pivot_rows, out_w, out_idx)
    return out_w, out_idx
