"""Integer kernels for the weight engine.

Every kernel has two implementations: a numba ``@njit`` version and a plain
numpy/Python version.  ``LIESQ_NUMBA=0`` forces the fallback; otherwise the
jitted path is used whenever numba imports.  Both paths must agree bit for bit
(see ``tests/test_kernels.py`` and ``benchmarks/bench_kernels.py``).
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    NUMBA_AVAILABLE = False


def jit_enabled() -> bool:
    """True when the numba kernels should be used (read on every call)."""
    if not NUMBA_AVAILABLE:
        return False
    return os.environ.get("LIESQ_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


# ---------------------------------------------------------------------------
# key encoding: integer weight vectors <-> int64 keys for sorted lookups

def key_params(points: np.ndarray, slack: int = 0):
    """Return ``(offset, base)`` such that every row of ``points`` (widened by
    ``slack`` in each coordinate) maps injectively into a non-negative int64."""
    if points.size == 0:
        return 1, 3
    m = int(np.abs(points).max()) + slack + 1
    base = 2 * m + 1
    ell = points.shape[1]
    if base ** ell >= 2 ** 62:
        raise OverflowError("weight coordinates too large for int64 keys")
    return m, base


def encode(points: np.ndarray, offset: int, base: int) -> np.ndarray:
    pts = np.asarray(points, dtype=np.int64)
    keys = np.zeros(pts.shape[0], dtype=np.int64)
    for j in range(pts.shape[1] - 1, -1, -1):
        keys = keys * base + (pts[:, j] + offset)
    return keys


# ---------------------------------------------------------------------------
# reflection to the dominant chamber

def _reduce_batch_py(points: np.ndarray, cartan: np.ndarray):
    v = np.array(points, dtype=np.int64, copy=True)
    count = np.zeros(v.shape[0], dtype=np.int64)
    if v.shape[0] == 0:
        return v, count
    active = np.nonzero((v < 0).any(axis=1))[0]
    while active.size:
        sub = v[active]
        idx = np.argmax(sub < 0, axis=1)
        coef = sub[np.arange(sub.shape[0]), idx]
        sub -= coef[:, None] * cartan[idx]
        v[active] = sub
        count[active] += 1
        still = (sub < 0).any(axis=1)
        active = active[still]
    return v, count


if NUMBA_AVAILABLE:

    @njit(cache=True)
    def _reduce_batch_nb(points, cartan):
        n, ell = points.shape
        v = points.copy()
        count = np.zeros(n, dtype=np.int64)
        for r in range(n):
            c = 0
            while True:
                i = -1
                for j in range(ell):
                    if v[r, j] < 0:
                        i = j
                        break
                if i < 0:
                    break
                coef = v[r, i]
                for j in range(ell):
                    v[r, j] -= coef * cartan[i, j]
                c += 1
            count[r] = c
        return v, count


def reduce_batch(points: np.ndarray, cartan: np.ndarray):
    """Reflect each row into the closed dominant chamber.

    Returns the reflected rows and the number of simple reflections used
    (its parity is the sign of the Weyl element).
    """
    pts = np.ascontiguousarray(points, dtype=np.int64)
    cm = np.ascontiguousarray(cartan, dtype=np.int64)
    if pts.ndim != 2:
        raise ValueError("points must be a 2-d array")
    if jit_enabled():
        return _reduce_batch_nb(pts, cm)
    return _reduce_batch_py(pts, cm)


# ---------------------------------------------------------------------------
# Freudenthal recursion on dominant weights

def _freudenthal_py(dom, cartan, pos, gram, rho, keys, offset, base):
    n, ell = dom.shape
    key_index = {int(k): i for i, k in enumerate(keys)}
    mult = np.zeros(n, dtype=np.int64)
    mult[0] = 1
    top = dom[0] + rho
    top_norm = int(top @ gram @ top)
    for r in range(1, n):
        mu = dom[r]
        total = 0
        for a in range(pos.shape[0]):
            alpha = pos[a]
            k = 1
            while True:
                nu = mu + k * alpha
                d = nu.copy()
                while True:
                    neg = np.nonzero(d < 0)[0]
                    if neg.size == 0:
                        break
                    i = neg[0]
                    d = d - d[i] * cartan[i]
                if d.max() >= base - offset:
                    break
                key = 0
                for j in range(ell - 1, -1, -1):
                    key = key * base + int(d[j]) + offset
                idx = key_index.get(key)
                if idx is None:
                    break
                total += int(mult[idx]) * int(nu @ gram @ alpha)
                k += 1
        shifted = mu + rho
        den = top_norm - int(shifted @ gram @ shifted)
        num = 2 * total
        if den <= 0 or num % den:
            raise ArithmeticError("Freudenthal recursion produced a non-integer multiplicity")
        mult[r] = num // den
    return mult


if NUMBA_AVAILABLE:

    @njit(cache=True)
    def _lookup(sorted_keys, order, key):
        lo = 0
        hi = sorted_keys.shape[0]
        while lo < hi:
            mid = (lo + hi) // 2
            if sorted_keys[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        if lo < sorted_keys.shape[0] and sorted_keys[lo] == key:
            return order[lo]
        return -1

    @njit(cache=True)
    def _freudenthal_nb(dom, cartan, pos, gram, rho, keys, offset, base):
        n, ell = dom.shape
        order = np.argsort(keys)
        sorted_keys = keys[order]
        mult = np.zeros(n, dtype=np.int64)
        mult[0] = 1
        top = dom[0] + rho
        top_norm = 0
        for i in range(ell):
            for j in range(ell):
                top_norm += top[i] * gram[i, j] * top[j]
        nu = np.zeros(ell, dtype=np.int64)
        d = np.zeros(ell, dtype=np.int64)
        for r in range(1, n):
            total = 0
            for a in range(pos.shape[0]):
                k = 1
                while True:
                    for j in range(ell):
                        nu[j] = dom[r, j] + k * pos[a, j]
                        d[j] = nu[j]
                    while True:
                        i = -1
                        for j in range(ell):
                            if d[j] < 0:
                                i = j
                                break
                        if i < 0:
                            break
                        coef = d[i]
                        for j in range(ell):
                            d[j] -= coef * cartan[i, j]
                    inside = True
                    key = 0
                    for j in range(ell - 1, -1, -1):
                        if d[j] + offset >= base:
                            inside = False
                        key = key * base + d[j] + offset
                    if not inside:
                        break
                    idx = _lookup(sorted_keys, order, key)
                    if idx < 0:
                        break
                    ip = 0
                    for i in range(ell):
                        for j in range(ell):
                            ip += nu[i] * gram[i, j] * pos[a, j]
                    total += mult[idx] * ip
                    k += 1
            sn = 0
            for i in range(ell):
                for j in range(ell):
                    sn += (dom[r, i] + rho[i]) * gram[i, j] * (dom[r, j] + rho[j])
            den = top_norm - sn
            num = 2 * total
            if den <= 0 or num % den != 0:
                mult[r] = -1
            else:
                mult[r] = num // den
        return mult


def freudenthal(dom, cartan, pos, gram, rho):
    """Multiplicities of the dominant weights ``dom`` (first row = highest weight).

    ``gram`` is an integer multiple of the inner product on fundamental-weight
    coordinates; rows of ``dom`` must be sorted by non-increasing height.
    """
    dom = np.ascontiguousarray(dom, dtype=np.int64)
    cartan = np.ascontiguousarray(cartan, dtype=np.int64)
    pos = np.ascontiguousarray(pos, dtype=np.int64)
    gram = np.ascontiguousarray(gram, dtype=np.int64)
    rho = np.ascontiguousarray(rho, dtype=np.int64)
    offset, base = key_params(dom)
    keys = encode(dom, offset, base)
    if jit_enabled():
        mult = _freudenthal_nb(dom, cartan, pos, gram, rho, keys, offset, base)
        if (mult < 0).any():
            raise ArithmeticError("Freudenthal recursion produced a non-integer multiplicity")
        return mult
    return _freudenthal_py(dom, cartan, pos, gram, rho, keys, offset, base)


# ---------------------------------------------------------------------------
# pair sums: sum_i m_i * m(t - w_i) for each target t

def _pair_counts_py(weights, mults, targets, offset, base):
    keys = encode(weights, offset, base)
    order = np.argsort(keys)
    skeys = keys[order]
    smult = mults[order]
    out = np.zeros(targets.shape[0], dtype=np.int64)
    for r in range(targets.shape[0]):
        diff = encode(targets[r][None, :] - weights, offset, base)
        pos = np.searchsorted(skeys, diff)
        pos = np.minimum(pos, skeys.shape[0] - 1)
        hit = skeys[pos] == diff
        out[r] = int((mults[hit] * smult[pos[hit]]).sum())
    return out


if NUMBA_AVAILABLE:

    @njit(cache=True)
    def _pair_counts_nb(weights, mults, targets, offset, base):
        n, ell = weights.shape
        keys = np.zeros(n, dtype=np.int64)
        for i in range(n):
            key = 0
            for j in range(ell - 1, -1, -1):
                key = key * base + weights[i, j] + offset
            keys[i] = key
        order = np.argsort(keys)
        skeys = keys[order]
        out = np.zeros(targets.shape[0], dtype=np.int64)
        for r in range(targets.shape[0]):
            acc = 0
            for i in range(n):
                key = 0
                for j in range(ell - 1, -1, -1):
                    key = key * base + targets[r, j] - weights[i, j] + offset
                idx = _lookup(skeys, order, key)
                if idx >= 0:
                    acc += mults[i] * mults[idx]
            out[r] = acc
        return out


def pair_counts(weights, mults, targets):
    """For each target ``t`` return ``sum_w m(w) m(t - w)`` over the weight multiset."""
    weights = np.ascontiguousarray(weights, dtype=np.int64)
    mults = np.ascontiguousarray(mults, dtype=np.int64)
    targets = np.ascontiguousarray(targets, dtype=np.int64)
    if weights.shape[0] == 0 or targets.shape[0] == 0:
        return np.zeros(targets.shape[0], dtype=np.int64)
    slack = int(np.abs(targets).max()) if targets.size else 0
    offset, base = key_params(weights, slack=slack)
    if jit_enabled():
        return _pair_counts_nb(weights, mults, targets, offset, base)
    return _pair_counts_py(weights, mults, targets, offset, base)
