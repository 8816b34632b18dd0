"""Double-precision nullspace and span routines with conditioning reports."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
import scipy.linalg as sla

GAP_THRESHOLD = 1e3
_FLOOR = 1e-15


@dataclass
class GapTracker:
    """Smallest singular value kept as nonzero vs largest treated as zero."""

    min_above: float = np.inf
    max_below: float = 0.0
    history: List[tuple] = field(default_factory=list)

    def record(self, s: np.ndarray, tol: float, label: str = ""):
        s = np.asarray(s, dtype=float)
        above = s[s > tol]
        below = s[s <= tol]
        if above.size:
            self.min_above = min(self.min_above, float(above.min()))
        if below.size:
            self.max_below = max(self.max_below, float(below.max()))
        self.history.append((label, int(above.size), int(below.size)))

    @property
    def ratio(self) -> float:
        if not np.isfinite(self.min_above):
            return np.inf
        return self.min_above / max(self.max_below, _FLOOR)

    @property
    def determinate(self) -> bool:
        return self.ratio >= GAP_THRESHOLD


def _normalized(gens: Sequence[np.ndarray]) -> List[np.ndarray]:
    out = []
    for a in gens:
        n = np.linalg.norm(a)
        if n > 0:
            out.append(np.asarray(a, dtype=np.complex128) / n)
    return out


def _is_normal(a: np.ndarray, tol: float = 1e-10) -> bool:
    return np.linalg.norm(a @ a.conj().T - a.conj().T @ a) <= tol * max(1.0, np.linalg.norm(a) ** 2)


def _initial_kernel(g: np.ndarray, tracker: GapTracker, tol: float) -> np.ndarray:
    """Orthonormal basis (k, D, D) of a space containing the commutant of ``g``."""
    d = g.shape[0]
    if _is_normal(g):
        t, u = sla.schur(g, output="complex")
        lam = np.diag(t)
        # for normal g the Sylvester operator has singular values |lam_i - lam_j|
        tracker.record(np.abs(lam[:, None] - lam[None, :]).ravel(), tol, "schur")
        scale = max(1.0, float(np.abs(lam).max(initial=0.0)))
        # generous clustering: extra pairs are removed by the refinement steps
        close = np.abs(lam[:, None] - lam[None, :]) <= 1e-6 * scale
        ii, jj = np.nonzero(close)
        k = np.einsum("ai,bi->iab", u[:, ii], u[:, jj].conj())
        return k
    lop = np.kron(g, np.eye(d)) - np.kron(np.eye(d), g.T)
    _, s, vh = np.linalg.svd(lop)
    tracker.record(s, tol, "dense")
    null = vh[s <= tol].conj()
    return null.reshape(-1, d, d)


def commutant_basis(gens: Sequence[np.ndarray], tol: float = 1e-9, seed: int = 0):
    """Orthonormal basis of ``{X : AX = XA for all A in gens}`` and a gap report."""
    if not gens:
        raise ValueError("need at least one generator")
    d = gens[0].shape[0]
    tracker = GapTracker()
    work = _normalized(gens)
    if not work:
        return np.eye(d * d, dtype=np.complex128).reshape(d * d, d, d), tracker
    rng = np.random.default_rng(seed)
    g = sum(c * a for c, a in zip(rng.standard_normal(len(work)), work))
    k = _initial_kernel(g, tracker, tol)
    for idx, a in enumerate(work):
        if k.shape[0] == 0:
            break
        m = (a @ k - k @ a).reshape(k.shape[0], d * d).T
        _, s, vh = np.linalg.svd(m, full_matrices=False)
        s_full = np.zeros(k.shape[0])
        s_full[: s.size] = s
        tracker.record(s, tol, f"gen{idx}")
        keep = s_full <= tol
        coeff = vh[keep].conj()
        k = np.einsum("nk,kab->nab", coeff, k)
    return k, tracker


def realify(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    return np.concatenate([a.real.ravel(), a.imag.ravel()])


class FloatSpan:
    """Orthonormal real span of realified matrices with rank decisions logged."""

    def __init__(self, tol: float = 1e-9):
        self.tol = tol
        self.q: List[np.ndarray] = []
        self.members: List[np.ndarray] = []
        self.tracker = GapTracker()

    def residual(self, v: np.ndarray) -> np.ndarray:
        r = v.copy()
        for _ in range(2):
            for q in self.q:
                r -= (q @ r) * q
        return r

    def add(self, mat: np.ndarray) -> bool:
        v = realify(mat)
        n = np.linalg.norm(v)
        if n == 0:
            return False
        r = self.residual(v / n)
        rn = float(np.linalg.norm(r))
        self.tracker.record(np.array([rn]), self.tol, "span")
        if rn <= self.tol:
            return False
        self.q.append(r / rn)
        self.members.append(np.asarray(mat, dtype=np.complex128))
        return True

    def contains(self, mat: np.ndarray) -> bool:
        v = realify(mat)
        n = np.linalg.norm(v)
        if n == 0:
            return True
        rn = float(np.linalg.norm(self.residual(v / n)))
        self.tracker.record(np.array([rn]), self.tol, "contains")
        return rn <= self.tol

    def __len__(self):
        return len(self.q)


def real_nullspace(m: np.ndarray, tol: float, tracker: Optional[GapTracker] = None) -> np.ndarray:
    """Rows spanning the real kernel of ``m`` (columns = unknowns)."""
    if m.shape[1] == 0:
        return np.zeros((0, 0))
    if m.shape[0] < m.shape[1]:
        m = np.vstack([m, np.zeros((m.shape[1] - m.shape[0], m.shape[1]))])
    scale = max(1.0, float(np.linalg.norm(m, 2))) if m.size else 1.0
    _, s, vh = np.linalg.svd(m / scale, full_matrices=False)
    s_full = np.zeros(m.shape[1])
    s_full[: s.size] = s
    if tracker is not None:
        tracker.record(s, tol, "null")
    return vh[s_full <= tol]


def real_rank(m: np.ndarray, tol: float, tracker: Optional[GapTracker] = None) -> int:
    if m.size == 0:
        return 0
    scale = max(1.0, float(np.linalg.norm(m, 2)))
    s = np.linalg.svd(m / scale, compute_uv=False)
    if tracker is not None:
        tracker.record(s, tol, "rank")
    return int((s > tol).sum())
