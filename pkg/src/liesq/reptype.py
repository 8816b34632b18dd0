"""Orthogonal / symplectic / unitary type of irreducible representations."""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .repdecomp import alt_square, is_self_dual, mult, sym_square
from .rootsys import (
    InvalidAlgebra,
    SimpleType,
    _check_dominant,
    as_simple,
    cartan_matrix,
    inner_product,
    positive_roots,
    weight_arrays,
)
from . import _kernels


class RepClass(str, Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"
    UNITARY = "unitary"

    def __str__(self) -> str:
        return self.value


def _simple(t) -> SimpleType:
    try:
        return as_simple(t)
    except InvalidAlgebra as exc:
        raise InvalidAlgebra(f"type classification needs a simple algebra: {exc}") from exc


def malcev_class(t, lam: Sequence[int]) -> RepClass:
    """Classify ``V(lam)`` from its labels by the explicit per-family rules."""
    t = _simple(t)
    x = _check_dominant(t, lam)
    O, S, U = RepClass.ORTHOGONAL, RepClass.SYMPLECTIC, RepClass.UNITARY
    f, l = t.family, t.rank
    if not any(x):
        return O
    if f == "A":
        if x != x[::-1]:
            return U
        # 1-based label index (l-1) div 2 + 1
        if l % 4 == 1 and x[(l - 1) // 2] % 2 == 1:
            return S
        return O
    if f == "B":
        return S if l % 4 in (1, 2) and x[l - 1] % 2 == 1 else O
    if f == "C":
        return S if sum(x[0::2]) % 2 == 1 else O
    if f == "D":
        if l % 4 == 2:
            return S if (x[l - 2] + x[l - 1]) % 2 == 1 else O
        if l % 4 == 0:
            return O
        return O if x[l - 2] == x[l - 1] else U
    if f == "E" and l == 6:
        return O if (x[0] == x[5] and x[2] == x[4]) else U
    if f == "E" and l == 7:
        return S if (x[1] + x[4] + x[6]) % 2 == 1 else O
    return O  # G2, F4, E8


def invariant_form_counts(t, lam: Sequence[int]):
    """Multiplicities of the trivial representation in ``(Sym^2, Alt^2)``.

    Uses the Adams operation: the trivial multiplicity of ``psi^2 chi`` is
    ``sum_w m(w) * sign(2w + rho)`` over weights ``2w`` reducing to zero,
    and ``Sym^2 = (chi^2 + psi^2 chi)/2``, ``Alt^2 = (chi^2 - psi^2 chi)/2``;
    ``chi^2`` contains the trivial rep once iff the rep is self-dual.
    """
    t = _simple(t)
    lam = _check_dominant(t, lam)
    W, M = weight_arrays(t, lam)
    red, cnt = _kernels.reduce_batch(2 * W + 1, cartan_matrix(t))
    hit = (red == 1).all(axis=1)
    signs = np.where(cnt[hit] % 2 == 1, -1, 1)
    adams = int((signs * M[hit]).sum())
    sq = 1 if is_self_dual(t, lam) else 0
    if (sq + adams) % 2:
        raise ArithmeticError("inconsistent invariant form count")
    return (sq + adams) // 2, (sq - adams) // 2


@lru_cache(maxsize=None)
def _two_rho_vee(t: SimpleType):
    n = t.rank
    out = []
    for i in range(n):
        w = tuple(int(i == j) for j in range(n))
        out.append(sum((2 * inner_product(t, w, a) / inner_product(t, a, a) for a in positive_roots(t)), Fraction(0)))
    if any(c.denominator != 1 for c in out):
        raise ArithmeticError("non-integral coroot pairing")
    return tuple(int(c) for c in out)


def coroot_parity(t, lam: Sequence[int]) -> int:
    """``<lam, 2 rho_vee> mod 2``, summing ``<lam, alpha_vee>`` over positive roots."""
    t = _simple(t)
    lam = _check_dominant(t, lam)
    return sum(x * c for x, c in zip(lam, _two_rho_vee(t))) % 2


def fs_oracle(t, lam: Sequence[int], method: str = "adams") -> RepClass:
    """Classify ``V(lam)`` by locating its invariant bilinear form.

    ``method="adams"`` counts trivial summands via :func:`invariant_form_counts`;
    ``method="center"`` uses the parity of ``<lam, 2 rho_vee>`` (the sign by
    which the central element ``exp(2 pi i rho_vee)`` acts), which needs no
    weight system; ``method="squares"`` reads them off the full decompositions of the
    symmetric and alternating squares (slower, independent route).
    """
    t = _simple(t)
    lam = _check_dominant(t, lam)
    if not is_self_dual(t, lam):
        return RepClass.UNITARY
    if method == "adams":
        sym, alt = invariant_form_counts(t, lam)
    elif method == "center":
        sym, alt = (0, 1) if coroot_parity(t, lam) else (1, 0)
    elif method == "squares":
        zero = (0,) * t.rank
        sym, alt = mult(sym_square(t, lam), zero), mult(alt_square(t, lam), zero)
    else:
        raise ValueError(f"unknown method {method!r}")
    if (sym, alt) == (1, 0):
        return RepClass.ORTHOGONAL
    if (sym, alt) == (0, 1):
        return RepClass.SYMPLECTIC
    raise ArithmeticError(f"self-dual {lam} of {t} has invariant form counts sym={sym}, alt={alt}")
