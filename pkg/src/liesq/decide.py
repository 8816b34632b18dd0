"""Decide whether generators span a full compact Lie algebra.

Every procedure returns a :class:`DecisionReport` with a three-valued verdict:
``full``, ``proper`` or ``indeterminate``.  A float-backend run whose
spectral gap is too small never claims ``full`` or ``proper``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Dict, Optional, Sequence

from . import matrixrep as mr
from .repdecomp import adjoint_weight, is_self_dual, mult, tensor_decompose
from .rootsys import as_simple
from .scalars import to_float

FULL = "full"
PROPER = "proper"
INDETERMINATE = "indeterminate"

EXIT_CODES = {FULL: 0, PROPER: 1, INDETERMINATE: 2}


class PreconditionError(ValueError):
    """Inputs violate the hypotheses of a decision procedure."""


@dataclass
class DecisionReport:
    procedure: str
    verdict: str
    computed: Dict[str, Optional[int]]
    expected: Optional[int]
    backend: str
    tolerance: Optional[float] = None
    seed: Optional[int] = None
    gap_ratio: Optional[float] = None
    closure_check: Optional[dict] = None
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def to_json(self) -> dict:
        out = asdict(self)
        if out["gap_ratio"] is not None and out["gap_ratio"] == float("inf"):
            out["gap_ratio"] = None
        return out

    @classmethod
    def from_json(cls, data: dict) -> "DecisionReport":
        return cls(**data)


def _min_gap(*results) -> Optional[float]:
    gaps = [r.gap_ratio for r in results if r.gap_ratio is not None]
    return min(gaps) if gaps else None


def _closure_check(r: mr.MatrixRep, expected_dim: int, backend: Optional[str], tol: float) -> dict:
    c = mr.lie_closure(r, backend, tol)
    return {
        "closure_dimension": c.dimension,
        "dimension_kind": "real",
        "expected": expected_dim,
        "determinate": c.determinate,
        "full": c.dimension == expected_dim,
    }


def _full_test(name: str, r: mr.MatrixRep, expected: int, algebra_dim: int, backend, tol, seed, cross_check) -> DecisionReport:
    res = mr.commutant(mr.tensor_square(r), backend, tol, seed)
    if not res.determinate:
        verdict = INDETERMINATE
    else:
        verdict = FULL if res.dim == expected else PROPER
    rep = DecisionReport(
        procedure=name,
        verdict=verdict,
        computed={"tensor_square_commutant": res.dim},
        expected=expected,
        backend=res.backend,
        tolerance=res.tolerance,
        seed=res.seed,
        gap_ratio=res.gap_ratio,
    )
    if cross_check:
        rep.closure_check = _closure_check(r, algebra_dim, backend, tol)
    return rep


def is_full_su(r: mr.MatrixRep, n: int, backend: Optional[str] = None, tol: float = mr.DEFAULT_TOL,
               seed: int = 0, cross_check: bool = False) -> DecisionReport:
    """Do traceless skew-Hermitian ``n x n`` generators generate su(n)?"""
    if n < 2 or r.dim != n:
        raise PreconditionError(f"need {n} x {n} generators with n >= 2")
    if not mr.in_su(r):
        raise PreconditionError("generators must be traceless and skew-Hermitian")
    return _full_test("is_full_su", r, 2, n * n - 1, backend, tol, seed, cross_check)


def is_full_so(r: mr.MatrixRep, k: int, backend: Optional[str] = None, tol: float = mr.DEFAULT_TOL,
               seed: int = 0, cross_check: bool = False) -> DecisionReport:
    """Do real antisymmetric ``k x k`` generators generate so(k)?  (k >= 5)"""
    if k < 5 or r.dim != k:
        raise PreconditionError(f"need {k} x {k} generators with k >= 5")
    if not mr.in_so(r):
        raise PreconditionError("generators must be real antisymmetric")
    return _full_test("is_full_so", r, 3, k * (k - 1) // 2, backend, tol, seed, cross_check)


def is_full_sp(r: mr.MatrixRep, l: int, backend: Optional[str] = None, tol: float = mr.DEFAULT_TOL,
               seed: int = 0, cross_check: bool = False) -> DecisionReport:
    """Do ``2l x 2l`` skew-Hermitian generators preserving ``J`` generate sp(l)?  (l >= 2)"""
    if l < 2 or r.dim != 2 * l:
        raise PreconditionError(f"need {2 * l} x {2 * l} generators with l >= 2")
    if not mr.in_sp(r):
        raise PreconditionError("generators must be skew-Hermitian and preserve the symplectic form")
    return _full_test("is_full_sp", r, 3, l * (2 * l + 1), backend, tol, seed, cross_check)


def equals_parent(r_h: mr.MatrixRep, r_g: mr.MatrixRep, backend: Optional[str] = None,
                  tol: float = mr.DEFAULT_TOL, seed: int = 0,
                  assume_semisimple: bool = False) -> DecisionReport:
    """Does the algebra generated by ``r_h`` equal the one generated by ``r_g``?

    ``r_h`` must lie in the closure of ``r_g``.  When the parent has a
    nonzero center only the semisimple parts can be compared: equal
    commutant dimensions then give ``indeterminate`` with
    ``notes["semisimple_parts_equal"] = True``.
    """
    if r_h.dim != r_g.dim:
        raise PreconditionError("both generator sets must act on the same space")
    if r_h.scalars != r_g.scalars:
        r_h, r_g = r_h.to_float(), r_g.to_float()
    closure = mr.lie_closure(r_g, backend, tol)
    notes: Dict[str, object] = {"parent_closure_dimension": closure.dimension}
    if closure.backend == "exact":
        from .exact_linalg import RationalSpan

        span = RationalSpan(2 * r_g.dim ** 2)
        for b in closure.basis:
            span.add(mr._realify_exact(b))
        inside = all(span.contains(mr._realify_exact(g)) for g in r_h.generators)
    else:
        from .float_linalg import FloatSpan

        span = FloatSpan(tol)
        for b in closure.basis:
            span.add(to_float(b))
        inside = all(span.contains(to_float(g)) for g in r_h.generators)
    if not inside:
        raise PreconditionError("subalgebra generators are not contained in the parent closure")
    if assume_semisimple:
        center_dim = 0
        notes["semisimple"] = "asserted by caller"
    else:
        split = mr.split_reductive(closure.basis, tol)
        center_dim = len(split.center)
        notes["semisimple"] = center_dim == 0
        notes["parent_center_dimension"] = center_dim
        notes["parent_semisimple_dimension"] = len(split.semisimple)
    c_h = mr.commutant(mr.tensor_square(r_h), backend, tol, seed)
    c_g = mr.commutant(mr.tensor_square(r_g), backend, tol, seed)
    computed = {"subalgebra_commutant": c_h.dim, "parent_commutant": c_g.dim}
    if not (c_h.determinate and c_g.determinate and closure.determinate):
        verdict = INDETERMINATE
    elif c_h.dim != c_g.dim:
        verdict = PROPER
    elif center_dim == 0:
        verdict = FULL
    else:
        verdict = INDETERMINATE
        notes["semisimple_parts_equal"] = True
        notes["center_comparison"] = "unresolved"
    return DecisionReport(
        procedure="equals_parent",
        verdict=verdict,
        computed=computed,
        expected=c_g.dim,
        backend=c_g.backend,
        tolerance=c_g.tolerance,
        seed=c_g.seed,
        gap_ratio=_min_gap(c_h, c_g),
        notes=notes,
    )


def gap_bound_check(t, lam: Sequence[int], sub_rep: Optional[mr.MatrixRep] = None,
                    parent_rep: Optional[mr.MatrixRep] = None, backend: Optional[str] = None,
                    tol: float = mr.DEFAULT_TOL) -> bool:
    """Check the adjoint-multiplicity gap bound for a self-dual irreducible.

    At weight level: the adjoint occurs in the tensor square exactly ``b``
    times, ``b`` the number of nonzero labels.  When ``sub_rep`` (a proper
    subalgebra) and ``parent_rep`` (the full algebra, same representation)
    are given, additionally ``dim com(sub) >= b^2 + dim com(parent)`` for
    their tensor squares.
    """
    t = as_simple(t)
    lam = tuple(lam)
    if not is_self_dual(t, lam):
        raise PreconditionError(f"{lam} is not self-dual for {t}")
    b = sum(1 for x in lam if x)
    ok = mult(tensor_decompose(t, lam, lam), adjoint_weight(t)) == b
    if sub_rep is not None and parent_rep is not None:
        c_sub = mr.commutant_dimension(mr.tensor_square(sub_rep), backend, tol)
        c_par = mr.commutant_dimension(mr.tensor_square(parent_rep), backend, tol)
        ok = ok and c_sub >= b * b + c_par
    return ok
