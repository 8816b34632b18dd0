"""Property sweeps over a box of simple types and highest weights.

Each sweep returns a :class:`SweepResult` listing every violation found; an
empty list means the property held on the whole box.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .dynkin_tools import guaranteed_constituents, part_node_map, part_weight, subordinate
from .repdecomp import (
    adjoint_weight,
    alt_square,
    dual_weight,
    is_self_dual,
    merge,
    mult,
    one_norm,
    sym_square,
    tensor_decompose,
    two_norm,
)
from .reptype import fs_oracle, malcev_class
from .rootsys import SimpleType, all_weights, as_simple, cartan_matrix, root_coordinates, simple_types, weyl_dim


@dataclass
class SweepResult:
    name: str
    cases: int = 0
    violations: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"check": self.name, "cases": self.cases, "violations": self.violations, "ok": self.ok}


def _types(max_rank: int, types: Optional[Sequence[SimpleType]]) -> List[SimpleType]:
    if types is None:
        return simple_types(max_rank)
    return [as_simple(t) for t in types]


def _box(max_rank: int, max_sum: int, min_sum: int = 0, types: Optional[Sequence[SimpleType]] = None,
         max_dim: Optional[int] = None):
    for t in _types(max_rank, types):
        for lam in all_weights(t.rank, max_sum, min_sum):
            if max_dim is not None and weyl_dim(t, lam) > max_dim:
                continue
            yield t, lam


def cz_sweep(max_rank: int, max_sum: int, max_dim: Optional[int] = None,
             types: Optional[Sequence[SimpleType]] = None) -> SweepResult:
    """One-norm and two-norm invariance under dualizing the second factor."""
    res = SweepResult("cz")
    for t in _types(max_rank, types):
        ws = [w for _, w in _box(max_rank, max_sum, types=[t], max_dim=max_dim)]
        for i, lam in enumerate(ws):
            for mu in ws[i:]:
                res.cases += 1
                a = tensor_decompose(t, lam, mu)
                b = tensor_decompose(t, lam, dual_weight(t, mu))
                if one_norm(a) != one_norm(b) or two_norm(a) != two_norm(b):
                    res.violations.append({"algebra": str(t), "lam": lam, "mu": mu,
                                           "norms": [one_norm(a), one_norm(b), two_norm(a), two_norm(b)]})
    return res


def kw_sweep(max_rank: int, max_sum: int, max_dim: Optional[int] = None,
             types: Optional[Sequence[SimpleType]] = None) -> SweepResult:
    """Adjoint multiplicity in the tensor square of self-dual irreducibles equals
    the number of nonzero labels; the adjoint occurs in ``V (x) V^*``."""
    res = SweepResult("kw")
    for t, lam in _box(max_rank, max_sum, 1, types=types, max_dim=max_dim):
        res.cases += 1
        adj = adjoint_weight(t)
        if is_self_dual(t, lam):
            got = mult(tensor_decompose(t, lam, lam), adj)
            b = sum(1 for x in lam if x)
            if got != b:
                res.violations.append({"algebra": str(t), "lam": lam, "adjoint_mult": got, "nonzero_labels": b})
        if mult(tensor_decompose(t, lam, dual_weight(t, lam)), adj) < 1:
            res.violations.append({"algebra": str(t), "lam": lam, "adjoint_missing_in_dual_product": True})
    return res


def malcev_fs_sweep(max_rank: int, max_sum: int, method: str = "adams", max_dim: Optional[int] = None,
                    types: Optional[Sequence[SimpleType]] = None) -> SweepResult:
    res = SweepResult(f"malcev-fs[{method}]")
    for t, lam in _box(max_rank, max_sum, types=types, max_dim=max_dim):
        res.cases += 1
        a, b = malcev_class(t, lam), fs_oracle(t, lam, method)
        if a != b:
            res.violations.append({"algebra": str(t), "lam": lam, "malcev": str(a), "oracle": str(b)})
    return res


def alt_sym_sweep(max_rank: int, max_sum: int, max_dim: Optional[int] = None,
                  types: Optional[Sequence[SimpleType]] = None) -> SweepResult:
    res = SweepResult("alt+sym")
    for t, lam in _box(max_rank, max_sum, types=types, max_dim=max_dim):
        res.cases += 1
        a, s = alt_square(t, lam), sym_square(t, lam)
        if merge(a, s) != tensor_decompose(t, lam, lam):
            res.violations.append({"algebra": str(t), "lam": lam})
    return res


def chains_sweep(max_rank: int, max_sum: int, max_dim: Optional[int] = None,
                 types: Optional[Sequence[SimpleType]] = None) -> SweepResult:
    res = SweepResult("chains")
    for t in _types(max_rank, types):
        ws = [w for _, w in _box(max_rank, max_sum, types=[t], max_dim=max_dim)]
        for lam in ws:
            for mu in ws:
                res.cases += 1
                dec = tensor_decompose(t, lam, mu).as_dict()
                missing = [w for w in guaranteed_constituents(t, lam, mu) if w not in dec]
                if missing:
                    res.violations.append({"algebra": str(t), "lam": lam, "mu": mu, "missing": missing})
    return res


def _shift_ok(small, big, top_small, top_big, to_big=None) -> Optional[tuple]:
    """Every ``top_small - s`` in ``small`` has multiplicity <= that of ``top_big - s`` in ``big``."""
    bd = big.as_dict()
    for nu, m in small.as_dict().items():
        shift = tuple(a - b for a, b in zip(top_small, nu))
        if to_big is not None:
            shift = to_big(shift)
        target = tuple(a - b for a, b in zip(top_big, shift))
        if bd.get(target, 0) < m:
            return nu, m, target, bd.get(target, 0)
    return None


def subordination_sweep(max_rank: int, max_sum: int, max_dim: Optional[int] = None,
                        types: Optional[Sequence[SimpleType]] = None) -> SweepResult:
    """Shifted multiplicities grow along subordinate pairs, for tensor
    products and both squares."""
    res = SweepResult("subordination")
    for t in _types(max_rank, types):
        ws = [w for _, w in _box(max_rank, max_sum, types=[t], max_dim=max_dim)]
        pairs = [(a, b) for a in ws for b in ws if a != b and subordinate(a, b)]
        for p1, q1 in pairs + [(w, w) for w in ws]:
            for p2, q2 in pairs:
                res.cases += 1
                bad = _shift_ok(tensor_decompose(t, p1, p2), tensor_decompose(t, q1, q2),
                                tuple(a + b for a, b in zip(p1, p2)), tuple(a + b for a, b in zip(q1, q2)))
                if bad:
                    res.violations.append({"algebra": str(t), "small": [p1, p2], "big": [q1, q2], "witness": bad})
        for p, q in pairs:
            for kind, fn in (("alt", alt_square), ("sym", sym_square)):
                res.cases += 1
                bad = _shift_ok(fn(t, p), fn(t, q), tuple(2 * a for a in p), tuple(2 * a for a in q))
                if bad:
                    res.violations.append({"algebra": str(t), "kind": kind, "small": p, "big": q, "witness": bad})
    return res


def _end_nodes(t: SimpleType) -> List[int]:
    c = cartan_matrix(t)
    return [a + 1 for a in range(t.rank) if sum(1 for b in range(t.rank) if b != a and c[a, b]) == 1]


def parts_sweep(max_rank: int, max_sum: int, max_dim: Optional[int] = None,
                types: Optional[Sequence[SimpleType]] = None) -> SweepResult:
    """Shifted multiplicities grow from a part (one end node deleted) to the
    whole diagram, for tensor products and both squares."""
    res = SweepResult("parts")
    for t in _types(max_rank, types):
        if t.rank < 2:
            continue
        cg = cartan_matrix(t)
        ws = [w for _, w in _box(max_rank, max_sum, types=[t], max_dim=max_dim)]
        for node in _end_nodes(t):
            nodes = part_node_map(t, {node})
            h = part_weight(t, ws[0], {node})[0].factors[0]

            def to_big(shift, h=h, nodes=nodes, cg=cg):
                n = [0] * t.rank
                for i, x in enumerate(root_coordinates(h, shift)):
                    n[nodes[i] - 1] = int(x)
                return tuple(int(v) for v in (np.array(n) @ cg))

            def short(w):
                return part_weight(t, w, {node})[1]

            for i, q1 in enumerate(ws):
                for q2 in ws[i:]:
                    p1, p2 = short(q1), short(q2)
                    if not any(p1) or not any(p2):
                        continue
                    res.cases += 1
                    bad = _shift_ok(tensor_decompose(h, p1, p2), tensor_decompose(t, q1, q2),
                                    tuple(a + b for a, b in zip(p1, p2)), tuple(a + b for a, b in zip(q1, q2)), to_big)
                    if bad:
                        res.violations.append({"algebra": str(t), "deleted": node, "weights": [q1, q2], "witness": bad})
                if any(short(q1)):
                    for kind, fn in (("alt", alt_square), ("sym", sym_square)):
                        res.cases += 1
                        p = short(q1)
                        bad = _shift_ok(fn(h, p), fn(t, q1), tuple(2 * a for a in p), tuple(2 * a for a in q1), to_big)
                        if bad:
                            res.violations.append({"algebra": str(t), "deleted": node, "kind": kind, "weight": q1,
                                                   "witness": bad})
    return res


def ptranspose_sweep(cases: Optional[List[Tuple[str, int]]] = None, backend: Optional[str] = None) -> SweepResult:
    from . import matrixrep as mr

    res = SweepResult("ptranspose")
    cases = cases or [("su", 2), ("su", 3), ("so", 5), ("sp", 2)]
    for fam, n in cases:
        r = mr.standard_generators(fam, n)
        for name, other in (("self", r), ("dual", mr.dual_rep(r))):
            res.cases += 1
            if not mr.partial_transpose_check(r, other, backend):
                res.violations.append({"family": fam, "size": n, "pair": name})
    return res


SWEEPS = {
    "cz": cz_sweep,
    "kw": kw_sweep,
    "malcev-fs": malcev_fs_sweep,
    "alt-sym": alt_sym_sweep,
    "chains": chains_sweep,
    "subordination": subordination_sweep,
    "parts": parts_sweep,
}
