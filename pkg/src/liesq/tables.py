"""Known families of irreducible alternating / symmetric squares.

Each family is a rule ``(family, rank) -> (phi, square)`` over a range of ranks.
:func:`annotate` matches a concrete ``(t, phi, square)`` against the families
after closing it under diagram automorphisms and the low-rank isomorphisms

    C1 = A1,   B2 (a,b) = C2 (b,a),   D3 (a,b,c) = A3 (b,a,c).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from .repdecomp import dual_weight, is_self_dual, scan_tables
from .rootsys import SimpleType, Weight, weyl_dim

Form = Tuple[str, int, Weight, Weight]


def _e(l: int, *nz: Tuple[int, int]) -> Weight:
    w = [0] * l
    for i, v in nz:
        w[i] = v
    return tuple(w)


@dataclass(frozen=True)
class Family:
    label: str
    kind: str
    family: str
    min_rank: int
    max_rank: Optional[int]
    phi: Callable[[int], Weight]
    square: Callable[[int], Weight]
    dim_phi: Callable[[int], int]
    dim_square: Callable[[int], int]

    def ranks(self, upto: int) -> range:
        hi = upto if self.max_rank is None else min(upto, self.max_rank)
        return range(self.min_rank, hi + 1)

    def instance(self, l: int) -> Form:
        return (self.family, l, self.phi(l), self.square(l))


ALT_FAMILIES: List[Family] = [
    Family("1a", "alt", "B", 3, None, lambda l: _e(l, (0, 1)), lambda l: _e(l, (1, 1)),
           lambda l: 2 * l + 1, lambda l: (2 * l + 1) * l),
    Family("1b", "alt", "B", 2, 2, lambda l: (1, 0), lambda l: (0, 2), lambda l: 5, lambda l: 10),
    Family("2a", "alt", "D", 4, None, lambda l: _e(l, (0, 1)), lambda l: _e(l, (1, 1)),
           lambda l: 2 * l, lambda l: (2 * l - 1) * l),
    Family("2b", "alt", "D", 3, 3, lambda l: (1, 0, 0), lambda l: (0, 1, 1), lambda l: 6, lambda l: 15),
    Family("3", "alt", "A", 3, None, lambda l: _e(l, (1, 1)), lambda l: _e(l, (0, 1), (2, 1)),
           lambda l: l * (l + 1) // 2, lambda l: 3 * comb(l + 2, 4)),
    Family("4a", "alt", "A", 2, None, lambda l: _e(l, (0, 2)), lambda l: _e(l, (0, 2), (1, 1)),
           lambda l: (l + 1) * (l + 2) // 2, lambda l: 3 * comb(l + 3, 4)),
    Family("4b", "alt", "A", 1, 1, lambda l: (2,), lambda l: (2,), lambda l: 3, lambda l: 3),
    Family("5", "alt", "D", 5, 5, lambda l: (0, 0, 0, 1, 0), lambda l: (0, 0, 1, 0, 0), lambda l: 16, lambda l: 120),
    Family("6", "alt", "E", 6, 6, lambda l: _e(6, (0, 1)), lambda l: _e(6, (2, 1)), lambda l: 27, lambda l: 351),
    Family("7a", "alt", "A", 2, None, lambda l: _e(l, (0, 1)), lambda l: _e(l, (1, 1)),
           lambda l: l + 1, lambda l: l * (l + 1) // 2),
    Family("7b", "alt", "A", 1, 1, lambda l: (1,), lambda l: (0,), lambda l: 2, lambda l: 1),
]

SYM_FAMILIES: List[Family] = [
    Family("1", "sym", "C", 1, None, lambda l: _e(l, (0, 1)), lambda l: _e(l, (0, 2)),
           lambda l: 2 * l, lambda l: (2 * l + 1) * l),
    Family("2", "sym", "A", 1, None, lambda l: _e(l, (0, 1)), lambda l: _e(l, (0, 2)),
           lambda l: l + 1, lambda l: (l + 1) * (l + 2) // 2),
]

# not self-dual, irreducible square: (label, family, min_rank, max_rank, phi)
ALT_NON_SELF_DUAL = [
    ("i", "A", 2, None, lambda l: _e(l, (0, 1))),
    ("ii", "A", 2, None, lambda l: _e(l, (0, 2))),
    ("iii", "A", 3, None, lambda l: _e(l, (1, 1))),
    ("iv", "D", 5, 5, lambda l: (0, 0, 0, 1, 0)),
    ("v", "E", 6, 6, lambda l: _e(6, (0, 1))),
]
SYM_NON_SELF_DUAL = [
    ("i", "A", 2, None, lambda l: _e(l, (0, 1))),
]


def families(kind: str) -> List[Family]:
    if kind == "alt":
        return ALT_FAMILIES
    if kind == "sym":
        return SYM_FAMILIES
    raise ValueError(f"kind must be 'alt' or 'sym', not {kind!r}")


# ---------------------------------------------------------------------------
# equivalences

def _node_maps(family: str, rank: int) -> List[Tuple[int, ...]]:
    """Permutations of node indices induced by diagram automorphisms."""
    ident = tuple(range(rank))
    if family == "A" and rank > 1:
        return [ident, ident[::-1]]
    if family == "D":
        if rank == 4:
            out = []
            for p in permutations((0, 2, 3)):
                m = list(ident)
                m[0], m[2], m[3] = p
                out.append(tuple(m))
            return out
        return [ident, ident[:-2] + (rank - 1, rank - 2)]
    if family == "E" and rank == 6:
        return [ident, (5, 1, 4, 3, 2, 0)]
    return [ident]


def _perm(w: Weight, p: Tuple[int, ...]) -> Weight:
    return tuple(w[i] for i in p)


def _isomorphic(form: Form) -> List[Form]:
    f, l, a, b = form
    if (f, l) == ("C", 1):
        return [("A", 1, a, b)]
    if (f, l) == ("A", 1):
        return [("C", 1, a, b)]
    if (f, l) == ("B", 2):
        return [("C", 2, a[::-1], b[::-1])]
    if (f, l) == ("C", 2):
        return [("B", 2, a[::-1], b[::-1])]
    if (f, l) == ("D", 3):
        sw = lambda w: (w[1], w[0], w[2])
        return [("A", 3, sw(a), sw(b))]
    if (f, l) == ("A", 3):
        sw = lambda w: (w[1], w[0], w[2])
        return [("D", 3, sw(a), sw(b))]
    return []


def equivalent_forms(form: Form) -> Set[Form]:
    seen = {form}
    stack = [form]
    while stack:
        f, l, a, b = stack.pop()
        nxt = [(f, l, _perm(a, p), _perm(b, p)) for p in _node_maps(f, l)]
        nxt += _isomorphic((f, l, a, b))
        for g in nxt:
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return seen


def _known(kind: str, max_rank: int) -> Dict[Form, str]:
    out: Dict[Form, str] = {}
    for fam in families(kind):
        for l in fam.ranks(max_rank):
            form = fam.instance(l)
            out[form] = ",".join(filter(None, [out.get(form), fam.label]))
    return out


def annotate(kind: str, t: SimpleType, phi: Sequence[int], square: Sequence[int]) -> Optional[str]:
    """Label(s) of the known family matching ``(t, phi, square)``, or None."""
    form = (t.family, t.rank, tuple(phi), tuple(square))
    known = _known(kind, max(t.rank, 3))
    labels = set()
    for g in equivalent_forms(form):
        if g in known:
            labels.update(known[g].split(","))
    if not labels:
        return None
    return ",".join(sorted(labels, key=lambda s: (len(s.rstrip("ab")), s)))


def non_self_dual_label(kind: str, t: SimpleType, phi: Sequence[int]) -> Optional[str]:
    rules = ALT_NON_SELF_DUAL if kind == "alt" else SYM_NON_SELF_DUAL
    phi = tuple(phi)
    # the square slot is unused here; phi rides along through the equivalences
    for f, l, a, _ in sorted(equivalent_forms((t.family, t.rank, phi, phi))):
        cands = {a, dual_weight(SimpleType(f, l), a)}
        for label, fam, lo, hi, rule in rules:
            if f == fam and l >= lo and (hi is None or l <= hi) and rule(l) in cands:
                return label
    return None


# ---------------------------------------------------------------------------
# table regeneration

def regenerate(kind: str, max_rank: int, max_sum: int, non_self_dual: bool = False) -> List[dict]:
    """Rows of the irreducible-square table inside the scan box, annotated."""
    rows = []
    for t, phi, dec in scan_tables(kind, max_rank, max_sum):
        if non_self_dual and is_self_dual(t, phi):
            continue
        (sq, _), = dec.terms
        row = {
            "algebra": t.compact_name,
            "type": t.name,
            "phi": list(phi),
            "square": list(sq),
            "dim_phi": weyl_dim(t, phi),
            "dim_square": weyl_dim(t, sq),
            "case": annotate(kind, t, phi, sq),
        }
        if non_self_dual:
            row["case"] = non_self_dual_label(kind, t, phi)
        rows.append(row)
    return rows
