"""Exact sparse elimination over the Gaussian integers.

Rows are ``dict`` objects mapping a column id to a Gaussian integer stored as a
pair ``(re, im)`` of Python ints.  Elimination is fraction free; every row is
divided by the integer gcd of its entries after each update, which keeps the
entries small for the structured systems met here.  Kernel vectors are
returned over Q(i) as :class:`~liesq.scalars.QI` values.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .scalars import QI

GI = Tuple[int, int]
Row = Dict[Hashable, GI]


def gi_mul(a: GI, b: GI) -> GI:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _content(row: Row) -> int:
    g = 0
    for re, im in row.values():
        g = gcd(g, gcd(re, im))
        if g == 1:
            return 1
    return g


def normalize(row: Row) -> Row:
    g = _content(row)
    if g > 1:
        return {c: (re // g, im // g) for c, (re, im) in row.items()}
    return row


def _combine(row: Row, piv: Row, col) -> Row:
    """``piv[col] * row - row[col] * piv`` with zeros dropped."""
    a = piv[col]
    b = row[col]
    out: Row = {}
    for c, v in row.items():
        w = gi_mul(a, v)
        if w != (0, 0):
            out[c] = w
    for c, v in piv.items():
        w = gi_mul(b, v)
        x = out.get(c, (0, 0))
        y = (x[0] - w[0], x[1] - w[1])
        if y == (0, 0):
            out.pop(c, None)
        else:
            out[c] = y
    out.pop(col, None)
    return normalize(out)


class Echelon:
    """Incrementally built row echelon form; columns are ordered by ``key``."""

    def __init__(self, key=None):
        self.key = key if key is not None else (lambda c: c)
        self.pivots: Dict[Hashable, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Row) -> Row:
        row = {c: v for c, v in row.items() if v != (0, 0)}
        while row:
            lead = min(row, key=self.key)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            row = _combine(row, piv, lead)
        return row

    def insert(self, row: Row) -> bool:
        """Add a row; True if it was independent of the rows so far."""
        r = self.reduce(normalize({c: v for c, v in row.items() if v != (0, 0)}))
        if not r:
            return False
        self.pivots[min(r, key=self.key)] = r
        return True

    def kernel(self, columns: Iterable[Hashable]) -> List[Dict[Hashable, QI]]:
        """Basis of the solution space of ``row . x = 0`` over the given columns."""
        columns = list(columns)
        free = [c for c in columns if c not in self.pivots]
        order = sorted(self.pivots, key=self.key, reverse=True)
        basis = []
        for f in free:
            x: Dict[Hashable, QI] = {f: QI(1)}
            for p in order:
                row = self.pivots[p]
                acc = QI(0)
                for c, v in row.items():
                    if c != p and c in x:
                        acc = acc + QI(v[0], v[1]) * x[c]
                if acc:
                    x[p] = -acc / QI(*row[p])
            basis.append(x)
        return basis


class _UnionFind:
    def __init__(self):
        self.parent: Dict[Hashable, Hashable] = {}

    def find(self, a):
        p = self.parent.setdefault(a, a)
        while p != self.parent[p]:
            self.parent[p] = self.parent[self.parent[p]]
            p = self.parent[p]
        self.parent[a] = p
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def solve_homogeneous(rows: Iterable[Row], columns: Sequence[Hashable], want_basis: bool = True):
    """Kernel of a sparse homogeneous system.

    Variables forced to zero by single-entry rows are removed first, then the
    system splits into connected components that are eliminated separately.
    Returns ``(dimension, basis or None)``; basis vectors are sparse dicts.
    """
    rows = [r for r in rows if r]
    zero = set()
    changed = True
    while changed:
        changed = False
        nxt = []
        for r in rows:
            if zero:
                r = {c: v for c, v in r.items() if c not in zero}
            if not r:
                continue
            if len(r) == 1:
                (c,) = r
                zero.add(c)
                changed = True
                continue
            nxt.append(r)
        rows = nxt
    uf = _UnionFind()
    for r in rows:
        it = iter(r)
        first = next(it)
        uf.find(first)
        for c in it:
            uf.union(first, c)
    groups: Dict[Hashable, List[Row]] = {}
    for r in rows:
        groups.setdefault(uf.find(next(iter(r))), []).append(r)
    comp_cols: Dict[Hashable, List[Hashable]] = {}
    loose = []
    for c in columns:
        if c in zero:
            continue
        if c in uf.parent:
            comp_cols.setdefault(uf.find(c), []).append(c)
        else:
            loose.append(c)
    index = {c: i for i, c in enumerate(columns)}
    dim = len(loose)
    basis: Optional[List[Dict[Hashable, QI]]] = [{c: QI(1)} for c in loose] if want_basis else None
    for root, grp in groups.items():
        ech = Echelon(key=index.__getitem__)
        for r in sorted(grp, key=len):
            ech.insert(r)
        cols = comp_cols[root]
        dim += len(cols) - ech.rank
        if want_basis and len(cols) > ech.rank:
            basis.extend(ech.kernel(cols))
    return dim, basis


def rational_row(values: Iterable[Fraction]) -> Row:
    """Scale a vector of rationals to an integer row (sparse)."""
    vals = list(values)
    den = 1
    for q in vals:
        q = Fraction(q)
        den = den * q.denominator // gcd(den, q.denominator)
    return {i: (int(Fraction(q) * den), 0) for i, q in enumerate(vals) if q}


def qi_row(values: Dict[Hashable, QI]) -> Row:
    den = 1
    for x in values.values():
        for q in (x.re, x.im):
            den = den * q.denominator // gcd(den, q.denominator)
    out = {}
    for c, x in values.items():
        v = (int(x.re * den), int(x.im * den))
        if v != (0, 0):
            out[c] = v
    return out


class RationalSpan:
    """Span of vectors over Q with membership tests and coordinates."""

    def __init__(self, length: int):
        self.length = length
        self.vectors: List[List[Fraction]] = []
        self._ech = Echelon()

    def __len__(self):
        return len(self.vectors)

    def contains(self, vec: Sequence[Fraction]) -> bool:
        return not self._ech.reduce(normalize(rational_row(vec)))

    def add(self, vec: Sequence[Fraction]) -> bool:
        """Insert if independent; True when the span grew."""
        if not self._ech.insert(rational_row(vec)):
            return False
        self.vectors.append([Fraction(x) for x in vec])
        return True

    def coordinates(self, vec: Sequence[Fraction]) -> Optional[List[Fraction]]:
        """Coefficients ``c`` with ``sum c_k v_k = vec``, or None if outside the span."""
        if not self.contains(vec):
            return None
        return self._solve(vec)

    def _solve(self, vec) -> List[Fraction]:
        n = len(self.vectors)
        cols = list(range(n)) + ["rhs"]
        rows = []
        for i in range(self.length):
            entries = {k: Fraction(self.vectors[k][i]) for k in range(n) if self.vectors[k][i]}
            if vec[i]:
                entries["rhs"] = -Fraction(vec[i])
            if entries:
                den = 1
                for q in entries.values():
                    den = den * q.denominator // gcd(den, q.denominator)
                rows.append({c: (int(q * den), 0) for c, q in entries.items()})
        ech = Echelon(key=lambda c: n if c == "rhs" else c)
        for r in rows:
            ech.insert(r)
        ker = ech.kernel(cols)
        # independence of the stored vectors leaves exactly one kernel vector with rhs != 0
        for x in ker:
            if "rhs" in x and x["rhs"]:
                s = x["rhs"]
                return [(x.get(k, QI(0)) / s).re for k in range(n)]
        raise ArithmeticError("vector is not in the span")


def rational_nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Kernel basis over Q of a dense rational matrix given by rows."""
    ech = Echelon()
    for r in rows:
        ech.insert(rational_row(r))
    out = []
    for x in ech.kernel(range(ncols)):
        out.append([x.get(j, QI(0)).re for j in range(ncols)])
    return out
