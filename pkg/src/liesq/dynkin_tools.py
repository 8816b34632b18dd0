"""Subordination, parts and minimal chains of highest weights.

Node indices in the public API are 1-based, matching the labels of the
Dynkin diagrams in :mod:`liesq.rootsys`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Set, Tuple

from .rootsys import (
    InvalidWeight,
    SemisimpleAlgebra,
    SimpleType,
    Weight,
    _cartan,
    _check_dominant,
    as_simple,
    inner_product,
    simple_root,
)


@dataclass(frozen=True)
class Chain:
    root_indices: Tuple[int, ...]

    def __post_init__(self):
        if not self.root_indices:
            raise ValueError("a chain needs at least one root")


def subordinate(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam`` is subordinate to ``mu`` if it is entrywise ``<=``."""
    if len(lam) != len(mu):
        raise InvalidWeight("subordination needs weights of equal length")
    return all(a <= b for a, b in zip(lam, mu))


# ---------------------------------------------------------------------------
# parts

def _match(sub: List[List[int]], target: Tuple[Tuple[int, ...], ...]):
    """Smallest ordering ``p`` of the nodes of ``sub`` with ``sub[p[i]][p[j]] == target[i][j]``."""
    n = len(sub)
    best = None

    def rec(p: List[int], used: Set[int]):
        nonlocal best
        k = len(p)
        if k == n:
            if best is None or tuple(p) < best:
                best = tuple(p)
            return
        for c in range(n):
            if c in used:
                continue
            if sub[c][c] != target[k][k]:
                continue
            if all(sub[p[i]][c] == target[i][k] and sub[c][p[i]] == target[k][i] for i in range(k)):
                p.append(c)
                used.add(c)
                rec(p, used)
                p.pop()
                used.discard(c)
                if best is not None:
                    return

    rec([], set())
    return best


def _identify(sub: List[List[int]]) -> Tuple[SimpleType, Tuple[int, ...]]:
    n = len(sub)
    cands = []
    for fam in "ABCDEFG":
        try:
            t = SimpleType(fam, n)
        except Exception:
            continue
        p = _match(sub, _cartan(t))
        if p is not None:
            cands.append((p, "ABCDEFG".index(fam), t))
    if not cands:
        raise ValueError("sub-diagram does not match any simple type")
    p, _, t = min(cands)
    return t, p


def part_weight(t, lam: Sequence[int], deleted: Iterable[int]) -> Tuple[SemisimpleAlgebra, Weight]:
    """Delete the nodes in ``deleted`` (1-based) and shorten ``lam`` accordingly.

    Connected components are returned as factors ordered by their smallest
    surviving node; labels inside a factor follow that factor's own node order.
    """
    t = as_simple(t)
    lam = _check_dominant(t, lam)
    deleted = {int(d) for d in deleted}
    if any(d < 1 or d > t.rank for d in deleted):
        raise ValueError(f"node indices must lie in 1..{t.rank}")
    keep = [i for i in range(t.rank) if i + 1 not in deleted]
    if not keep:
        raise ValueError("cannot delete every node")
    c = _cartan(t)
    comps: List[List[int]] = []
    seen: Set[int] = set()
    for s in keep:
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in keep:
                if v not in seen and c[u][v] != 0:
                    seen.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    comps.sort(key=min)
    factors, weight = [], ()
    for comp in comps:
        sub = [[c[a][b] for b in comp] for a in comp]
        st, p = _identify(sub)
        factors.append(st)
        weight += tuple(lam[comp[i]] for i in p)
    return SemisimpleAlgebra(tuple(factors)), weight


def part_node_map(t, deleted: Iterable[int]) -> List[int]:
    """Original 1-based node index for each node of the part, in part order."""
    t = as_simple(t)
    probe = tuple(range(1, t.rank + 1))
    # probe weights are dominant, so the label permutation is read back directly
    _, w = part_weight(t, probe, deleted)
    return list(w)


# ---------------------------------------------------------------------------
# minimal chains

def _nonzero(t: SimpleType, u, v) -> bool:
    return inner_product(t, u, v) != 0


def minimal_chains(t, lam: Sequence[int], mu: Sequence[int]) -> List[Chain]:
    """All minimal chains of simple roots joining ``lam`` and ``mu``."""
    t = as_simple(t)
    lam = _check_dominant(t, lam)
    mu = _check_dominant(t, mu)
    n = t.rank
    roots = [simple_root(t, j + 1) for j in range(n)]
    in_lam = [_nonzero(t, lam, roots[j]) for j in range(n)]
    in_mu = [_nonzero(t, roots[j], mu) for j in range(n)]
    link = [[_nonzero(t, roots[a], roots[b]) for b in range(n)] for a in range(n)]
    found: Set[Tuple[int, ...]] = set()

    def extend(path: List[int]):
        last = path[-1]
        if in_mu[last]:
            # the first node touching mu must end the chain
            found.add(tuple(j + 1 for j in path))
            return
        for nxt in range(n):
            if not link[last][nxt] or in_lam[nxt]:
                continue  # must stay linked and may not touch lam again
            if any(link[prev][nxt] for prev in path[:-1]):
                continue  # no shortcut back to earlier nodes
            if nxt in path:
                continue
            extend(path + [nxt])

    for start in range(n):
        if in_lam[start]:
            extend([start])
    return [Chain(c) for c in sorted(found, key=lambda c: (len(c), c))]


def guaranteed_constituents(t, lam: Sequence[int], mu: Sequence[int]) -> Set[Weight]:
    """Highest weights certain to occur in ``V(lam) (x) V(mu)``."""
    t = as_simple(t)
    lam = _check_dominant(t, lam)
    mu = _check_dominant(t, mu)
    top = tuple(a + b for a, b in zip(lam, mu))
    out = {top}
    for ch in minimal_chains(t, lam, mu):
        w = list(top)
        for j in ch.root_indices:
            for k, a in enumerate(simple_root(t, j)):
                w[k] -= a
        if all(x >= 0 for x in w):
            out.add(tuple(w))
    return out


def is_chain(t, lam, mu, seq: Sequence[int]) -> bool:
    """True if the 1-based root sequence ``seq`` links ``lam`` to ``mu``:
    the first root meets ``lam``, consecutive roots are joined, the last
    root meets ``mu`` ("meets" meaning nonzero inner product)."""
    t = as_simple(t)
    if not seq:
        return False
    r = [simple_root(t, j) for j in seq]
    return (
        _nonzero(t, lam, r[0])
        and all(_nonzero(t, r[k], r[k + 1]) for k in range(len(r) - 1))
        and _nonzero(t, r[-1], mu)
    )


def is_minimal_chain(t, lam, mu, seq: Sequence[int]) -> bool:
    """True if ``seq`` is a chain and no proper subsequence is one: only the
    first root meets ``lam``, only the last meets ``mu``, and non-consecutive
    roots are orthogonal."""
    t = as_simple(t)
    if not is_chain(t, lam, mu, seq):
        return False
    r = [simple_root(t, j) for j in seq]
    n = len(r)
    return (
        all(not _nonzero(t, lam, r[k]) for k in range(1, n))
        and all(not _nonzero(t, r[k], r[h]) for k in range(n) for h in range(k + 2, n))
        and all(not _nonzero(t, r[k], mu) for k in range(n - 1))
    )
