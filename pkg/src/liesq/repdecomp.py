"""Decompositions of tensor products, alternating and symmetric squares.

A :class:`Decomposition` is a multiset of highest weights over a
:class:`~liesq.rootsys.SemisimpleAlgebra`.  Weights of a semisimple algebra are
concatenations of the per-factor weights.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

import numpy as np

from . import _kernels
from .rootsys import (
    InvalidWeight,
    SemisimpleAlgebra,
    SimpleType,
    Weight,
    _check_dominant,
    all_weights,
    as_semisimple,
    as_simple,
    dominant_character,
    highest_root,
    klimyk_accumulate,
    order_key,
    simple_root,
    simple_types,
    weight_arrays,
    weyl_dim,
    _dominant_weights,
)


@dataclass(frozen=True)
class Decomposition:
    """Immutable multiset ``{highest weight: multiplicity}``.

    Terms are stored sorted by weight (descending) so equality and hashing do
    not depend on construction order.
    """

    algebra: SemisimpleAlgebra
    terms: Tuple[Tuple[Weight, int], ...]

    @classmethod
    def build(cls, algebra, terms: Mapping[Sequence[int], int], expected_dim: int | None = None) -> "Decomposition":
        alg = as_semisimple(algebra)
        clean: Dict[Weight, int] = {}
        for w, m in terms.items():
            w = tuple(int(x) for x in w)
            m = int(m)
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {w}")
            if m == 0:
                continue
            if len(w) != alg.rank or any(x < 0 for x in w):
                raise InvalidWeight(f"{w} is not a dominant weight of {alg}")
            clean[w] = clean.get(w, 0) + m
        dec = cls(alg, tuple(sorted(clean.items(), reverse=True)))
        if expected_dim is not None and dec.dimension != expected_dim:
            raise ArithmeticError(
                f"decomposition has dimension {dec.dimension}, expected {expected_dim}"
            )
        return dec

    @property
    def dimension(self) -> int:
        return sum(m * weyl_dim(self.algebra, w) for w, m in self.terms)

    def as_dict(self) -> Dict[Weight, int]:
        return dict(self.terms)

    def __getitem__(self, w) -> int:
        return mult(self, w)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def to_json(self) -> dict:
        return {
            "algebra": str(self.algebra),
            "terms": [{"weight": list(w), "multiplicity": m, "dim": weyl_dim(self.algebra, w)} for w, m in self.terms],
            "dimension": self.dimension,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Decomposition":
        from .rootsys import parse_algebra

        alg = as_semisimple(parse_algebra(data["algebra"]))
        return cls.build(alg, {tuple(t["weight"]): t["multiplicity"] for t in data["terms"]})

    def format(self) -> str:
        return ", ".join(f"({','.join(map(str, w))}) ×{m}" for w, m in self.terms)


def one_norm(d: Decomposition) -> int:
    return sum(m for _, m in d.terms)


def two_norm(d: Decomposition) -> int:
    return sum(m * m for _, m in d.terms)


def mult(d: Decomposition, w: Sequence[int]) -> int:
    return d.as_dict().get(tuple(int(x) for x in w), 0)


def merge(*ds: Decomposition) -> Decomposition:
    """Direct sum of decompositions over the same algebra."""
    if not ds:
        raise ValueError("nothing to merge")
    alg = ds[0].algebra
    acc: Dict[Weight, int] = {}
    for d in ds:
        if d.algebra != alg:
            raise ValueError("cannot merge decompositions over different algebras")
        for w, m in d.terms:
            acc[w] = acc.get(w, 0) + m
    return Decomposition.build(alg, acc)


def outer(d1: Decomposition, d2: Decomposition) -> Decomposition:
    """Outer tensor product over the direct sum of the two algebras."""
    alg = SemisimpleAlgebra(d1.algebra.factors + d2.algebra.factors)
    acc = {}
    for w1, m1 in d1.terms:
        for w2, m2 in d2.terms:
            acc[w1 + w2] = acc.get(w1 + w2, 0) + m1 * m2
    return Decomposition.build(alg, acc)


def _irrep(alg, w) -> Decomposition:
    return Decomposition.build(alg, {tuple(w): 1})


def _single(t):
    alg = as_semisimple(t)
    return alg, (alg.factors[0] if len(alg.factors) == 1 else None)


# ---------------------------------------------------------------------------
# tensor products

def _tensor_simple(t: SimpleType, lam: Weight, mu: Weight) -> Dict[Weight, int]:
    lam = _check_dominant(t, lam)
    mu = _check_dominant(t, mu)
    if weyl_dim(t, mu) > weyl_dim(t, lam):
        lam, mu = mu, lam
    W, M = weight_arrays(t, mu)
    out = klimyk_accumulate(t, lam, W, M)
    if any(c < 0 for c in out.values()):
        raise ArithmeticError("negative multiplicity in tensor product")
    return out


def tensor_decompose(t, lam: Sequence[int], mu: Sequence[int]) -> Decomposition:
    """Decompose the tensor product of two irreducible representations."""
    alg = as_semisimple(t)
    pl, pm = alg.split(lam), alg.split(mu)
    expected = weyl_dim(alg, lam) * weyl_dim(alg, mu)
    result = None
    for f, a, b in zip(alg.factors, pl, pm):
        d = Decomposition.build(f, _tensor_simple(f, a, b))
        result = d if result is None else outer(result, d)
    return Decomposition.build(alg, result.as_dict(), expected_dim=expected)


# ---------------------------------------------------------------------------
# alternating / symmetric squares

def _strip(t: SimpleType, dominant_mults: Dict[Weight, int]) -> Dict[Weight, int]:
    """Peel irreducible characters off a dominant multiplicity table, always
    taking the greatest remaining weight (height, then simple-root coordinates)."""
    rem = {w: m for w, m in dominant_mults.items() if m}
    keys: Dict[Weight, tuple] = {}
    out: Dict[Weight, int] = {}
    while rem:
        top = max(rem, key=lambda w: keys[w] if w in keys else keys.setdefault(w, order_key(t, w)))
        c = rem[top]
        if c < 0:
            raise ArithmeticError(f"negative leading coefficient at {top}: not a character")
        out[top] = c
        for w, m in dominant_character(t, top).items():
            v = rem.get(w, 0) - c * m
            if v:
                rem[w] = v
            else:
                rem.pop(w, None)
    return out


def _pair_table(t: SimpleType, W: np.ndarray, M: np.ndarray, tops: Sequence[Weight]):
    """Dominant evaluation points below the sums of ``tops`` with the pair
    counts ``sum_w m(w) m(nu - w)`` and diagonal terms ``m(nu / 2)``."""
    targets = set()
    for i, a in enumerate(tops):
        for b in tops[i:]:
            targets.update(_dominant_weights(t, tuple(x + y for x, y in zip(a, b))))
    targets = sorted(targets)
    T = np.array(targets, dtype=np.int64).reshape(len(targets), t.rank)
    pairs = _kernels.pair_counts(W, M, T)
    lookup = {tuple(int(x) for x in w): int(m) for w, m in zip(W, M)}
    diag = [lookup.get(tuple(x // 2 for x in nu), 0) if all(x % 2 == 0 for x in nu) else 0 for nu in targets]
    return tuple(zip(targets, (int(p) for p in pairs), diag))


@lru_cache(maxsize=256)
def _simple_pair_table(t: SimpleType, lam: Weight):
    W, M = weight_arrays(t, lam)
    return _pair_table(t, W, M, [lam])


def _square_from_table(t: SimpleType, table, kind: str) -> Dict[Weight, int]:
    if kind not in ("alt", "sym"):
        raise ValueError(f"kind must be 'alt' or 'sym', not {kind!r}")
    sgn = -1 if kind == "alt" else 1
    dom: Dict[Weight, int] = {}
    for nu, p, diag in table:
        val = p + sgn * diag
        if val % 2:
            raise ArithmeticError("odd count in square character")
        if val:
            dom[nu] = val // 2
    return _strip(t, dom)


def _square_simple(t: SimpleType, lam: Weight, kind: str) -> Dict[Weight, int]:
    lam = _check_dominant(t, lam)
    return _square_from_table(t, _simple_pair_table(t, lam), kind)


def square_of_sum(t, weights: Sequence[Sequence[int]], kind: str) -> Decomposition:
    """Alt^2 or Sym^2 of the reducible representation ``V(w_1) + V(w_2) + ...``."""
    t = as_simple(t)
    weights = [_check_dominant(t, w) for w in weights]
    if not weights:
        raise ValueError("empty weight list")
    Ws, Ms = [], []
    for w in weights:
        a, b = weight_arrays(t, w)
        Ws.append(a)
        Ms.append(b)
    W = np.concatenate(Ws)
    M = np.concatenate(Ms)
    # merge repeated weights
    uniq, inv = np.unique(W, axis=0, return_inverse=True)
    tot = np.zeros(uniq.shape[0], dtype=np.int64)
    np.add.at(tot, np.asarray(inv).reshape(-1), M)
    d = sum(weyl_dim(t, w) for w in weights)
    exp = d * (d - 1) // 2 if kind == "alt" else d * (d + 1) // 2
    table = _pair_table(t, uniq, tot, weights)
    return Decomposition.build(t, _square_from_table(t, table, kind), expected_dim=exp)


def outer_alt_sym_square(factors: Sequence, weights: Sequence[Sequence[int]]) -> Tuple[Decomposition, Decomposition]:
    """``(Alt^2, Sym^2)`` of an outer tensor product of irreducibles, one per factor."""
    factors = [as_simple(f) for f in factors]
    if len(factors) != len(weights) or not factors:
        raise ValueError("need one weight per factor")
    f0 = factors[0]
    alt = Decomposition.build(f0, _square_simple(f0, tuple(weights[0]), "alt"))
    sym = Decomposition.build(f0, _square_simple(f0, tuple(weights[0]), "sym"))
    for f, w in zip(factors[1:], weights[1:]):
        a2 = Decomposition.build(f, _square_simple(f, tuple(w), "alt"))
        s2 = Decomposition.build(f, _square_simple(f, tuple(w), "sym"))
        # Alt(x (x) y) = Sym x (x) Alt y + Alt x (x) Sym y;  Sym = Sym(x)Sym + Alt(x)Alt
        alt, sym = merge(outer(sym, a2), outer(alt, s2)), merge(outer(sym, s2), outer(alt, a2))
    alg = SemisimpleAlgebra(tuple(factors))
    d = weyl_dim(alg, tuple(x for w in weights for x in w))
    alt = Decomposition.build(alg, alt.as_dict(), expected_dim=d * (d - 1) // 2)
    sym = Decomposition.build(alg, sym.as_dict(), expected_dim=d * (d + 1) // 2)
    return alt, sym


def _square(t, lam, kind) -> Decomposition:
    alg, simple = _single(t)
    if simple is None:
        alt, sym = outer_alt_sym_square(alg.factors, alg.split(lam))
        return alt if kind == "alt" else sym
    lam = _check_dominant(simple, lam)
    d = weyl_dim(simple, lam)
    exp = d * (d - 1) // 2 if kind == "alt" else d * (d + 1) // 2
    return Decomposition.build(simple, _square_simple(simple, lam, kind), expected_dim=exp)


def alt_square(t, lam: Sequence[int]) -> Decomposition:
    """Decomposition of the alternating square of ``V(lam)``."""
    return _square(t, lam, "alt")


def sym_square(t, lam: Sequence[int]) -> Decomposition:
    """Decomposition of the symmetric square of ``V(lam)``."""
    return _square(t, lam, "sym")


def is_irreducible_square(t, lam: Sequence[int], kind: str) -> bool:
    d = _square(t, lam, kind)
    return len(d.terms) == 1 and d.terms[0][1] == 1


# ---------------------------------------------------------------------------
# duals and the adjoint representation

def _dual_simple(t: SimpleType, lam: Weight) -> Weight:
    f, l = t.family, t.rank
    if f == "A":
        return lam[::-1]
    if f == "D" and l % 2:
        return lam[:-2] + (lam[-1], lam[-2])
    if f == "E" and l == 6:
        x1, x2, x3, x4, x5, x6 = lam
        return (x6, x2, x5, x4, x3, x1)
    return lam


def dual_weight(t, lam: Sequence[int]) -> Weight:
    """Highest weight of the dual representation."""
    alg = as_semisimple(t)
    out: Tuple[int, ...] = ()
    for f, piece in zip(alg.factors, alg.split(lam)):
        out += _dual_simple(f, _check_dominant(f, piece))
    return out


def is_self_dual(t, lam: Sequence[int]) -> bool:
    return dual_weight(t, lam) == tuple(int(x) for x in lam)


def adjoint_weight(t) -> Weight:
    """Highest weight of the adjoint representation (the highest root)."""
    return highest_root(as_simple(t))


# ---------------------------------------------------------------------------
# scanning for irreducible squares

def _fast_irreducible(t: SimpleType, lam: Weight, kind: str) -> bool:
    # The square always contains the irreducible with the top weight of the
    # square; it is irreducible iff that piece already has full dimension.
    d = weyl_dim(t, lam)
    if kind == "sym":
        return weyl_dim(t, tuple(2 * x for x in lam)) == d * (d + 1) // 2
    nz = [i for i, x in enumerate(lam) if x]
    if len(nz) != 1:
        # two distinct second-highest weights give two maximal weights in Alt^2
        return False
    i = nz[0]
    top = tuple(2 * x - a for x, a in zip(lam, simple_root(t, i + 1)))
    if any(x < 0 for x in top):
        return False
    return weyl_dim(t, top) == d * (d - 1) // 2


def scan_tables(kind: str, max_rank: int, max_label_sum: int, fast: bool = True) -> List[Tuple[SimpleType, Weight, Decomposition]]:
    """All ``(t, lam)`` with rank(t) <= max_rank, 1 <= sum(lam) <= max_label_sum
    and irreducible alternating (``kind='alt'``) or symmetric square.

    With ``fast=True`` candidates are screened by a dimension test and only
    the hits are fully decomposed; ``fast=False`` decomposes everything.
    """
    if kind not in ("alt", "sym"):
        raise ValueError(f"kind must be 'alt' or 'sym', not {kind!r}")
    if max_rank < 1 or max_label_sum < 1:
        raise ValueError("bounds must be >= 1")
    hits = []
    for t in simple_types(max_rank):
        for lam in all_weights(t.rank, max_label_sum, 1):
            if fast and not _fast_irreducible(t, lam, kind):
                continue
            dec = _square(t, lam, kind)
            if len(dec.terms) == 1 and dec.terms[0][1] == 1:
                hits.append((t, lam, dec))
    hits.sort(key=lambda h: (h[0].rank, "ABCDEFG".index(h[0].family), sum(h[1]), tuple(-x for x in h[1])))
    return hits
