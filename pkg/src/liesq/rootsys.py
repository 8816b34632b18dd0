"""Root systems and weight lattices of the compact simple Lie algebras.

Node numbering follows Bourbaki.  Weights are integer tuples in the basis of
fundamental weights; row ``a`` of the Cartan matrix is the simple root
``alpha_a`` in that basis, and ``rho`` is the all-ones vector.

::

    A_l   1 - 2 - ... - l
    B_l   1 - 2 - ... - (l-1) => l          (alpha_l short)
    C_l   1 - 2 - ... - (l-1) <= l          (alpha_l long)
    D_l   1 - 2 - ... - (l-2) < (l-1)
                                \\ l
    E_l   1 - 3 - 4 - 5 - ... - l
                  |
                  2
    F_4   1 - 2 => 3 - 4                    (alpha_3, alpha_4 short)
    G_2   1 <= 2                            (alpha_1 short)

All arithmetic in this module is exact (``int`` / ``Fraction``).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from . import _kernels

Weight = Tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_MIN_RANK = {"A": 1, "B": 2, "C": 1, "D": 3}


class InvalidAlgebra(ValueError):
    """Raised for unknown families, bad ranks or unparsable algebra names."""


class InvalidWeight(ValueError):
    """Raised for weights of the wrong length or non-dominant highest weights."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam in _EXCEPTIONAL_RANKS:
            if self.rank not in _EXCEPTIONAL_RANKS[fam]:
                raise InvalidAlgebra(f"{fam}{self.rank} is not an exceptional type")
        elif fam in _MIN_RANK:
            if not isinstance(self.rank, int) or self.rank < _MIN_RANK[fam]:
                raise InvalidAlgebra(f"{fam} requires rank >= {_MIN_RANK[fam]}, got {self.rank}")
        else:
            raise InvalidAlgebra(f"unknown family {self.family!r}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def compact_name(self) -> str:
        f, l = self.family, self.rank
        if f == "A":
            return f"su{l + 1}"
        if f == "B":
            return f"so{2 * l + 1}"
        if f == "C":
            return f"sp{l}"
        if f == "D":
            return f"so{2 * l}"
        return self.name.lower()

    @property
    def dimension(self) -> int:
        return self.rank + 2 * len(positive_roots(self))

    @property
    def simply_laced(self) -> bool:
        return self.family in ("A", "D", "E")

    def __str__(self) -> str:
        return self.compact_name


@dataclass(frozen=True)
class SemisimpleAlgebra:
    factors: Tuple[SimpleType, ...]

    def __post_init__(self):
        facs = tuple(self.factors)
        if not facs:
            raise InvalidAlgebra("a semisimple algebra needs at least one simple factor")
        object.__setattr__(self, "factors", facs)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    @property
    def dimension(self) -> int:
        return sum(f.dimension for f in self.factors)

    def split(self, weight: Sequence[int]) -> List[Weight]:
        """Cut a concatenated weight into per-factor pieces."""
        weight = tuple(weight)
        if len(weight) != self.rank:
            raise InvalidWeight(f"weight {weight} has length {len(weight)}, expected {self.rank}")
        out, pos = [], 0
        for f in self.factors:
            out.append(weight[pos:pos + f.rank])
            pos += f.rank
        return out

    def __str__(self) -> str:
        return "+".join(str(f) for f in self.factors)


def as_semisimple(t) -> SemisimpleAlgebra:
    if isinstance(t, SemisimpleAlgebra):
        return t
    if isinstance(t, SimpleType):
        return SemisimpleAlgebra((t,))
    if isinstance(t, str):
        return as_semisimple(parse_algebra(t))
    raise TypeError(f"not an algebra: {t!r}")


def as_simple(t) -> SimpleType:
    if isinstance(t, SimpleType):
        return t
    if isinstance(t, SemisimpleAlgebra) and len(t.factors) == 1:
        return t.factors[0]
    if isinstance(t, str):
        return as_simple(parse_algebra(t))
    raise InvalidAlgebra(f"{t} is not simple")


_NAME_RE = re.compile(r"^\s*(su|so|sp|[abcdefg])\s*\(?\s*(\d+)\s*\)?\s*$", re.IGNORECASE)


def parse_simple(text: str) -> SimpleType:
    """Parse ``"A3"``, ``"su4"``, ``"so(7)"``, ``"sp2"``, ``"e6"`` ... (case-insensitive)."""
    m = _NAME_RE.match(text)
    if not m:
        raise InvalidAlgebra(f"cannot parse algebra name {text!r}")
    head, n = m.group(1).lower(), int(m.group(2))
    if head == "su":
        if n < 2:
            raise InvalidAlgebra("su(n) needs n >= 2")
        return SimpleType("A", n - 1)
    if head == "so":
        if n % 2:
            if n < 5:
                raise InvalidAlgebra(f"so({n}): use su2 for so(3); B requires rank >= 2")
            return SimpleType("B", (n - 1) // 2)
        if n < 6:
            raise InvalidAlgebra(f"so({n}) is not simple")
        return SimpleType("D", n // 2)
    if head == "sp":
        return SimpleType("C", n)
    return SimpleType(head.upper(), n)


def parse_algebra(text: str):
    """Parse a simple name or a ``+``-joined list of them."""
    parts = [p for p in text.split("+")]
    if len(parts) == 1:
        return parse_simple(parts[0])
    return SemisimpleAlgebra(tuple(parse_simple(p) for p in parts))


def parse_weight(text: str) -> Weight:
    """Parse ``"1,0,0"`` (also accepts ``(1,0,0)`` and whitespace)."""
    body = text.strip().strip("()[]")
    if not body:
        raise InvalidWeight("empty weight")
    try:
        return tuple(int(x) for x in body.split(","))
    except ValueError as exc:
        raise InvalidWeight(f"cannot parse weight {text!r}") from exc


# ---------------------------------------------------------------------------
# Cartan data

def _chain(n: int) -> List[List[int]]:
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
        if i + 1 < n:
            m[i][i + 1] = m[i + 1][i] = -1
    return m


@lru_cache(maxsize=None)
def _cartan(t: SimpleType) -> Tuple[Tuple[int, ...], ...]:
    f, l = t.family, t.rank
    if f == "A":
        m = _chain(l)
    elif f == "B":
        m = _chain(l)
        m[l - 2][l - 1] = -2
    elif f == "C":
        m = _chain(l)
        if l > 1:
            m[l - 1][l - 2] = -2
    elif f == "D":
        m = _chain(l)
        m[l - 2][l - 1] = m[l - 1][l - 2] = 0
        m[l - 3][l - 1] = m[l - 1][l - 3] = -1
    elif f == "E":
        m = [[0] * l for _ in range(l)]
        for i in range(l):
            m[i][i] = 2
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, l - 1)]
        for a, b in edges:
            m[a][b] = m[b][a] = -1
    elif f == "F":
        m = _chain(4)
        m[1][2] = -2
    else:  # G2
        m = [[2, -1], [-3, 2]]
    return tuple(tuple(r) for r in m)


def cartan_matrix(t) -> np.ndarray:
    """Integer Cartan matrix; row ``a`` is the simple root ``alpha_a`` in
    fundamental-weight coordinates, ``a_ab = 2 (alpha_a|alpha_b)/(alpha_b|alpha_b)``."""
    return np.array(_cartan(as_simple(t)), dtype=np.int64)


@lru_cache(maxsize=None)
def _half_lengths(t: SimpleType) -> Tuple[Fraction, ...]:
    # (alpha_a|alpha_a)/2 with long roots normalised to length^2 = 2
    f, l = t.family, t.rank
    if f == "B":
        return tuple([Fraction(1)] * (l - 1) + [Fraction(1, 2)])
    if f == "C":
        return tuple([Fraction(1, 2)] * (l - 1) + [Fraction(1)])
    if f == "F":
        return (Fraction(1), Fraction(1), Fraction(1, 2), Fraction(1, 2))
    if f == "G":
        return (Fraction(1, 3), Fraction(1))
    return tuple([Fraction(1)] * l)


@lru_cache(maxsize=None)
def _root_gram(t: SimpleType) -> Tuple[Tuple[Fraction, ...], ...]:
    c, d = _cartan(t), _half_lengths(t)
    n = t.rank
    return tuple(tuple(c[a][b] * d[b] for b in range(n)) for a in range(n))


def _frac_inverse(m: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _inverse_cartan(t: SimpleType) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(r) for r in _frac_inverse(_cartan(t)))


@lru_cache(maxsize=None)
def weight_gram(t: SimpleType) -> Tuple[Tuple[Fraction, ...], ...]:
    """Inner products ``(omega_a|omega_b)`` of the fundamental weights."""
    inv = _inverse_cartan(t)
    d = _half_lengths(t)
    n = t.rank
    return tuple(tuple(inv[a][b] * d[b] for b in range(n)) for a in range(n))


@lru_cache(maxsize=None)
def _int_gram(t: SimpleType) -> Tuple[int, np.ndarray]:
    g = weight_gram(t)
    den = 1
    for row in g:
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
    mat = np.array([[int(x * den) for x in row] for row in g], dtype=np.int64)
    mat.setflags(write=False)
    return den, mat


def _check_len(t: SimpleType, w: Sequence[int]) -> Weight:
    w = tuple(int(x) for x in w)
    if len(w) != t.rank:
        raise InvalidWeight(f"weight {w} has length {len(w)}, expected rank {t.rank} for {t}")
    return w


def inner_product(t, u: Sequence[int], v: Sequence[int]) -> Fraction:
    """Invariant form on weights/roots given in fundamental-weight coordinates."""
    t = as_simple(t)
    u, v = _check_len(t, u), _check_len(t, v)
    g = weight_gram(t)
    return sum((u[a] * g[a][b] * v[b] for a in range(t.rank) for b in range(t.rank)), Fraction(0))


def simple_root(t, a: int) -> Weight:
    """Simple root ``alpha_a`` (1-based) in fundamental-weight coordinates."""
    t = as_simple(t)
    return _cartan(t)[a - 1]


def rho(t) -> Weight:
    return (1,) * as_simple(t).rank


def root_coordinates(t, w: Sequence[int]) -> Tuple[Fraction, ...]:
    """Express a weight in the basis of simple roots."""
    t = as_simple(t)
    w = _check_len(t, w)
    inv = _inverse_cartan(t)
    return tuple(sum((w[a] * inv[a][b] for a in range(t.rank)), Fraction(0)) for b in range(t.rank))


@lru_cache(maxsize=None)
def _scaled_inverse_cartan(t: SimpleType) -> np.ndarray:
    inv = _inverse_cartan(t)
    den = 1
    for row in inv:
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
    m = np.array([[int(x * den) for x in row] for row in inv], dtype=np.int64)
    m.setflags(write=False)
    return m


def order_key(t, w: Sequence[int]):
    """Sort key refining the dominance order: height, then simple-root coordinates.

    Root coordinates are scaled by a common positive integer so the key is
    all-integer; the order is the same.
    """
    t = as_simple(t)
    rc = tuple(int(x) for x in np.asarray(w, dtype=np.int64) @ _scaled_inverse_cartan(t))
    return (sum(rc), rc)


# ---------------------------------------------------------------------------
# roots

@lru_cache(maxsize=None)
def _positive_roots(t: SimpleType) -> Tuple[Tuple[Weight, Tuple[int, ...]], ...]:
    c = _cartan(t)
    n = t.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]

    def to_weight(rc):
        return tuple(sum(rc[a] * c[a][b] for a in range(n)) for b in range(n))

    found = {s: to_weight(s) for s in simple}
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            wb = found[beta]
            for i in range(n):
                # alpha_i-string through beta: p downward steps, q = p - <beta, alpha_i^vee>
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                q = p - wb[i]
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found[up] = to_weight(up)
                        nxt.append(up)
        layer = nxt
    ordered = sorted(found, key=lambda rc: (sum(rc), rc))
    return tuple((found[rc], rc) for rc in ordered)


def positive_roots(t) -> List[Weight]:
    """Positive roots in fundamental-weight coordinates, sorted by height."""
    return [w for w, _ in _positive_roots(as_simple(t))]


def positive_roots_in_root_basis(t) -> List[Tuple[int, ...]]:
    return [rc for _, rc in _positive_roots(as_simple(t))]


def highest_root(t) -> Weight:
    return positive_roots(t)[-1]


@lru_cache(maxsize=None)
def _pos_array(t: SimpleType) -> np.ndarray:
    a = np.array(positive_roots(t), dtype=np.int64)
    a.setflags(write=False)
    return a


# ---------------------------------------------------------------------------
# dimensions

def is_dominant(w: Sequence[int]) -> bool:
    return all(x >= 0 for x in w)


def _check_dominant(t: SimpleType, lam: Sequence[int]) -> Weight:
    lam = _check_len(t, lam)
    if not is_dominant(lam):
        raise InvalidWeight(f"{lam} is not dominant")
    return lam


@lru_cache(maxsize=65536)
def _weyl_dim(t: SimpleType, lam: Weight) -> int:
    den, g = _int_gram(t)
    lr = np.array(lam, dtype=np.int64) + 1
    r = np.ones(t.rank, dtype=np.int64)
    num, dd = 1, 1
    for alpha in _pos_array(t):
        ga = g @ alpha
        num *= int(lr @ ga)
        dd *= int(r @ ga)
    if num % dd:
        raise ArithmeticError("Weyl dimension formula produced a non-integer")
    return num // dd


def weyl_dim(t, lam: Sequence[int]) -> int:
    """Dimension of the irreducible representation with highest weight ``lam``.

    For a semisimple algebra the weight is the concatenation of the factor
    weights and the result is the product of the factor dimensions.
    """
    if isinstance(t, str):
        t = parse_algebra(t)
    if isinstance(t, SemisimpleAlgebra) and len(t.factors) > 1:
        out = 1
        for f, piece in zip(t.factors, t.split(lam)):
            out *= weyl_dim(f, piece)
        return out
    t = as_simple(t)
    return _weyl_dim(t, _check_dominant(t, lam))


# ---------------------------------------------------------------------------
# Weyl group actions

def to_dominant(t, w: Sequence[int]) -> Tuple[Weight, int]:
    """Dominant representative of the Weyl orbit of ``w`` and the parity of
    the number of simple reflections used (+1 / -1)."""
    t = as_simple(t)
    w = _check_len(t, w)
    red, cnt = _kernels.reduce_batch(np.array([w], dtype=np.int64), cartan_matrix(t))
    return tuple(int(x) for x in red[0]), (-1 if cnt[0] % 2 else 1)


def dominant_reduce(t, w: Sequence[int]):
    """Reflect ``w + rho`` into the dominant chamber.

    Returns ``(mu, sign)`` with ``mu = reflected - rho`` and ``sign`` the
    determinant of the Weyl element, or ``(None, 0)`` if ``w + rho`` lies on a
    wall (it is then fixed by a reflection).
    """
    t = as_simple(t)
    w = _check_len(t, w)
    red, cnt = _kernels.reduce_batch(np.array([w], dtype=np.int64) + 1, cartan_matrix(t))
    if (red[0] == 0).any():
        return None, 0
    return tuple(int(x) - 1 for x in red[0]), (-1 if cnt[0] % 2 else 1)


def klimyk_accumulate(t: SimpleType, shift: Sequence[int], weights: np.ndarray, mults: np.ndarray) -> Dict[Weight, int]:
    """``sum_nu m(nu) * sign * [reduce(shift + nu + rho) - rho]`` over a weight multiset."""
    pts = np.asarray(weights, dtype=np.int64) + np.asarray(shift, dtype=np.int64) + 1
    red, cnt = _kernels.reduce_batch(pts, cartan_matrix(t))
    keep = ~(red == 0).any(axis=1)
    red = red[keep] - 1
    sgn = np.where(cnt[keep] % 2 == 1, -1, 1) * np.asarray(mults, dtype=np.int64)[keep]
    out: Dict[Weight, int] = {}
    if red.shape[0] == 0:
        return out
    uniq, inv = np.unique(red, axis=0, return_inverse=True)
    inv = np.asarray(inv).reshape(-1)
    tot = np.zeros(uniq.shape[0], dtype=np.int64)
    np.add.at(tot, inv, sgn)
    for row, c in zip(uniq, tot):
        if c:
            out[tuple(int(x) for x in row)] = int(c)
    return out


def orbit(t, w: Sequence[int]) -> np.ndarray:
    """All elements of the Weyl orbit of ``w`` (rows, unsorted)."""
    t = as_simple(t)
    dom, _ = to_dominant(t, w)
    return _orbit_array(t, dom)


@lru_cache(maxsize=4096)
def _orbit_array(t: SimpleType, dom: Weight) -> np.ndarray:
    c = cartan_matrix(t)
    seen = np.array([dom], dtype=np.int64)
    frontier = seen
    while frontier.shape[0]:
        new = []
        for i in range(t.rank):
            sel = frontier[frontier[:, i] > 0]
            if sel.shape[0]:
                new.append(sel - sel[:, i:i + 1] * c[i])
        if not new:
            break
        cand = np.unique(np.concatenate(new), axis=0)
        # only downward moves: new elements are never in earlier layers of lower height
        frontier = cand
        seen = np.concatenate([seen, cand])
    seen = np.unique(seen, axis=0)
    seen.setflags(write=False)
    return seen


# ---------------------------------------------------------------------------
# weight systems

@lru_cache(maxsize=4096)
def _dominant_weights(t: SimpleType, lam: Weight) -> Tuple[Weight, ...]:
    """Dominant weights of V(lam), sorted by decreasing height."""
    pos = positive_roots(t)
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for a in pos:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in seen and all(x >= 0 for x in nu):
                seen.add(nu)
                stack.append(nu)
    return tuple(sorted(seen, key=lambda w: order_key(t, w), reverse=True))


@lru_cache(maxsize=4096)
def _dominant_character(t: SimpleType, lam: Weight) -> Tuple[Tuple[Weight, int], ...]:
    dom = _dominant_weights(t, lam)
    den, g = _int_gram(t)
    mult = _kernels.freudenthal(
        np.array(dom, dtype=np.int64).reshape(len(dom), t.rank),
        cartan_matrix(t), _pos_array(t), g, np.ones(t.rank, dtype=np.int64),
    )
    return tuple((w, int(m)) for w, m in zip(dom, mult))


def dominant_character(t, lam: Sequence[int]) -> Dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam) (Freudenthal)."""
    t = as_simple(t)
    lam = _check_dominant(t, lam)
    return dict(_dominant_character(t, lam))


@lru_cache(maxsize=512)
def _weight_arrays(t: SimpleType, lam: Weight) -> Tuple[np.ndarray, np.ndarray]:
    pts, mults = [], []
    for w, m in _dominant_character(t, lam):
        orb = _orbit_array(t, w)
        pts.append(orb)
        mults.append(np.full(orb.shape[0], m, dtype=np.int64))
    W = np.concatenate(pts)
    M = np.concatenate(mults)
    W.setflags(write=False)
    M.setflags(write=False)
    return W, M


def weight_arrays(t, lam: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    """All distinct weights of V(lam) as rows, with their multiplicities."""
    t = as_simple(t)
    return _weight_arrays(t, _check_dominant(t, lam))


def weight_system(t, lam: Sequence[int]) -> Dict[Weight, int]:
    """Full weight multiset of V(lam) as ``{weight: multiplicity}``."""
    W, M = weight_arrays(t, lam)
    return {tuple(int(x) for x in w): int(m) for w, m in zip(W, M)}


def all_weights(rank: int, max_sum: int, min_sum: int = 0) -> Iterable[Weight]:
    """Dominant weights of the given length with ``min_sum <= sum <= max_sum``,
    in a fixed deterministic order (by label sum, then reverse-lexicographic)."""
    def rec(n, budget):
        if n == 0:
            yield ()
            return
        for x in range(budget, -1, -1):
            for rest in rec(n - 1, budget - x):
                yield (x,) + rest

    for s in range(min_sum, max_sum + 1):
        for w in rec(rank, s):
            if sum(w) == s:
                yield w


def simple_types(max_rank: int) -> List[SimpleType]:
    """Every simple type of rank <= max_rank, one label per isomorphism-free family instance."""
    out = []
    for l in range(1, max_rank + 1):
        out.append(SimpleType("A", l))
        if l >= 2:
            out.append(SimpleType("B", l))
        out.append(SimpleType("C", l))
        if l >= 3:
            out.append(SimpleType("D", l))
        if l == 2:
            out.append(SimpleType("G", 2))
        if l == 4:
            out.append(SimpleType("F", 4))
        if l in (6, 7, 8):
            out.append(SimpleType("E", l))
    return out
