"""Explicit matrix representations: tensor squares, commutants, Lie closures.

Two scalar backends are supported.  ``exact`` works over the Gaussian
rationals (entries :class:`~liesq.scalars.QI`) and returns certified integers;
``float`` works in double precision and reports a spectral gap ratio, turning
the answer into "indeterminate" when the gap is below ``GAP_THRESHOLD``.

Commutant dimensions are complex dimensions.  Lie-closure dimensions are real
dimensions of the real Lie algebra spanned by the generators and brackets.
"""
from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import float_linalg as fl
from .exact_linalg import Echelon, RationalSpan, qi_row, rational_nullspace, solve_homogeneous
from .scalars import (
    EXACT,
    FLOAT,
    QI,
    bracket,
    dagger,
    equal,
    exact_identity,
    exact_zeros,
    identity_like,
    is_exact,
    is_zero,
    kron,
    matmul,
    nonzeros,
    to_exact,
    to_float,
)

DEFAULT_TOL = 1e-9
EXACT_AUTO_LIMIT = 36  # largest matrix size handled exactly under backend="auto"


class Indeterminate(ArithmeticError):
    """A float computation could not certify a rank decision."""


class NotCompact(ValueError):
    """Generators fail a compact-form membership check."""


# ---------------------------------------------------------------------------
# representation container

@dataclass(frozen=True)
class MatrixRep:
    """A list of ``dim x dim`` generator matrices sharing one scalar kind."""

    dim: int
    generators: Tuple[np.ndarray, ...]
    scalars: str = EXACT
    check_compact: bool = False

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("a representation needs at least one generator")
        conv = []
        for g in gens:
            g = to_exact(g) if self.scalars == EXACT else to_float(np.asarray(g))
            if g.shape != (self.dim, self.dim):
                raise ValueError(f"generator of shape {g.shape}, expected {(self.dim, self.dim)}")
            conv.append(g)
        object.__setattr__(self, "generators", tuple(conv))
        if self.scalars not in (EXACT, FLOAT):
            raise ValueError(f"unknown scalar kind {self.scalars!r}")
        if self.check_compact and not self.is_skew_hermitian():
            raise NotCompact("generators are not skew-Hermitian")

    @classmethod
    def from_matrices(cls, mats: Sequence, scalars: str = EXACT, check_compact: bool = False) -> "MatrixRep":
        mats = [np.asarray(m, dtype=object if scalars == EXACT else np.complex128) for m in mats]
        return cls(mats[0].shape[0], tuple(mats), scalars, check_compact)

    @property
    def exact(self) -> bool:
        return self.scalars == EXACT

    def is_skew_hermitian(self, tol: float = 1e-12) -> bool:
        return all(equal(dagger(g), -g, 0 if self.exact else tol) for g in self.generators)

    def to_float(self) -> "MatrixRep":
        return MatrixRep(self.dim, tuple(to_float(g) for g in self.generators), FLOAT, self.check_compact)

    def map(self, fn, dim: int) -> "MatrixRep":
        return MatrixRep(dim, tuple(fn(g) for g in self.generators), self.scalars, False)

    def __len__(self):
        return len(self.generators)


# ---------------------------------------------------------------------------
# standard defining representations

def _unit(n: int, j: int, k: int, val) -> np.ndarray:
    m = exact_zeros(n)
    m[j, k] = QI.coerce(val)
    return m


def standard_generators(family: str, size: int) -> MatrixRep:
    """Skew-Hermitian basis of the defining representation.

    ``su`` n x n (n >= 2), ``so`` k x k real antisymmetric (k >= 2), ``sp``
    2l x 2l preserving ``J = [[0, I], [-I, 0]]`` (l >= 1).
    """
    fam = family.lower()
    i = QI(0, 1)
    gens: List[np.ndarray] = []
    if fam == "su":
        n = size
        if n < 2:
            raise ValueError("su(n) needs n >= 2")
        for j in range(n):
            for k in range(j + 1, n):
                gens.append(_unit(n, j, k, i) + _unit(n, k, j, i))
                gens.append(_unit(n, j, k, 1) + _unit(n, k, j, -1))
        for j in range(n - 1):
            gens.append(_unit(n, j, j, i) + _unit(n, j + 1, j + 1, -i))
        return MatrixRep(n, tuple(gens), EXACT)
    if fam == "so":
        k = size
        if k < 2:
            raise ValueError("so(k) needs k >= 2")
        for a in range(k):
            for b in range(a + 1, k):
                gens.append(_unit(k, a, b, 1) + _unit(k, b, a, -1))
        return MatrixRep(k, tuple(gens), EXACT)
    if fam == "sp":
        l = size
        if l < 1:
            raise ValueError("sp(l) needs l >= 1")
        n = 2 * l

        def block(a: np.ndarray, b: np.ndarray) -> np.ndarray:
            m = exact_zeros(n)
            for (r, c), x in np.ndenumerate(a):
                m[r, c] = x
                m[l + r, l + c] = x.conjugate()
            for (r, c), x in np.ndenumerate(b):
                m[r, l + c] = x
                m[l + r, c] = -x.conjugate()
            return m

        z = exact_zeros(l)
        for j in range(l):
            for k in range(j + 1, l):
                gens.append(block(_unit(l, j, k, i) + _unit(l, k, j, i), z))
                gens.append(block(_unit(l, j, k, 1) + _unit(l, k, j, -1), z))
            gens.append(block(_unit(l, j, j, i), z))
        for j in range(l):
            for k in range(j, l):
                sym = _unit(l, j, k, 1) + (_unit(l, k, j, 1) if k != j else exact_zeros(l))
                gens.append(block(z, sym))
                gens.append(block(z, sym * i))
        return MatrixRep(n, tuple(gens), EXACT)
    raise ValueError(f"unknown family {family!r} (expected su, so or sp)")


def symplectic_form(l: int) -> np.ndarray:
    j = exact_zeros(2 * l)
    for k in range(l):
        j[k, l + k] = QI(1)
        j[l + k, k] = QI(-1)
    return j


# ---------------------------------------------------------------------------
# constructions

def tensor_square(r: MatrixRep) -> MatrixRep:
    """Generators ``A (x) 1 + 1 (x) A``."""
    one = identity_like(r.generators[0], r.dim)
    return r.map(lambda a: kron(a, one) + kron(one, a), r.dim ** 2)


def dual_rep(r: MatrixRep) -> MatrixRep:
    """Generators ``-A^T``."""
    return r.map(lambda a: -a.T, r.dim)


def tensor_with_dual(r: MatrixRep) -> MatrixRep:
    """Generators ``A (x) 1 - 1 (x) A^T``."""
    one = identity_like(r.generators[0], r.dim)
    return r.map(lambda a: kron(a, one) - kron(one, a.T), r.dim ** 2)


def tensor_product(r1: MatrixRep, r2: MatrixRep) -> MatrixRep:
    """Generators ``A_k (x) 1 + 1 (x) B_k`` for paired generator lists."""
    if len(r1) != len(r2):
        raise ValueError("tensor product needs paired generator lists of equal length")
    if r1.scalars != r2.scalars:
        raise ValueError("mixed scalar kinds")
    i1 = identity_like(r1.generators[0], r1.dim)
    i2 = identity_like(r2.generators[0], r2.dim)
    gens = tuple(kron(a, i2) + kron(i1, b) for a, b in zip(r1.generators, r2.generators))
    return MatrixRep(r1.dim * r2.dim, gens, r1.scalars)


def group_tensor_square(unitaries: Sequence[np.ndarray], scalars: str = EXACT) -> MatrixRep:
    """Generators ``U (x) U`` (group-level tensor square)."""
    conv = [to_exact(u) if scalars == EXACT else to_float(np.asarray(u)) for u in unitaries]
    return MatrixRep(conv[0].shape[0] ** 2, tuple(kron(u, u) for u in conv), scalars)


# ---------------------------------------------------------------------------
# commutants

@dataclass
class CommutantResult:
    dim: int
    backend: str
    basis: Optional[List[np.ndarray]] = None
    gap_ratio: Optional[float] = None
    tolerance: Optional[float] = None
    seed: Optional[int] = None

    @property
    def determinate(self) -> bool:
        return self.backend == "exact" or (self.gap_ratio is not None and self.gap_ratio >= fl.GAP_THRESHOLD)

    def to_json(self) -> dict:
        return {
            "commutant_dimension": self.dim,
            "dimension_kind": "complex",
            "backend": self.backend,
            "determinate": self.determinate,
            "gap_ratio": None if self.gap_ratio is None or not np.isfinite(self.gap_ratio) else self.gap_ratio,
            "tolerance": self.tolerance,
            "seed": self.seed,
        }


def resolve_backend(backend: Optional[str], r: MatrixRep) -> str:
    b = (backend or os.environ.get("LIESQ_BACKEND") or "auto").lower()
    if b not in ("auto", "exact", "float"):
        raise ValueError(f"unknown backend {b!r}")
    if b == "auto":
        return "exact" if r.exact and r.dim <= EXACT_AUTO_LIMIT else "float"
    if b == "exact" and not r.exact:
        raise ValueError("exact backend needs Gaussian-rational input")
    return b


def _scaled_entries(a: np.ndarray):
    """Nonzero entries of an exact matrix as Gaussian integers after a common scaling."""
    nz = list(nonzeros(a))
    den = 1
    for _, _, x in nz:
        for q in (x.re, x.im):
            den = den * q.denominator // gcd(den, q.denominator)
    return [(i, j, (int(x.re * den), int(x.im * den))) for i, j, x in nz]


def sylvester_rows(gens: Sequence[np.ndarray], d: int):
    """Rows of ``vec(A X - X A) = 0`` for every generator, ``vec`` row-major."""
    for a in gens:
        by_row: Dict[int, list] = defaultdict(list)
        by_col: Dict[int, list] = defaultdict(list)
        for i, j, v in _scaled_entries(a):
            by_row[i].append((j, v))
            by_col[j].append((i, v))
        for i in range(d):
            left = by_row.get(i, ())
            for b in range(d):
                right = by_col.get(b, ())
                if not left and not right:
                    continue
                row: Dict[int, tuple] = {}
                for c, (re, im) in left:
                    k = c * d + b
                    x = row.get(k, (0, 0))
                    row[k] = (x[0] + re, x[1] + im)
                for c, (re, im) in right:
                    k = i * d + c
                    x = row.get(k, (0, 0))
                    row[k] = (x[0] - re, x[1] - im)
                row = {k: v for k, v in row.items() if v != (0, 0)}
                if row:
                    yield row


def _exact_commutant(gens: Sequence[np.ndarray], d: int, want_basis: bool):
    dim, basis = solve_homogeneous(sylvester_rows(gens, d), range(d * d), want_basis)
    mats = None
    if want_basis:
        mats = []
        for vec in basis:
            m = exact_zeros(d)
            for k, x in vec.items():
                m[k // d, k % d] = x
            mats.append(m)
    return dim, mats


def commutant(r: MatrixRep, backend: Optional[str] = None, tol: float = DEFAULT_TOL, seed: int = 0,
              want_basis: bool = False) -> CommutantResult:
    """Commutant of the generator set, with backend metadata."""
    b = resolve_backend(backend, r)
    if b == "exact":
        dim, basis = _exact_commutant(r.generators, r.dim, want_basis)
        return CommutantResult(dim, "exact", basis)
    gens = [to_float(g) for g in r.generators]
    k, tracker = fl.commutant_basis(gens, tol=tol, seed=seed)
    return CommutantResult(int(k.shape[0]), "float", list(k) if want_basis else None, tracker.ratio, tol, seed)


def commutant_dimension(r: MatrixRep, backend: Optional[str] = None, tol: float = DEFAULT_TOL, seed: int = 0) -> int:
    """Complex dimension of ``{X : [X, A] = 0 for all generators A}``.

    Raises :class:`Indeterminate` when the float backend cannot separate
    zero from nonzero singular values.
    """
    res = commutant(r, backend, tol, seed)
    if not res.determinate:
        raise Indeterminate(f"spectral gap ratio {res.gap_ratio:.3g} below {fl.GAP_THRESHOLD:g}")
    return res.dim


def is_unitary(u: np.ndarray, tol: float = 1e-10) -> bool:
    n = u.shape[0]
    if is_exact(u):
        return equal(matmul(u, dagger(u)), exact_identity(n))
    return bool(np.allclose(u @ u.conj().T, np.eye(n), atol=tol))


def commutant_dimension_group(unitaries: Sequence[np.ndarray], backend: Optional[str] = None,
                              tol: float = DEFAULT_TOL, seed: int = 0) -> int:
    """Dimension of the commutant of ``{U (x) U}``."""
    if not unitaries:
        raise ValueError("need at least one unitary")
    exact = all(np.asarray(u).dtype == object for u in unitaries)
    for u in unitaries:
        u = np.asarray(u)
        if not is_unitary(u):
            raise ValueError("input matrix is not unitary")
    r = group_tensor_square(unitaries, EXACT if exact else FLOAT)
    return commutant_dimension(r, backend, tol, seed)


# ---------------------------------------------------------------------------
# Lie closure and reductive splitting

def _realify_exact(a: np.ndarray) -> List[Fraction]:
    return [x.re for x in a.flat] + [x.im for x in a.flat]


@dataclass
class Closure:
    basis: List[np.ndarray]
    backend: str
    gap_ratio: Optional[float] = None

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def determinate(self) -> bool:
        return self.backend == "exact" or (self.gap_ratio is not None and self.gap_ratio >= fl.GAP_THRESHOLD)


def lie_closure(r: MatrixRep, backend: Optional[str] = None, tol: float = DEFAULT_TOL) -> Closure:
    """Real Lie algebra generated by the generators (basis and real dimension)."""
    b = resolve_backend(backend, r)
    if b == "exact":
        span = RationalSpan(2 * r.dim * r.dim)
        basis: List[np.ndarray] = []
        for g in r.generators:
            if span.add(_realify_exact(g)):
                basis.append(g)
        i = 0
        while i < len(basis):
            for j in range(i):
                c = bracket(basis[i], basis[j])
                if span.add(_realify_exact(c)):
                    basis.append(c)
            i += 1
        return Closure(basis, "exact")
    fspan = fl.FloatSpan(tol)
    for g in r.generators:
        fspan.add(to_float(g))
    i = 0
    while i < len(fspan.members):
        for j in range(i):
            fspan.add(fspan.members[i] @ fspan.members[j] - fspan.members[j] @ fspan.members[i])
        i += 1
    return Closure(list(fspan.members), "float", fspan.tracker.ratio)


@dataclass
class ReductiveSplit:
    center: List[np.ndarray]
    semisimple: List[np.ndarray]
    backend: str
    gap_ratio: Optional[float] = None


def split_reductive(basis: Sequence[np.ndarray], tol: float = DEFAULT_TOL) -> ReductiveSplit:
    """Center and derived algebra ``[g, g]`` of a bracket-closed real span."""
    basis = list(basis)
    if not basis:
        return ReductiveSplit([], [], "exact")
    if all(is_exact(b) for b in basis):
        span = RationalSpan(2 * basis[0].size)
        for m in basis:
            if not span.add(_realify_exact(m)):
                raise ValueError("basis elements are linearly dependent")
        derived = RationalSpan(2 * basis[0].size)
        derived_mats: List[np.ndarray] = []
        eq_rows: List[List[Fraction]] = []
        brackets = {}
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                if j <= i:
                    continue
                c = bracket(x, y)
                v = _realify_exact(c)
                if not span.contains(v):
                    raise ValueError("input is not closed under the bracket")
                brackets[(i, j)] = v
                if derived.add(v):
                    derived_mats.append(c)
        n = len(basis)
        length = 2 * basis[0].size
        zero = [Fraction(0)] * length
        # center: sum_k c_k [b_k, b_j] = 0 for all j
        for j in range(n):
            cols = []
            for k in range(n):
                if k == j:
                    cols.append(zero)
                elif k < j:
                    cols.append(brackets[(k, j)])
                else:
                    cols.append([-x for x in brackets[(j, k)]])
            for p in range(length):
                eq_rows.append([cols[k][p] for k in range(n)])
        null = rational_nullspace(eq_rows, n)
        center = []
        for coeffs in null:
            m = exact_zeros(*basis[0].shape)
            for c, b in zip(coeffs, basis):
                if c:
                    m = m + b * QI(c)
            center.append(m)
        return ReductiveSplit(center, derived_mats, "exact")
    fb = [to_float(b) for b in basis]
    tracker = fl.GapTracker()
    vecs = np.array([fl.realify(b) for b in fb]).T
    n = len(fb)
    derived = fl.FloatSpan(tol)
    blocks = []
    for j in range(n):
        cols = [fl.realify(fb[k] @ fb[j] - fb[j] @ fb[k]) for k in range(n)]
        blocks.append(np.array(cols).T)
        for k in range(j):
            derived.add(fb[k] @ fb[j] - fb[j] @ fb[k])
    null = fl.real_nullspace(np.vstack(blocks), tol, tracker)
    center = [sum(c * b for c, b in zip(row, fb)) for row in null]
    ratio = min(tracker.ratio, derived.tracker.ratio)
    del vecs
    return ReductiveSplit(center, list(derived.members), "float", ratio)


# ---------------------------------------------------------------------------
# isotypic profile

@dataclass
class IsotypicProfile:
    blocks: List[Tuple[int, int]]
    tolerance: float
    seed: int
    commutant_dimension: int
    determinate: bool = True
    diagnostics: Dict[str, float] = field(default_factory=dict)

    @property
    def one_norm(self) -> int:
        return sum(m for _, m in self.blocks)

    def to_json(self) -> dict:
        return {
            "blocks": [{"irrep_dim": d, "multiplicity": m} for d, m in self.blocks],
            "tolerance": self.tolerance,
            "seed": self.seed,
            "commutant_dimension": self.commutant_dimension,
            "determinate": self.determinate,
            "diagnostics": self.diagnostics,
        }


def _clusters(values: np.ndarray, tol: float):
    order = np.argsort(values)
    v = values[order]
    groups = [[order[0]]]
    gaps_between, spreads = [], []
    for a, b, idx in zip(v[:-1], v[1:], order[1:]):
        if b - a > tol:
            gaps_between.append(b - a)
            groups.append([idx])
        else:
            groups[-1].append(idx)
    for g in groups:
        vals = values[g]
        spreads.append(float(vals.max() - vals.min()))
    return groups, (min(gaps_between) if gaps_between else np.inf), max(spreads)


def isotypic_profile(r: MatrixRep, seed: int = 0, tol: float = 1e-6, backend: Optional[str] = None,
                     coefficient_range: int = 1000) -> IsotypicProfile:
    """Irrep dimensions and multiplicities from a random Hermitian commutant element.

    Eigenvalues of the random element are clustered at ``tol`` (relative to
    its norm); each cluster is one copy of an irreducible constituent.  Copies
    are grouped into isotypic blocks by checking which eigenspaces the
    commutant connects.
    """
    res = commutant(r, backend, seed=seed, want_basis=True)
    n = res.dim
    d = r.dim
    rng = np.random.default_rng(seed)
    basis = [to_float(b) for b in res.basis]
    if res.backend == "exact":
        coeffs = rng.integers(-coefficient_range, coefficient_range + 1, size=(n, 2))
        coeffs = coeffs[:, 0] + 1j * coeffs[:, 1]
    else:
        coeffs = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    x = sum((c * b for c, b in zip(coeffs, basis)), np.zeros((d, d), dtype=np.complex128))
    h = x + x.conj().T
    scale = max(float(np.linalg.norm(h, 2)), 1e-300)
    w, u = np.linalg.eigh(h / scale)
    groups, min_gap, max_spread = _clusters(w, tol)
    diag = {"min_cluster_gap": float(min_gap), "max_cluster_spread": float(max_spread)}
    determinate = res.determinate and min_gap >= 1e3 * max(max_spread, 1e-14)
    # group eigenspaces linked by some commutant element
    parent = list(range(len(groups)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    spaces = [u[:, g] for g in groups]
    link_vals = []
    for b in basis:
        bn = b / max(np.linalg.norm(b), 1e-300)
        for p in range(len(spaces)):
            for q in range(p + 1, len(spaces)):
                val = float(np.linalg.norm(spaces[q].conj().T @ bn @ spaces[p]))
                link_vals.append(val)
                if val > 1e-6:
                    ra, rb = find(p), find(q)
                    if ra != rb:
                        parent[ra] = rb
    if link_vals:
        small = [v for v in link_vals if v <= 1e-6]
        large = [v for v in link_vals if v > 1e-6]
        if small and large:
            diag["link_gap_ratio"] = min(large) / max(max(small), 1e-15)
            determinate = determinate and diag["link_gap_ratio"] >= 1e3
    blocks: Dict[int, List[int]] = defaultdict(list)
    for gi in range(len(groups)):
        blocks[find(gi)].append(len(groups[gi]))
    out = []
    for sizes in blocks.values():
        if len(set(sizes)) != 1:
            determinate = False
        out.append((sizes[0], len(sizes)))
    out.sort(key=lambda t: (-t[0], -t[1]))
    if sum(m * m for _, m in out) != n or sum(dd * m for dd, m in out) != d:
        determinate = False
    diag["eigenvalue_count"] = float(len(w))
    return IsotypicProfile(out, tol, seed, n, bool(determinate), diag)


# ---------------------------------------------------------------------------
# partial transpose

def _partial_transpose(x: np.ndarray, d1: int, d2: int) -> np.ndarray:
    return x.reshape(d1, d2, d1, d2).transpose(0, 3, 2, 1).reshape(d1 * d2, d1 * d2)


def _span_rank(mats: Sequence[np.ndarray], exact: bool, tol: float) -> int:
    if not mats:
        return 0
    if exact:
        ech = Echelon()
        for m in mats:
            ech.insert(qi_row({k: x for k, x in enumerate(m.flat) if x}))
        return ech.rank
    a = np.array([np.asarray(m, dtype=np.complex128).ravel() for m in mats])
    s = np.linalg.svd(a, compute_uv=False)
    return int((s > tol * max(1.0, s.max(initial=0.0))).sum())


def partial_transpose_check(r_phi: MatrixRep, r_psi: MatrixRep, backend: Optional[str] = None,
                            tol: float = DEFAULT_TOL) -> bool:
    """Check that transposing the second tensor factor maps the commutant of
    ``phi (x) conj-dual psi`` onto the commutant of ``phi (x) psi``."""
    if len(r_phi) != len(r_psi):
        raise ValueError("generator lists must be paired")
    prod = tensor_product(r_phi, r_psi)
    prod_dual = tensor_product(r_phi, dual_rep(r_psi))
    c1 = commutant(prod, backend, tol, want_basis=True)
    c2 = commutant(prod_dual, backend, tol, want_basis=True)
    if not (c1.determinate and c2.determinate):
        raise Indeterminate("commutant computation not certified")
    if c1.dim != c2.dim:
        return False
    exact = c1.backend == "exact"
    mapped = [_partial_transpose(x, r_phi.dim, r_psi.dim) for x in c2.basis]
    r1 = _span_rank(c1.basis, exact, tol)
    r2 = _span_rank(mapped, exact, tol)
    r12 = _span_rank(list(c1.basis) + mapped, exact, tol)
    return r1 == r2 == r12


# ---------------------------------------------------------------------------
# membership checks used by the decision procedures

def in_su(r: MatrixRep, tol: float = 1e-10) -> bool:
    if not r.is_skew_hermitian(tol):
        return False
    for g in r.generators:
        tr = sum((g[k, k] for k in range(r.dim)), QI(0) if r.exact else 0j)
        if (r.exact and tr) or (not r.exact and abs(tr) > tol):
            return False
    return True


def in_so(r: MatrixRep, tol: float = 1e-10) -> bool:
    return r.is_skew_hermitian(tol) and all(equal(g.T, -g, 0 if r.exact else tol) for g in r.generators)


def in_sp(r: MatrixRep, tol: float = 1e-10) -> bool:
    if r.dim % 2 or not r.is_skew_hermitian(tol):
        return False
    j = symplectic_form(r.dim // 2)
    if not r.exact:
        j = to_float(j)
    return all(is_zero(matmul(g.T, j) + matmul(j, g), 0 if r.exact else tol) for g in r.generators)
