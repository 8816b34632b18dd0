from fractions import Fraction
from math import factorial, prod

import numpy as np
import pytest
from hypothesis import given, strategies as st

from liesq.dynkin_tools import part_weight
from liesq.repdecomp import dual_weight
from liesq.rootsys import (
    InvalidAlgebra,
    InvalidWeight,
    SemisimpleAlgebra,
    SimpleType,
    all_weights,
    cartan_matrix,
    dominant_character,
    dominant_reduce,
    highest_root,
    inner_product,
    orbit,
    parse_algebra,
    parse_simple,
    parse_weight,
    positive_roots,
    rho,
    simple_root,
    simple_types,
    to_dominant,
    weight_system,
    weyl_dim,
)

ALL_TYPES = simple_types(8)

# dimensions of the compact simple algebras, from the standard closed forms
def algebra_dim(t):
    l = t.rank
    return {"A": l * (l + 2), "B": l * (2 * l + 1), "C": l * (2 * l + 1), "D": l * (2 * l - 1)}.get(
        t.family, {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}.get((t.family, l)))


def weyl_order(t):
    l = t.rank
    if t.family == "A":
        return factorial(l + 1)
    if t.family in "BC":
        return 2 ** l * factorial(l)
    if t.family == "D":
        return 2 ** (l - 1) * factorial(l)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[(t.family, l)]


def orbit_size(t, w):
    nonzero = {i + 1 for i, x in enumerate(w) if x}
    if not nonzero:
        return 1
    if len(nonzero) == t.rank:
        return weyl_order(t)
    stab, _ = part_weight(t, w, nonzero)
    return weyl_order(t) // prod(weyl_order(f) for f in stab.factors)


# -- parsing ----------------------------------------------------------------

@pytest.mark.parametrize("text,expected", [
    ("A3", SimpleType("A", 3)), ("su4", SimpleType("A", 3)), ("so(7)", SimpleType("B", 3)),
    ("sp2", SimpleType("C", 2)), ("D5", SimpleType("D", 5)), ("so10", SimpleType("D", 5)),
    ("e6", SimpleType("E", 6)), ("F4", SimpleType("F", 4)), ("g2", SimpleType("G", 2)),
])
def test_parse_aliases(text, expected):
    assert parse_simple(text) == expected


@pytest.mark.parametrize("bad", ["so4", "so2", "D2", "B1", "A0", "e5", "g3", "xyz", "su1"])
def test_parse_rejects(bad):
    with pytest.raises(InvalidAlgebra):
        parse_simple(bad)


def test_parse_semisimple_and_weight():
    s = parse_algebra("su2+su2")
    assert isinstance(s, SemisimpleAlgebra) and s.rank == 2
    assert parse_weight("(1, 0,2)") == (1, 0, 2)
    with pytest.raises(InvalidWeight):
        parse_weight("1,a")


# -- Cartan data ------------------------------------------------------------

def test_cartan_examples():
    assert cartan_matrix("G2").tolist() == [[2, -1], [-3, 2]]
    assert cartan_matrix("A1").tolist() == [[2]]
    assert cartan_matrix("B2").tolist() == [[2, -2], [-1, 2]]


def test_cartan_bourbaki_shapes():
    c = cartan_matrix("F4")
    assert c.tolist() == [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    e8 = cartan_matrix("E8")
    assert (e8 == e8.T).all() and (np.diag(e8) == 2).all()
    # E8 node 2 hangs off node 4
    assert e8[1, 3] == -1 and e8[1, 2] == 0


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_cartan_axioms(t):
    c = cartan_matrix(t)
    assert (np.diag(c) == 2).all()
    off = c - np.diag(np.diag(c))
    assert (off <= 0).all()
    assert ((off == 0) == (off.T == 0)).all()
    assert round(np.linalg.det(c)) > 0


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_inner_product_reproduces_cartan(t):
    c = cartan_matrix(t)
    for a in range(1, t.rank + 1):
        aa = inner_product(t, simple_root(t, a), simple_root(t, a))
        for b in range(1, t.rank + 1):
            bb = inner_product(t, simple_root(t, b), simple_root(t, b))
            assert 2 * inner_product(t, simple_root(t, a), simple_root(t, b)) / bb == c[a - 1, b - 1]
        # x_a = 2 (x|alpha_a)/(alpha_a|alpha_a) on fundamental coordinates
        e = tuple(1 if i == a - 1 else 0 for i in range(t.rank))
        assert 2 * inner_product(t, e, simple_root(t, a)) / aa == 1
    long = max(inner_product(t, simple_root(t, a), simple_root(t, a)) for a in range(1, t.rank + 1))
    assert long == 2


def test_inner_product_examples():
    assert inner_product("A2", simple_root("A2", 1), simple_root("A2", 2)) != 0
    assert inner_product("A2", (1, 0), simple_root("A2", 2)) == 0
    g2 = parse_simple("G2")
    ratio = inner_product(g2, simple_root(g2, 1), simple_root(g2, 1)) / inner_product(g2, simple_root(g2, 2), simple_root(g2, 2))
    # node 1 is the short root in the Bourbaki numbering used by the Cartan matrix above
    assert ratio == Fraction(1, 3)


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_positive_root_count(t):
    assert len(positive_roots(t)) == (algebra_dim(t) - t.rank) // 2
    assert highest_root(t) in positive_roots(t)


def test_positive_roots_small():
    assert positive_roots("A1") == [(2,)]
    assert len(positive_roots("A2")) == 3
    assert len(positive_roots("B2")) == 4
    assert rho("B3") == (1, 1, 1)


# -- dimensions and weights -------------------------------------------------

@pytest.mark.parametrize("l", range(1, 9))
def test_weyl_dim_vector_of_su(l):
    assert weyl_dim(SimpleType("A", l), (1,) + (0,) * (l - 1)) == l + 1


def test_weyl_dim_examples():
    assert weyl_dim("E6", (1, 0, 0, 0, 0, 0)) == 27
    assert weyl_dim("so10", (0, 0, 1, 0, 0)) == 120
    assert weyl_dim("su2+su2", (1, 2)) == 6
    with pytest.raises(InvalidWeight):
        weyl_dim("A2", (1, -1))
    with pytest.raises(InvalidWeight):
        weyl_dim("A2", (1,))


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_adjoint_dimension(t):
    assert weyl_dim(t, highest_root(t)) == algebra_dim(t)


def test_weight_system_examples():
    assert weight_system("A1", (2,)) == {(2,): 1, (0,): 1, (-2,): 1}
    assert weight_system("A2", (1, 1))[(0, 0)] == 2
    assert weight_system("E6", (0,) * 6) == {(0,) * 6: 1}


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_multiplicities_sum_to_dimension(t):
    # orbit sizes from parabolic stabilizers, independent of the BFS orbit code
    for lam in all_weights(t.rank, 2):
        total = sum(m * orbit_size(t, w) for w, m in dominant_character(t, lam).items())
        assert total == weyl_dim(t, lam), (t, lam)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "F4", "D4"])
def test_orbit_matches_stabilizer_count(name):
    t = parse_simple(name)
    for lam in all_weights(t.rank, 2, 1):
        assert len(orbit(t, lam)) == orbit_size(t, lam)


@pytest.mark.parametrize("name,lam", [("A3", (1, 1, 0)), ("B3", (0, 1, 1)), ("G2", (2, 1)), ("C3", (1, 0, 1)), ("F4", (1, 0, 0, 1))])
def test_weyl_invariance(name, lam):
    t = parse_simple(name)
    ws = weight_system(t, lam)
    dom = dominant_character(t, lam)
    counts = {}
    for w, m in ws.items():
        d, _ = to_dominant(t, w)
        counts.setdefault(d, set()).add(m)
    assert set(counts) == set(dom)
    assert all(c == {dom[d]} for d, c in counts.items())


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_dimension_duality_invariant(t):
    for lam in all_weights(t.rank, 2):
        assert weyl_dim(t, lam) == weyl_dim(t, dual_weight(t, lam))


def test_dominant_reduce_examples():
    assert dominant_reduce("A1", (3,)) == ((3,), 1)
    assert dominant_reduce("A2", (1, 0)) == ((1, 0), 1)
    assert dominant_reduce("A1", (-1,))[1] == 0
    assert dominant_reduce("A1", (-3,)) == ((1,), -1)


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_dominant_reduce_result_dominant(w):
    d, s = dominant_reduce("B3", w)
    if s:
        assert all(x >= 0 for x in d)


def test_all_weights_order():
    ws = list(all_weights(2, 2))
    assert ws == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
