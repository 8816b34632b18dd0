import json

import pytest
from hypothesis import given, strategies as st

from liesq.repdecomp import (
    Decomposition,
    adjoint_weight,
    alt_square,
    dual_weight,
    is_irreducible_square,
    is_self_dual,
    merge,
    mult,
    one_norm,
    outer_alt_sym_square,
    scan_tables,
    square_of_sum,
    sym_square,
    tensor_decompose,
    two_norm,
)
from liesq.rootsys import (
    InvalidWeight,
    SemisimpleAlgebra,
    SimpleType,
    all_weights,
    is_dominant,
    order_key,
    parse_algebra,
    parse_simple,
    simple_types,
    weight_system,
    weyl_dim,
)


def z(l, *nz):
    w = [0] * l
    for i, v in nz:
        w[i] = v
    return tuple(w)


def peel(t, char):
    """Decompose a character (full weight multiset) by repeatedly removing the
    irreducible character of its highest dominant weight."""
    char = {w: m for w, m in char.items() if m}
    out = {}
    while char:
        top = max((w for w in char if is_dominant(w)), key=lambda w: order_key(t, w))
        k = char[top]
        out[top] = k
        for w, m in weight_system(t, top).items():
            char[w] = char.get(w, 0) - k * m
            if not char[w]:
                del char[w]
        assert all(v > 0 for v in char.values())
    return out


def char_product(t, lam, mu):
    a, b = weight_system(t, lam), weight_system(t, mu)
    out = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            out[w] = out.get(w, 0) + m1 * m2
    return out


def char_square(t, lam, sign):
    ws = weight_system(t, lam)
    out = {}
    for w1, m1 in ws.items():
        for w2, m2 in ws.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            out[w] = out.get(w, 0) + m1 * m2
    for w, m in ws.items():
        w2 = tuple(2 * x for x in w)
        out[w2] = out.get(w2, 0) + sign * m
    return {w: m // 2 for w, m in out.items()}


# -- examples ---------------------------------------------------------------

def test_tensor_examples():
    assert tensor_decompose("su2", (1,), (1,)).as_dict() == {(2,): 1, (0,): 1}
    for l in range(2, 7):
        t = SimpleType("A", l)
        assert tensor_decompose(t, z(l, (0, 1)), z(l, (0, 1))).as_dict() == {z(l, (0, 2)): 1, z(l, (1, 1)): 1}
    assert tensor_decompose("sp2", (1, 0), (1, 0)).as_dict() == {(2, 0): 1, (0, 1): 1, (0, 0): 1}


def test_square_examples():
    assert alt_square("so10", (0, 0, 0, 1, 0)).as_dict() == {(0, 0, 1, 0, 0): 1}
    for l in range(1, 6):
        assert sym_square(SimpleType("C", l), z(l, (0, 1))).as_dict() == {z(l, (0, 2)): 1}
    for l in range(3, 7):
        assert sym_square(SimpleType("B", l), z(l, (0, 1))).as_dict() == {z(l, (0, 2)): 1, z(l): 1}
    for l in range(4, 7):
        assert sym_square(SimpleType("D", l), z(l, (0, 1))).as_dict() == {z(l, (0, 2)): 1, z(l): 1}
    e6 = alt_square("e6", (1, 0, 0, 0, 0, 0))
    assert e6.as_dict() == {(0, 0, 1, 0, 0, 0): 1} and e6.dimension == 351


def test_outer_examples():
    so4 = SemisimpleAlgebra((SimpleType("A", 1), SimpleType("A", 1)))
    alt, sym = outer_alt_sym_square(so4.factors, [(1,), (1,)])
    assert sym.as_dict() == {(2, 2): 1, (0, 0): 1}
    assert alt.as_dict() == {(2, 0): 1, (0, 2): 1}
    assert alt.dimension == 6 and sym.dimension == 10
    a1, s1 = outer_alt_sym_square([SimpleType("B", 3)], [(1, 0, 0)])
    assert a1 == alt_square("B3", (1, 0, 0)) and s1 == sym_square("B3", (1, 0, 0))


def test_dual_examples():
    for l in range(2, 8):
        assert dual_weight(SimpleType("A", l), z(l, (0, 1))) == z(l, (l - 1, 1))
    assert dual_weight("su2", (1,)) == (1,)
    assert dual_weight("so10", (0, 0, 0, 1, 0)) == (0, 0, 0, 0, 1)
    assert dual_weight("e6", (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)
    assert dual_weight("D4", (0, 0, 1, 0)) == (0, 0, 1, 0)


def test_dual_via_trivial_constituent():
    # V (x) W contains the trivial rep iff W is dual to V
    t = parse_simple("so10")
    s = (0, 0, 0, 1, 0)
    assert mult(tensor_decompose(t, s, s), (0,) * 5) == 0
    assert mult(tensor_decompose(t, s, (0, 0, 0, 0, 1)), (0,) * 5) == 1


@pytest.mark.parametrize("t", simple_types(6), ids=str)
def test_dual_is_the_partner_of_trivial(t):
    for lam in all_weights(t.rank, 2):
        d = dual_weight(t, lam)
        assert dual_weight(t, d) == lam
        assert mult(tensor_decompose(t, lam, d), (0,) * t.rank) == 1


def test_self_dual_examples():
    assert all(is_self_dual("so7", w) for w in all_weights(3, 3))
    assert not is_self_dual("su3", (1, 0))
    assert is_self_dual("e7", (0,) * 7)


def test_adjoint_examples():
    assert adjoint_weight("su2") == (2,)
    for l in range(2, 8):
        assert adjoint_weight(SimpleType("A", l)) == z(l, (0, 1), (l - 1, 1))
        assert adjoint_weight(SimpleType("C", l)) == z(l, (0, 2))
    for l in range(3, 8):
        assert adjoint_weight(SimpleType("B", l)) == z(l, (1, 1))
    for l in range(4, 8):
        assert adjoint_weight(SimpleType("D", l)) == z(l, (1, 1))


def test_norms():
    d = tensor_decompose("su2", (1,), (1,))
    assert (one_norm(d), two_norm(d)) == (2, 2)
    d = tensor_decompose("sp2", (1, 0), (1, 0))
    assert (one_norm(d), two_norm(d)) == (3, 3)
    triv = tensor_decompose("su3", (0, 0), (0, 0))
    assert (one_norm(triv), two_norm(triv)) == (1, 1)
    assert mult(d, (5, 5)) == 0


def test_irreducible_square_examples():
    assert is_irreducible_square("so10", (0, 0, 0, 1, 0), "alt")
    assert not is_irreducible_square("su4", (0, 1, 0), "sym")
    assert is_irreducible_square("sp3", (1, 0, 0), "sym")


def test_scan_examples():
    rank1 = [(t, lam, d.as_dict()) for t, lam, d in scan_tables("alt", 1, 3) if t.family == "A"]
    assert rank1 == [(SimpleType("A", 1), (1,), {(0,): 1}), (SimpleType("A", 1), (2,), {(2,): 1})]
    # sp(1) is listed under its own name with the same rows
    c1 = [(lam, d.as_dict()) for t, lam, d in scan_tables("alt", 1, 3) if t.family == "C"]
    assert c1 == [((1,), {(0,): 1}), ((2,), {(2,): 1})]


@pytest.mark.parametrize("kind", ["alt", "sym"])
def test_scan_fast_matches_full(kind):
    fast = [(t, lam) for t, lam, _ in scan_tables(kind, 4, 2, fast=True)]
    slow = [(t, lam) for t, lam, _ in scan_tables(kind, 4, 2, fast=False)]
    assert fast == slow


def test_bad_inputs():
    with pytest.raises(InvalidWeight):
        tensor_decompose("su3", (1, 0), (1,))
    with pytest.raises(InvalidWeight):
        alt_square("su3", (-1, 0))
    with pytest.raises(ArithmeticError):
        Decomposition.build("su2", {(2,): 1}, expected_dim=4)


# -- brute-force character oracle ------------------------------------------

@pytest.mark.parametrize("name,lam,mu", [
    ("A2", (1, 1), (1, 1)), ("A3", (1, 0, 1), (0, 1, 0)), ("B2", (1, 1), (0, 1)), ("C3", (0, 1, 0), (1, 0, 0)),
    ("G2", (1, 0), (1, 1)), ("D4", (1, 0, 0, 0), (0, 0, 1, 1)), ("B3", (0, 0, 1), (0, 0, 1)), ("F4", (0, 0, 0, 1), (0, 0, 0, 1)),
])
def test_tensor_matches_character_peeling(name, lam, mu):
    t = parse_simple(name)
    assert tensor_decompose(t, lam, mu).as_dict() == peel(t, char_product(t, lam, mu))


@pytest.mark.parametrize("name,lam", [("A2", (2, 1)), ("B2", (1, 1)), ("C3", (0, 1, 0)), ("G2", (1, 1)), ("D4", (0, 1, 0, 0)), ("A4", (0, 1, 1, 0))])
def test_squares_match_character_peeling(name, lam):
    t = parse_simple(name)
    assert sym_square(t, lam).as_dict() == peel(t, char_square(t, lam, 1))
    assert alt_square(t, lam).as_dict() == peel(t, char_square(t, lam, -1))


# -- properties -------------------------------------------------------------

@pytest.mark.parametrize("t", simple_types(6), ids=str)
def test_alt_plus_sym_is_tensor(t):
    for lam in all_weights(t.rank, 2):
        a, s = alt_square(t, lam), sym_square(t, lam)
        d = weyl_dim(t, lam)
        assert a.dimension == d * (d - 1) // 2
        assert s.dimension == d * (d + 1) // 2
        assert merge(a, s) == tensor_decompose(t, lam, lam)


SMALL = [t for t in simple_types(4)]


@st.composite
def type_and_two(draw, max_sum=2):
    t = draw(st.sampled_from(SMALL))
    ws = list(all_weights(t.rank, max_sum))
    return t, draw(st.sampled_from(ws)), draw(st.sampled_from(ws))


@given(type_and_two())
def test_tensor_bound_and_top(args):
    t, lam, mu = args
    d = tensor_decompose(t, lam, mu)
    top = tuple(a + b for a, b in zip(lam, mu))
    assert mult(d, top) == 1
    assert d.dimension == weyl_dim(t, lam) * weyl_dim(t, mu)
    assert d == tensor_decompose(t, mu, lam)
    tk = order_key(t, top)
    for w in d.as_dict():
        # lam + mu - w is a non-negative combination of simple roots
        from liesq.rootsys import root_coordinates
        assert all(c >= 0 and c.denominator == 1 for c in root_coordinates(t, tuple(a - b for a, b in zip(top, w))))


@given(type_and_two())
def test_dual_norm_identities(args):
    t, lam, mu = args
    a = tensor_decompose(t, lam, mu)
    b = tensor_decompose(t, lam, dual_weight(t, mu))
    assert one_norm(a) == one_norm(b)
    assert two_norm(a) == two_norm(b)


@given(type_and_two())
def test_norms_under_merge(args):
    t, lam, mu = args
    a, b = alt_square(t, lam), tensor_decompose(t, lam, mu)
    m = merge(a, b)
    assert one_norm(m) == one_norm(a) + one_norm(b)
    assert two_norm(m) >= two_norm(a) + two_norm(b)


@given(type_and_two())
def test_square_of_sum(args):
    t, lam, mu = args
    t_ = tensor_decompose(t, lam, mu)
    assert square_of_sum(t, [lam, mu], "alt") == merge(alt_square(t, lam), t_, alt_square(t, mu))
    assert square_of_sum(t, [lam, mu], "sym") == merge(sym_square(t, lam), t_, sym_square(t, mu))


@given(type_and_two())
def test_king_wybourne_and_adjoint(args):
    t, lam, _ = args
    adj = adjoint_weight(t)
    if is_self_dual(t, lam):
        assert mult(tensor_decompose(t, lam, lam), adj) == sum(1 for x in lam if x)
    if any(lam):
        assert mult(tensor_decompose(t, lam, dual_weight(t, lam)), adj) >= 1


@given(type_and_two())
def test_json_round_trip(args):
    t, lam, mu = args
    d = tensor_decompose(t, lam, mu)
    assert Decomposition.from_json(json.loads(json.dumps(d.to_json()))) == d


def test_format():
    assert tensor_decompose("su2", (1,), (1,)).format() == "(2) ×1, (0) ×1"
    assert sym_square("sp3", (1, 0, 0)).format() == "(2,0,0) ×1"
