from itertools import product

import pytest
from hypothesis import given, strategies as st

from liesq.checks import chains_sweep, parts_sweep, subordination_sweep
from liesq.dynkin_tools import (
    Chain,
    guaranteed_constituents,
    is_chain,
    is_minimal_chain,
    minimal_chains,
    part_node_map,
    part_weight,
    subordinate,
)
from liesq.repdecomp import tensor_decompose
from liesq.rootsys import InvalidWeight, SimpleType, all_weights, cartan_matrix, parse_simple, simple_types


def brute_minimal_chains(t, lam, mu):
    """Conditions read off the Cartan zero pattern: (x|alpha_j) != 0 iff x_j != 0."""
    c = cartan_matrix(t)
    n = t.rank
    out = []
    for length in range(1, n + 1):
        for seq in product(range(n), repeat=length):
            if not lam[seq[0]] or not mu[seq[-1]]:
                continue
            if any(c[seq[k], seq[k + 1]] == 0 for k in range(length - 1)):
                continue
            if any(lam[seq[k]] for k in range(1, length)):
                continue
            if any(mu[seq[k]] for k in range(length - 1)):
                continue
            if any(c[seq[k], seq[h]] != 0 for k in range(length) for h in range(k + 2, length)):
                continue
            out.append(tuple(j + 1 for j in seq))
    return sorted(set(out), key=lambda s: (len(s), s))


def test_subordinate_examples():
    assert subordinate((1, 0), (1, 1))
    assert not subordinate((2, 0), (1, 1))
    assert subordinate((3, 1, 4), (3, 1, 4))
    with pytest.raises(InvalidWeight):
        subordinate((1,), (1, 0))


def test_part_examples():
    h, w = part_weight("su4", (0, 1, 0), {1})
    assert [str(f) for f in h.factors] == ["su3"] and w == (1, 0)
    h, w = part_weight("su4", (5, 1, 7), {2})
    assert [str(f) for f in h.factors] == ["su2", "su2"] and w == (5, 7)
    h, w = part_weight("so7", (4, 9, 1), {3})
    assert [f.name for f in h.factors] == ["A2"] and w == (4, 9)
    with pytest.raises(ValueError):
        part_weight("su3", (1, 1), {1, 2})


@pytest.mark.parametrize("name,deleted,expected", [
    ("E6", {1}, "D5"), ("E7", {1}, "D6"), ("E8", {1}, "D7"), ("E8", {8}, "E7"), ("F4", {1}, "C3"),
    ("F4", {4}, "B3"), ("B4", {1}, "B3"), ("C4", {4}, "A3"), ("D5", {1}, "D4"), ("D4", {2}, "A1+A1+A1"),
    ("G2", {1}, "A1"),
])
def test_part_types(name, deleted, expected):
    h, _ = part_weight(name, (1,) * parse_simple(name).rank, deleted)
    assert "+".join(f.name for f in h.factors) == expected


@pytest.mark.parametrize("t", [t for t in simple_types(8) if t.rank > 1], ids=str)
def test_part_cartan_is_submatrix(t):
    c = cartan_matrix(t)
    for node in range(1, t.rank + 1):
        h, _ = part_weight(t, (0,) * t.rank, {node})
        nodes = part_node_map(t, {node})
        sub = c[[j - 1 for j in nodes]][:, [j - 1 for j in nodes]]
        pos = 0
        for f in h.factors:
            blk = cartan_matrix(f)
            assert (sub[pos:pos + f.rank, pos:pos + f.rank] == blk).all()
            pos += f.rank


def test_chain_examples():
    assert minimal_chains("su2", (1,), (1,)) == [Chain((1,))]
    assert minimal_chains("su3", (1, 0), (0, 1)) == [Chain((1, 2))]
    assert minimal_chains("su3", (1, 0), (1, 0)) == [Chain((1,))]
    assert guaranteed_constituents("su3", (1, 0), (0, 1)) >= {(1, 1), (0, 0)}
    assert guaranteed_constituents("su2", (1,), (1,)) == {(2,), (0,)}
    assert guaranteed_constituents("so7", (0, 0, 0), (1, 0, 1)) == {(1, 0, 1)}


def test_literal_checkers():
    assert is_chain("su3", (1, 0), (0, 1), [1, 2])
    assert not is_chain("su3", (1, 0), (0, 1), [2, 1])
    assert is_minimal_chain("su4", (1, 0, 0), (0, 0, 1), [1, 2, 3])
    # a chain that wanders back is not minimal
    assert is_chain("su4", (1, 0, 0), (0, 0, 1), [1, 2, 1, 2, 3])
    assert not is_minimal_chain("su4", (1, 0, 0), (0, 0, 1), [1, 2, 1, 2, 3])


@pytest.mark.parametrize("t", simple_types(4), ids=str)
def test_minimal_chains_match_bruteforce(t):
    for lam in all_weights(t.rank, 2, 1):
        for mu in all_weights(t.rank, 2, 1):
            got = [c.root_indices for c in minimal_chains(t, lam, mu)]
            assert got == brute_minimal_chains(t, lam, mu), (t, lam, mu)
            assert all(is_minimal_chain(t, lam, mu, c) for c in got)


def test_guaranteed_constituents_sweep():
    res = chains_sweep(4, 2)
    assert res.cases > 1000 and res.ok, res.violations[:3]


@pytest.mark.parametrize("name", ["E6", "E7", "F4", "B6", "D7", "A8", "C5"])
def test_guaranteed_constituents_spot(name):
    t = parse_simple(name)
    for lam in all_weights(t.rank, 1, 1):
        for mu in all_weights(t.rank, 1, 1):
            dec = tensor_decompose(t, lam, mu).as_dict()
            assert guaranteed_constituents(t, lam, mu) <= set(dec)


def test_subordination_sweep():
    res = subordination_sweep(4, 2)
    assert res.cases > 5000 and res.ok, res.violations[:3]


def test_parts_sweep():
    res = parts_sweep(4, 2)
    assert res.cases > 1000 and res.ok, res.violations[:3]


@pytest.mark.parametrize("name", ["E6", "F4", "D6", "B5", "C6", "G2"])
def test_dynkin_inequalities_spot(name):
    t = [parse_simple(name)]
    sub = subordination_sweep(8, 1, max_dim=3000, types=t)
    parts = parts_sweep(8, 1, max_dim=3000, types=t)
    assert sub.cases and sub.ok, sub.violations[:3]
    assert parts.cases and parts.ok, parts.violations[:3]
