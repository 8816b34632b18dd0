"""Decision procedures and their reports."""
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fixtures_data import diagonal_pair, exact_matrix
from liesq import decide as dc
from liesq import matrixrep as mr
from liesq.rootsys import SimpleType


def so3_in(k):
    """Rotations of the first three coordinates, as k x k matrices."""
    r = mr.standard_generators("so", 3)
    def pad(a):
        from liesq.scalars import exact_zeros
        m = exact_zeros(k)
        m[:3, :3] = a
        return m
    return r.map(pad, k)


def test_full_su():
    rep = dc.is_full_su(mr.standard_generators("su", 3), 3)
    assert rep.verdict == dc.FULL and rep.exit_code == 0
    assert rep.computed["tensor_square_commutant"] == 2 and rep.expected == 2


def test_sp2_inside_su4():
    rep = dc.is_full_su(mr.standard_generators("sp", 2), 4, cross_check=True)
    assert rep.verdict == dc.PROPER and rep.exit_code == 1
    assert rep.computed["tensor_square_commutant"] == 3
    assert rep.closure_check["closure_dimension"] == 10 and rep.closure_check["expected"] == 15
    assert not rep.closure_check["full"]


def test_pauli_pair_generates_su2():
    r = mr.MatrixRep.from_matrices([exact_matrix([[0, 1j], [1j, 0]]), exact_matrix([[0, 1], [-1, 0]])])
    assert dc.is_full_su(r, 2).verdict == dc.FULL


def test_so_and_sp():
    assert dc.is_full_so(mr.standard_generators("so", 5), 5).verdict == dc.FULL
    rep = dc.is_full_so(so3_in(5), 5, cross_check=True)
    assert rep.verdict == dc.PROPER and rep.computed["tensor_square_commutant"] > 3
    assert rep.closure_check["closure_dimension"] == 3
    assert dc.is_full_sp(mr.standard_generators("sp", 2), 2).verdict == dc.FULL


def test_float_backend_verdicts():
    rep = dc.is_full_so(mr.standard_generators("so", 5).to_float(), 5, backend="float", seed=4)
    assert rep.verdict == dc.FULL and rep.backend == "float" and rep.seed == 4
    assert rep.gap_ratio >= 1e3 and rep.tolerance == mr.DEFAULT_TOL


def test_equals_parent_identical():
    so5 = mr.standard_generators("so", 5)
    rep = dc.equals_parent(so5, so5)
    assert rep.verdict == dc.FULL
    assert rep.computed == {"subalgebra_commutant": 3, "parent_commutant": 3}
    assert rep.notes["semisimple"] is True


def test_equals_parent_spin1_in_su3():
    rep = dc.equals_parent(mr.standard_generators("so", 3), mr.standard_generators("su", 3))
    assert rep.verdict == dc.PROPER
    assert rep.computed == {"subalgebra_commutant": 3, "parent_commutant": 2}


def test_abelian_example_is_proper():
    # both semisimple parts are zero, yet the commutant dimensions differ
    h, g = diagonal_pair()
    rep = dc.equals_parent(h, g)
    assert rep.verdict == dc.PROPER
    assert rep.computed == {"subalgebra_commutant": 33, "parent_commutant": 15}
    assert rep.notes["parent_center_dimension"] == 2 and rep.notes["parent_semisimple_dimension"] == 0


def test_center_leaves_equality_unresolved():
    _, g = diagonal_pair()
    rep = dc.equals_parent(g, g)
    assert rep.verdict == dc.INDETERMINATE and rep.exit_code == 2
    assert rep.notes["semisimple_parts_equal"] is True
    assert rep.notes["center_comparison"] == "unresolved"


def test_assume_semisimple_is_recorded():
    su3 = mr.standard_generators("su", 3)
    rep = dc.equals_parent(su3, su3, assume_semisimple=True)
    assert rep.verdict == dc.FULL and rep.notes["semisimple"] == "asserted by caller"


def test_mixed_scalars_go_float():
    su2 = mr.standard_generators("su", 2)
    rep = dc.equals_parent(su2.to_float(), su2)
    assert rep.backend == "float" and rep.verdict == dc.FULL


@pytest.mark.parametrize("call", [
    lambda: dc.is_full_su(mr.standard_generators("su", 3), 4),
    lambda: dc.is_full_su(mr.MatrixRep.from_matrices([exact_matrix(np.diag([1j, 1j]))]), 2),
    lambda: dc.is_full_su(mr.MatrixRep.from_matrices([exact_matrix(np.diag([1, -1]))]), 2),
    lambda: dc.is_full_so(mr.standard_generators("so", 4), 4),
    lambda: dc.is_full_so(mr.standard_generators("su", 5), 5),
    lambda: dc.is_full_sp(mr.standard_generators("sp", 1), 1),
    lambda: dc.is_full_sp(mr.standard_generators("su", 4), 2),
    lambda: dc.equals_parent(mr.standard_generators("su", 3), mr.standard_generators("so", 3)),
    lambda: dc.equals_parent(mr.standard_generators("su", 2), mr.standard_generators("su", 3)),
    lambda: dc.gap_bound_check("A2", (1, 0)),
])
def test_preconditions(call):
    with pytest.raises(dc.PreconditionError):
        call()


@pytest.mark.parametrize("alg,lam", [("A1", (2,)), ("B3", (1, 0, 0)), ("C2", (1, 1)), ("A3", (0, 1, 0)),
                                     ("E6", (0, 1, 0, 0, 0, 0)), ("G2", (1, 0))])
def test_gap_bound_weight_level(alg, lam):
    assert dc.gap_bound_check(SimpleType(alg[0], int(alg[1:])), lam)


def test_gap_bound_with_matrices():
    assert dc.gap_bound_check(SimpleType("B", 2), (1, 0), so3_in(5), mr.standard_generators("so", 5))
    # the full algebra is not a proper subalgebra: the inequality fails
    so5 = mr.standard_generators("so", 5)
    assert not dc.gap_bound_check(SimpleType("B", 2), (1, 0), so5, so5)


def test_report_json_round_trip():
    rep = dc.is_full_su(mr.standard_generators("sp", 2), 4, cross_check=True)
    data = json.loads(json.dumps(rep.to_json()))
    assert dc.DecisionReport.from_json(data) == rep
    inf = dc.DecisionReport("x", dc.FULL, {}, 2, "float", gap_ratio=float("inf"))
    assert inf.to_json()["gap_ratio"] is None


CASES = [("su", 3), ("so", 5), ("sp", 2)]
PROC = {"su": lambda r, n: dc.is_full_su(r, n), "so": lambda r, n: dc.is_full_so(r, n),
        "sp": lambda r, n: dc.is_full_sp(r, n)}


@settings(max_examples=30)
@given(st.sampled_from(CASES), st.data())
def test_proper_verdicts_have_gaps(case, data):
    fam, n = case
    r = mr.standard_generators(fam, n)
    k = data.draw(st.integers(1, len(r)))
    idx = data.draw(st.lists(st.integers(0, len(r) - 1), min_size=k, max_size=k, unique=True))
    sub = mr.MatrixRep(r.dim, tuple(r.generators[i] for i in sorted(idx)))
    rep = PROC[fam](sub, n)
    full_dim = len(r)
    assert (rep.verdict == dc.FULL) == (mr.lie_closure(sub).dimension == full_dim)
    if rep.verdict == dc.PROPER:
        assert rep.computed["tensor_square_commutant"] >= rep.expected + 1
        p_sub = mr.isotypic_profile(mr.tensor_with_dual(sub))
        p_par = mr.isotypic_profile(mr.tensor_with_dual(r))
        if p_sub.determinate and p_par.determinate:
            assert p_sub.one_norm > p_par.one_norm
