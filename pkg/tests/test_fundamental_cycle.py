import random

import pytest
from hypothesis import given, settings, strategies as st

from flopcycles.dynkin import ADEType, CurveConfiguration, Cycle, ade_types, build_ade, pairing
from flopcycles.fundamental_cycle import (
    BoundTooSmallError,
    PreconditionError,
    brute_force_fundamental_cycle,
    fundamental_cycle_closed_form,
    is_anti_nef,
    laufer_fundamental_cycle,
)

from oracles import minimal_anti_nef_by_lattice_walk

# Highest-root coefficients written out by hand in the canonical labeling,
# then confirmed against the exhaustive oracle below.
E_BY_HAND = {
    6: (1, 2, 3, 2, 1, 2),
    7: (2, 3, 4, 3, 2, 1, 2),
    8: (2, 4, 6, 5, 4, 3, 2, 3),
}


def laufer(t):
    return laufer_fundamental_cycle(build_ade(t)).result


@pytest.mark.parametrize("n", range(1, 13))
def test_a_family_all_ones(n):
    assert laufer(ADEType("A", n)).coefficients == (1,) * n


def test_d4():
    assert laufer(ADEType("D", 4)).as_dict() == {1: 1, 2: 2, 3: 1, 4: 1}


@pytest.mark.parametrize("rank", [6, 7, 8])
def test_e_family_by_hand(rank):
    assert laufer(ADEType("E", rank)).coefficients == E_BY_HAND[rank]


def test_e8_shape():
    f = laufer(ADEType("E", 8))
    assert f.max() == 6 and f[3] == 6
    assert f[1] == f[7] == 2


# E8 is left to the vectorised brute force; the pure-Python walker is too slow there
@pytest.mark.parametrize("rank", [6, 7])
def test_e_family_against_second_oracle(rank):
    c = build_ade(ADEType("E", rank))
    assert minimal_anti_nef_by_lattice_walk(c) == E_BY_HAND[rank]


def test_brute_force_examples():
    assert brute_force_fundamental_cycle(build_ade(ADEType("A", 1)), 6).coefficients == (1,)
    assert brute_force_fundamental_cycle(build_ade(ADEType("D", 5)), 6).coefficients == (1, 2, 2, 1, 1)
    assert brute_force_fundamental_cycle(build_ade(ADEType("E", 6)), 6).coefficients == E_BY_HAND[6]


def test_d5_hand_check():
    c = build_ade(ADEType("D", 5))
    f = Cycle(c, (1, 2, 2, 1, 1))
    assert pairing(f, Cycle.unit(c, 2)) == -1
    assert is_anti_nef(f)


def test_brute_force_bound_too_small():
    with pytest.raises(BoundTooSmallError):
        brute_force_fundamental_cycle(build_ade(ADEType("E", 8)), 5)


@pytest.mark.parametrize("t", ade_types(8), ids=str)
def test_laufer_equals_brute_force(t):
    c = build_ade(t)
    assert laufer_fundamental_cycle(c).result == brute_force_fundamental_cycle(c, 6)


@pytest.mark.parametrize("t", ade_types(20), ids=str)
def test_laufer_equals_closed_form(t):
    assert laufer(t) == fundamental_cycle_closed_form(t)


def test_closed_form_examples():
    assert fundamental_cycle_closed_form(ADEType("A", 7)).coefficients == (1,) * 7
    assert fundamental_cycle_closed_form(ADEType("D", 12)).coefficients == (1,) + (2,) * 9 + (1, 1)
    e7 = fundamental_cycle_closed_form(ADEType("E", 7))
    assert e7.max() == 4 and e7[3] == 4


@pytest.mark.parametrize("t", ade_types(20), ids=str)
def test_trace_invariants(t):
    trace = laufer_fundamental_cycle(build_ade(t))
    f = trace.result
    assert trace.replay() == f
    assert is_anti_nef(f)
    assert pairing(f, f) == -2
    assert f.max() <= 6
    assert all(z <= f for z in trace.intermediate_cycles())
    assert all(val > 0 for _, val in trace.steps)
    assert len(trace.steps) <= 10 * len(f.config) ** 2


@pytest.mark.parametrize("t", ade_types(20), ids=str)
def test_order_and_start_independence(t):
    c = build_ade(t)
    f = laufer_fundamental_cycle(c).result
    assert laufer_fundamental_cycle(c, order=c.vertices[::-1]).result == f
    assert laufer_fundamental_cycle(c, start="ones").result == f
    rng = random.Random(str(t))
    for _ in range(10):
        order = list(c.vertices)
        rng.shuffle(order)
        assert laufer_fundamental_cycle(c, order=order).result == f


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ade_types(8)), st.data())
def test_fundamental_cycle_is_below_every_positive_anti_nef(t, data):
    c = build_ade(t)
    f = laufer(t)
    z = Cycle(c, tuple(data.draw(st.lists(st.integers(1, 12), min_size=len(c), max_size=len(c)))))
    if is_anti_nef(z):
        assert f <= z


def test_preconditions():
    with pytest.raises(PreconditionError):
        laufer_fundamental_cycle(CurveConfiguration.from_edges([1, 2], []))
    triangle = CurveConfiguration.from_edges([1, 2, 3], [(1, 2), (2, 3), (1, 3)])
    with pytest.raises(PreconditionError):
        laufer_fundamental_cycle(triangle)


def test_trace_table_mentions_every_step():
    trace = laufer_fundamental_cycle(build_ade(ADEType("E", 6)))
    table = trace.table()
    assert table.count("\n") == len(trace.steps) + 2
    assert table.endswith("result: 1:1 2:2 3:3 4:2 5:1 6:2")
