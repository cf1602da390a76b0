import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import ring, sphere
from vqlnet.entanglement import (T_CREATE, T_LIFETIME, T_SWAP, EntanglementLedger, StepPlan, Swap,
                                 apply_step, bootstrap_schedule, check_step, consume_path,
                                 replay, replenish_schedule)
from vqlnet.errors import InputError, ResourceError, ScheduleError
from vqlnet.ring import ring_level


def test_timing_constants():
    assert T_CREATE == T_SWAP == 1
    assert math.isinf(T_LIFETIME)


def test_empty_plan_advances_time():
    ledger = EntanglementLedger.full(ring(3))
    apply_step(ledger, StepPlan())
    assert ledger.time == 1 and ledger.all_entangled()


def test_swap_semantics():
    # A - B - C on the ring: 0 - 1 - 2, joined into {0, 2}
    g = ring(3)
    ledger = EntanglementLedger(g, [(0, 2)])
    apply_step(ledger, StepPlan.of(swaps=[Swap(1, 0, 2)]))
    assert ledger.is_entangled(0, 2)
    assert not ledger.is_entangled(0, 1) and not ledger.is_entangled(1, 2)


def test_two_swaps_at_one_node_rejected():
    g = ring(4)
    ledger = EntanglementLedger(g, [(0, 4)])
    plan = StepPlan.of(swaps=[Swap(2, 0, 4), Swap(2, 1, 3)])
    with pytest.raises(ScheduleError, match="more than once"):
        apply_step(ledger, plan)
    assert ledger.time == 0


@pytest.mark.parametrize("plan,missing,match", [
    (StepPlan.of(creates=[(0, 2)]), [(0, 2)], "physical"),
    (StepPlan.of(creates=[(0, 1)]), [], "already entangled"),
    (StepPlan.of(swaps=[Swap(1, 0, 2)]), [(0, 1), (0, 2)], "not entangled"),
    (StepPlan.of(swaps=[Swap(1, 0, 3)]), [], "not an edge"),
    (StepPlan.of(swaps=[Swap(1, 0, 2)]), [], "already entangled"),
    (StepPlan.of(creates=[(0, 1)], swaps=[Swap(1, 0, 2)]), [(0, 1), (0, 2)], "not entangled"),
    (StepPlan.of(swaps=[Swap(1, 0, 2), Swap(3, 2, 4)]), [(0, 2), (2, 4)], None),
])
def test_step_validation(plan, missing, match):
    ledger = EntanglementLedger(ring(4), missing)
    if match is None:
        check_step(ledger, plan)
    else:
        with pytest.raises(ScheduleError, match=match):
            check_step(ledger, plan)


def test_double_consumption_rejected():
    g = ring(4)
    ledger = EntanglementLedger.full(g)
    # {0, 4} would be eaten by the swaps at 0 and at 4
    plan = StepPlan.of(swaps=[Swap(0, 8, 4), Swap(4, 0, 8)])
    with pytest.raises(ScheduleError, match="consumed by two"):
        check_step(ledger, plan)


def test_consume_and_regenerate_in_one_step():
    # {0, 4} is used by the swap at 4 and rebuilt by the swap at 2
    g = ring(4)
    ledger = EntanglementLedger(g, [(0, 8)])
    plan = StepPlan.of(swaps=[Swap(4, 0, 8), Swap(2, 0, 4)])
    apply_step(ledger, plan)
    assert ledger.is_entangled(0, 8) and ledger.is_entangled(0, 4)
    assert ledger.missing() == {(0, 2), (2, 4), (4, 8)}


@pytest.mark.parametrize("k", range(5))
def test_sphere_bootstrap_length(k):
    g = sphere(k)
    t = bootstrap_schedule(g)
    assert len(t) == 2 * k + 1
    ledger = replay(EntanglementLedger.empty(g), t)
    assert ledger.all_entangled() and ledger.time == 2 * k + 1


@pytest.mark.parametrize("n", range(1, 9))
def test_ring_bootstrap_length(n):
    g = ring(n)
    t = bootstrap_schedule(g)
    assert len(t) == 2 * (n - 1) + 1
    assert replay(EntanglementLedger.empty(g), t).all_entangled()


def test_bootstrap_uses_one_side_of_ring():
    g = ring(4)
    t = bootstrap_schedule(g)
    last_swaps = t.steps[-2].swaps
    assert Swap(4, 0, 8) in last_swaps
    assert all(s.node != 12 for s in last_swaps)


def test_replenish_physical_edge():
    g = sphere(2)
    e = g.physical_edges()[0]
    ledger = EntanglementLedger(g, [e])
    t = replenish_schedule(ledger, [e])
    assert len(t) == 1 and t.steps[0].creates == {e}


def test_replenish_base_edge():
    g = sphere(2)
    e = g.edges_on_layer(0)[0]
    ledger = EntanglementLedger(g, [e])
    t = replenish_schedule(ledger, [e])
    assert len(t) <= 2
    assert replay(ledger, t).all_entangled()


def test_replenish_does_not_touch_input():
    g = sphere(1)
    e = g.edges_on_layer(0)[3]
    ledger = EntanglementLedger(g, [e])
    replenish_schedule(ledger, [e])
    assert ledger.missing() == {e} and ledger.time == 0


def test_replenish_rejects_bad_input():
    g = sphere(1)
    e = g.physical_edges()[0]
    ledger = EntanglementLedger(g, [e])
    with pytest.raises(InputError):
        replenish_schedule(ledger, [(e[0], e[0])])
    with pytest.raises(InputError):
        replenish_schedule(ledger, [(0, 1, 2)])
    with pytest.raises(InputError):
        replenish_schedule(EntanglementLedger.full(g), [e])


@pytest.mark.parametrize("g", [sphere(1), sphere(2), sphere(3), ring(5), ring(7)],
                         ids=["s1", "s2", "s3", "r5", "r7"])
def test_replenish_bounds_random_sets(g):
    rng = random.Random(g.vertex_count)
    edges = list(g.edges())
    cap = 2 * g.layer_count + 1
    for _ in range(200):
        s = rng.sample(edges, rng.randint(1, 25))
        ledger = EntanglementLedger(g, s)
        t = replenish_schedule(ledger, s)
        assert len(t) <= min(2 * len(s), cap)
        assert replay(ledger, t).all_entangled()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2549), min_size=1, max_size=40, unique=True))
def test_replenish_property(idx):
    g = sphere(3)
    edges = sorted(g.edges())
    s = [edges[i] for i in idx]
    ledger = EntanglementLedger(g, s)
    t = replenish_schedule(ledger, s)
    assert len(t) <= min(2 * len(s), 7)
    assert replay(ledger, t).all_entangled()


def test_consume_path():
    g = ring(6)
    ledger = EntanglementLedger.full(g)
    _, used = consume_path(ledger, [0, 32, 36, 37])
    assert used == {(0, 32), (32, 36), (36, 37)}
    assert sorted(ring_level(g, *e) for e in used) == [1, 4, 6]
    with pytest.raises(ResourceError) as info:
        consume_path(ledger, [0, 32, 36, 37])
    assert info.value.edge == (0, 32)


def test_consume_path_is_atomic():
    g = ring(6)
    ledger = EntanglementLedger(g, [(36, 37)])
    with pytest.raises(ResourceError):
        consume_path(ledger, [0, 32, 36, 37])
    assert ledger.missing() == {(36, 37)}


def test_one_hop_path():
    ledger = EntanglementLedger.full(ring(3))
    assert consume_path(ledger, [2, 3])[1] == {(2, 3)}
