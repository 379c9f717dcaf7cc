
import pytest

from conftest import random_colouring
from doublestar_ramsey import (
    DoubleStarSpec,
    Status,
    exists_good_colouring,
    find_monochromatic,
    r_b,
    ramsey_exact,
    random_witness_search,
)
from doublestar_ramsey.search import _edge_list
from oracles import good_colouring_exists

S = DoubleStarSpec


@pytest.mark.parametrize(
    "n, spec, status",
    [(5, S(2, 1), Status.YES), (6, S(2, 1), Status.NO), (4, S(1, 1), Status.YES), (5, S(1, 1), Status.NO)],
)
def test_decision_examples(n, spec, status):
    d = exists_good_colouring(n, spec)
    assert d.status is status
    if status is Status.YES:
        assert find_monochromatic(d.witness, spec) is None
        assert d.witness.n == n


def test_host_too_small_is_trivially_good():
    d = exists_good_colouring(4, S(2, 1))
    assert d.status is Status.YES and d.stats.nodes == 0


AGREEMENT = [(n, S(m1, m2)) for n in range(2, 7) for m1 in range(1, 4) for m2 in range(1, m1 + 1)]


@pytest.mark.parametrize("n, spec", AGREEMENT, ids=lambda x: str(x))
def test_agrees_with_full_enumeration(n, spec):
    expected = good_colouring_exists(n, spec, lambda c, s: find_monochromatic(c, s) is not None)
    d = exists_good_colouring(n, spec)
    assert (d.status is Status.YES) == expected


def test_first_edge_fixed_red():
    d = exists_good_colouring(5, S(2, 1))
    assert d.witness.red[0] >> 1 & 1


@pytest.mark.parametrize("spec, value", [(S(1, 1), 5), (S(2, 1), 6), (S(2, 2), 8), (S(3, 1), 7), (S(3, 2), 9)])
def test_ramsey_exact(spec, value):
    out = ramsey_exact(spec)
    assert out.ramsey_value == value == out.exhausted_at
    assert value - 1 in out.witnesses
    for w in out.witnesses.values():
        assert find_monochromatic(w, spec) is None
    assert f"R(S({spec.m1},{spec.m2})) = {value}" in out.report()


def test_monotonicity_spot_check(rng):
    assert exists_good_colouring(6, S(2, 1)).status is Status.NO
    for _ in range(1000):
        assert find_monochromatic(random_colouring(rng, 7, rng.random()), S(2, 1)) is not None


def test_budget_gives_unknown():
    d = exists_good_colouring(8, S(2, 2), budget=100)
    assert d.status is Status.UNKNOWN
    again = exists_good_colouring(8, S(2, 2), budget=100)
    assert again.stats.nodes == d.stats.nodes
    out = ramsey_exact(S(2, 2), budget=100)
    assert out.ramsey_value is None
    assert "undecided" in out.report()


def test_max_n_stops_early():
    out = ramsey_exact(S(3, 2), max_n=8)
    assert out.ramsey_value is None and out.exhausted_at is None
    assert sorted(out.witnesses) == [8]


@pytest.mark.parametrize("n, spec", [(7, S(2, 2)), (8, S(2, 2)), (8, S(3, 2)), (9, S(3, 2))])
def test_thread_count_does_not_change_answer(n, spec):
    one = exists_good_colouring(n, spec, threads=1)
    four = exists_good_colouring(n, spec, threads=4)
    assert one.status is four.status
    assert one.witness == four.witness
    assert (one.stats.nodes, one.stats.prunes) == (four.stats.nodes, four.stats.prunes)


@pytest.mark.parametrize("depth", [1, 5, 12, 40])
def test_prefix_depth_does_not_change_answer(depth):
    ref = exists_good_colouring(8, S(3, 2))
    d = exists_good_colouring(8, S(3, 2), prefix_depth=depth)
    assert d.status is ref.status and d.witness == ref.witness


def test_random_witness_examples():
    spec = S(3, 2)
    n = r_b(spec) - 1
    for seed in range(5):
        c = random_witness_search(n, spec, seed=seed, iterations=5000)
        assert c is not None and find_monochromatic(c, spec) is None
    assert random_witness_search(6, S(2, 1), seed=0, iterations=300) is None
    c = random_witness_search(5, S(2, 1), seed=1, iterations=10_000)
    assert c is not None and find_monochromatic(c, S(2, 1)) is None


def test_random_witness_deterministic():
    a = random_witness_search(8, S(3, 2), seed=7, iterations=2000)
    b = random_witness_search(8, S(3, 2), seed=7, iterations=2000)
    assert a == b


def test_good_colourings_of_k5_for_s21_exist_in_quantity():
    # local search at n=5 needs witnesses to be reasonably dense
    from oracles import all_colourings

    good = sum(find_monochromatic(c, S(2, 1)) is None for c in all_colourings(5))
    assert good > 0
    assert len(_edge_list(5)) == 10
