import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trivalent.errors import ResourceLimitError
from trivalent.formula import Inference, Var, parse_inference
from trivalent.closure import (
    Universe,
    check_operator_laws,
    dual_transitive_closure,
    dual_transitive_closure_direct,
    ordered_inferences,
    tarskian_closure,
    transitive_closure,
    universe_inferences,
    universe_preserving_substitutions,
)

P, Q, R = Var("p"), Var("q"), Var("r")


def naive_transitive_closure(base, u):
    """Oracle: apply the cut rule literally over all premise-capped subsets."""
    members = set(base)
    pool = list(u.formulas)
    deltas = [
        frozenset(combo)
        for size in range(1, u.premise_cap + 1)
        for combo in itertools.combinations(pool, size)
    ]
    gammas = [frozenset(combo)
              for size in range(u.premise_cap + 1)
              for combo in itertools.combinations(pool, size)]
    changed = True
    while changed:
        changed = False
        for delta in deltas:
            for phi in pool:
                if Inference(delta, phi) not in members:
                    continue
                for gamma in gammas:
                    if Inference(gamma, phi) in members:
                        continue
                    if all(Inference(gamma, d) in members for d in delta):
                        members.add(Inference(gamma, phi))
                        changed = True
    return frozenset(members)


def small_universe():
    return Universe([P, Q, R], 2)


def test_universe_counts():
    assert len(universe_inferences(Universe([P], 1))) == 2
    assert len(universe_inferences(Universe([P, Q], 1))) == 6
    assert len(universe_inferences(Universe([P, Q], 2))) == 8
    u = Universe([P, Q], 2)
    assert u.inference_count() == 2 * (1 + 2 + 1)


def test_universe_count_oracle():
    u = Universe.build(["p", "q"], 1, 2, reserve=["r"])
    n = len(u.formulas)
    assert n == 13
    expected = n * sum(math.comb(n, j) for j in range(3))
    assert u.inference_count() == expected == len(universe_inferences(u))


def test_ordered_inferences_are_canonical():
    u = Universe([P, Q], 1)
    assert [str(inf) for inf in ordered_inferences(u)] == [
        "=> p", "=> q", "p => p", "p => q", "q => p", "q => q",
    ]


def test_universe_validation():
    with pytest.raises(ValueError):
        Universe([], 1)
    with pytest.raises(ValueError):
        Universe([P], 0)
    with pytest.raises(ValueError):
        Universe([P], 1, reserve_atoms=["q"])
    with pytest.raises(ValueError):
        Universe.build(["p"], 1, 2, reserve=["p"])


def test_universe_build_adds_reserve_as_bare_atom():
    u = Universe.build(["p"], 1, 2, reserve=["q"])
    assert Var("q") in u.formulas
    assert all("q" not in str(f) for f in u.formulas if f != Var("q"))
    assert u.is_reserve_free(parse_inference("p => ~p"))
    assert not u.is_reserve_free(parse_inference("p => q"))


def test_universe_materialization_cap():
    u = Universe.build(["p", "q"], 2, 2)
    with pytest.raises(ResourceLimitError):
        universe_inferences(u, max_count=1000)


def test_unary_cut():
    u = small_universe()
    base = {parse_inference("p => q"), parse_inference("q => r")}
    closed = transitive_closure(base, u)
    assert parse_inference("p => r") in closed
    assert closed == base | {parse_inference("p => r")}
    assert transitive_closure(closed, u) == closed


def test_two_element_delta_cut():
    u = small_universe()
    base = {
        parse_inference("p => q"),
        parse_inference("p => r"),
        parse_inference("q, r => p"),
    }
    closed = transitive_closure(base, u)
    assert parse_inference("p => p") in closed


def test_base_must_live_in_universe():
    with pytest.raises(ValueError):
        transitive_closure({parse_inference("p & p => q")}, small_universe())
    with pytest.raises(ValueError):
        transitive_closure({parse_inference("p, q, r => p")}, small_universe())


def test_dual_closure_examples():
    u = Universe([P, Q], 1)
    everything = universe_inferences(u)
    assert dual_transitive_closure(everything, u) == everything
    assert dual_transitive_closure({parse_inference("p => p")}, u) == frozenset()
    assert dual_transitive_closure(frozenset(), u) == frozenset()


def test_order_independence(rng):
    u = small_universe()
    population = ordered_inferences(u)
    base = rng.sample(population, 12)
    reference = transitive_closure(base, u)
    for _ in range(5):
        rng.shuffle(base)
        assert transitive_closure(base, u) == reference


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_closure_matches_naive_oracle(data):
    u = Universe([P, Q, R], 2)
    population = ordered_inferences(u)
    base = data.draw(st.lists(st.sampled_from(population), max_size=10))
    assert transitive_closure(base, u) == naive_transitive_closure(base, u)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_dual_closure_routes_agree(data):
    u = Universe([P, Q], 2)
    population = ordered_inferences(u)
    base = frozenset(data.draw(st.lists(st.sampled_from(population), max_size=12)))
    via_complement = dual_transitive_closure(base, u)
    direct = dual_transitive_closure_direct(base, u)
    everything = universe_inferences(u)
    naive = everything - naive_transitive_closure(everything - base, u)
    assert via_complement == direct == naive


def naive_tarskian_closure(base, u):
    """Oracle: literal rule application (R, M, T, S) to a fixed point."""
    members = set(base) | {Inference((f,), f) for f in u.formulas}
    subs = universe_preserving_substitutions(u)
    changed = True
    while changed:
        changed = False
        snapshot = list(members)
        for inf in snapshot:
            if len(inf.premises) < u.premise_cap:
                for f in u.formulas:
                    widened = Inference(inf.premises | {f}, inf.conclusion)
                    if widened not in members:
                        members.add(widened)
                        changed = True
            for sigma in subs:
                from trivalent.formula import substitute_inference

                image = substitute_inference(inf, sigma)
                if image not in members:
                    members.add(image)
                    changed = True
        cut = naive_transitive_closure(members, u)
        if cut - members:
            members |= cut
            changed = True
    return frozenset(members)


def test_tarskian_closure_matches_naive_oracle(rng):
    u = Universe([P, Q], 2)
    population = ordered_inferences(u)
    for _ in range(4):
        base = rng.sample(population, rng.randint(0, 4))
        assert tarskian_closure(base, u) == naive_tarskian_closure(base, u)


def test_tarskian_closure_contains_reflexive_weakenings():
    u = Universe([P, Q], 2)
    closed = tarskian_closure(frozenset(), u)
    for inf in universe_inferences(u):
        if inf.conclusion in inf.premises:
            assert inf in closed
    assert parse_inference("=> p") not in closed
    base = {parse_inference("=> p")}
    assert base <= tarskian_closure(base, u)


def test_tarskian_closure_applies_substitution():
    u = Universe([P, Q], 1)
    closed = tarskian_closure({parse_inference("=> p")}, u)
    assert parse_inference("=> q") in closed


def test_universe_preserving_substitutions():
    u = Universe.build(["p", "q"], 1, 2, reserve=["r"])
    subs = universe_preserving_substitutions(u)
    # composite formulas force p, q to map to atoms among {p, q}; the bare
    # reserve atom may go anywhere in the pool
    assert len(subs) == 2 * 2 * len(u.formulas)


def test_operator_laws_on_random_samples(rng):
    u = Universe([P, Q, R], 2)
    population = ordered_inferences(u)
    samples = [
        (rng.sample(population, rng.randint(0, 16)), u) for _ in range(12)
    ]
    report = check_operator_laws(samples)
    assert report.passed, report.failures[:3]
    assert report.checks > 0
