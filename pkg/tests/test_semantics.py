import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bnm_schemes, formulas, inferences
from trivalent.errors import MissingAtomError, ResourceLimitError
from trivalent.formula import And, Inference, Neg, Or, Var, atoms, parse, parse_inference
from trivalent.scheme import F, I, T, enumerate_bnm_schemes
from trivalent.semantics import (
    LogicSpec,
    SS,
    ST,
    STRICT,
    TOLERANT,
    TS,
    TT,
    FormulaStandard,
    Standard,
    Valuation,
    all_valuations,
    eval_formula,
    find_countervaluation,
    is_antitheorem,
    is_classically_valid,
    is_theorem,
    is_valid,
    parse_standard,
    satisfies_inference,
)

WITNESS = parse_inference("p | (q & ~q) => p & (r | ~r)")


def naive_is_valid(logic, inf):
    """Oracle: direct satisfaction scan with the single-point evaluator."""
    names = sorted(atoms(inf))
    return all(
        satisfies_inference(logic.scheme, v, inf, logic.standard)
        for v in all_valuations(names)
    )


def test_eval_examples(strong, weak):
    v = Valuation.of({"p": I})
    assert eval_formula(strong, v, parse("p | ~p")) is I
    v2 = Valuation.of({"p": T, "q": I})
    assert eval_formula(weak, v2, parse("p | q")) is I
    assert eval_formula(strong, v2, parse("p | q")) is T


@settings(max_examples=100)
@given(bnm_schemes, formulas(), st.data())
def test_two_valued_evaluation_is_classical(scheme, f, data):
    names = sorted(atoms(f))
    picks = data.draw(st.tuples(*[st.sampled_from([F, T])] * len(names)))
    v = Valuation.of(dict(zip(names, picks)))

    def classical(g):
        if isinstance(g, Var):
            return v.value(g.name) is T
        if isinstance(g, Neg):
            return not classical(g.child)
        if isinstance(g, And):
            return classical(g.left) and classical(g.right)
        return classical(g.left) or classical(g.right)

    assert (eval_formula(scheme, v, f) is T) == classical(f)
    assert eval_formula(scheme, v, f) in (F, T)


def test_missing_atom(strong):
    with pytest.raises(MissingAtomError):
        eval_formula(strong, Valuation.of({"p": T}), parse("p & q"))


def test_valuation_order_is_canonical():
    # names sorted, value tuples lexicographic with 0 < i < 1 (last varies fastest)
    vals = list(all_valuations(["q", "p"]))
    assert len(vals) == 9
    assert vals[0] == Valuation.of({"p": F, "q": F})
    assert vals[1] == Valuation.of({"p": F, "q": I})
    assert vals[3] == Valuation.of({"p": I, "q": F})
    assert vals[-1] == Valuation.of({"p": T, "q": T})


def test_satisfies_inference_examples(strong):
    explosion = parse_inference("p & ~p => r")
    v = Valuation.of({"p": I, "r": F})
    assert not satisfies_inference(strong, v, explosion, TT)
    assert satisfies_inference(strong, v, explosion, SS)
    all_i = Valuation.of({"p": I, "q": I, "r": I})
    assert not satisfies_inference(strong, all_i, WITNESS, TS)


def test_validity_examples(strong):
    explosion = parse_inference("p & ~p => r")
    assert is_valid(LogicSpec(strong, SS), explosion)
    assert not is_valid(LogicSpec(strong, TT), explosion)
    assert is_valid(LogicSpec(strong, ST), WITNESS)
    assert not is_valid(LogicSpec(strong, SS), WITNESS)
    assert not is_valid(LogicSpec(strong, TT), WITNESS)


def test_ts_is_empty_for_reflexivity():
    reflexive = parse_inference("p => p")
    for scheme in enumerate_bnm_schemes():
        assert not is_valid(LogicSpec(scheme, TS), reflexive)


def test_classical_validity():
    assert is_classically_valid(WITNESS)
    assert is_classically_valid(parse_inference("=> p | ~p"))
    assert not is_classically_valid(parse_inference("p => q"))


def test_countervaluations_are_canonical(strong):
    ss_counter = find_countervaluation(LogicSpec(strong, SS), WITNESS)
    assert ss_counter == Valuation.of({"p": T, "q": F, "r": I})
    tt_counter = find_countervaluation(LogicSpec(strong, TT), WITNESS)
    assert tt_counter == Valuation.of({"p": F, "q": I, "r": F})
    assert find_countervaluation(LogicSpec(strong, SS), parse_inference("p => p")) is None


def test_theoremhood(strong):
    lem = parse("p | ~p")
    for scheme in enumerate_bnm_schemes():
        assert is_theorem(LogicSpec(scheme, TT), lem)
    assert not is_theorem(LogicSpec(strong, SS), lem)
    assert not is_theorem(LogicSpec(strong, SS), parse("p | ~p | q"))
    assert is_theorem(LogicSpec(strong, ST), lem)


def test_antitheoremhood(strong):
    contradiction = [parse("p & ~p")]
    assert is_antitheorem(LogicSpec(strong, SS), contradiction)
    assert not is_antitheorem(LogicSpec(strong, TT), contradiction)
    assert not is_antitheorem(LogicSpec(strong, SS), [parse("p")])
    assert not is_antitheorem(LogicSpec(strong, SS), [])


@settings(max_examples=150)
@given(bnm_schemes, st.sampled_from([SS, TT, ST, TS]), inferences())
def test_validity_agrees_with_satisfaction_oracle(scheme, standard, inf):
    logic = LogicSpec(scheme, standard)
    assert is_valid(logic, inf) == naive_is_valid(logic, inf)


@settings(max_examples=150)
@given(bnm_schemes, inferences())
def test_st_validity_is_classical_validity(scheme, inf):
    assert is_valid(LogicSpec(scheme, ST), inf) == is_classically_valid(inf)


@settings(max_examples=100)
@given(bnm_schemes, inferences())
def test_ts_validates_nothing(scheme, inf):
    logic = LogicSpec(scheme, TS)
    assert not is_valid(logic, inf)
    names = sorted(atoms(inf))
    all_middle = Valuation.of({name: I for name in names})
    assert not satisfies_inference(scheme, all_middle, inf, TS)


@settings(max_examples=100)
@given(bnm_schemes, st.sampled_from([SS, TT]), st.lists(formulas(), min_size=1, max_size=3))
def test_antitheorem_iff_fresh_conclusion_follows(scheme, standard, gamma):
    # the generator only uses p, q, r, so s is fresh by construction
    logic = LogicSpec(scheme, standard)
    assert is_antitheorem(logic, gamma) == is_valid(logic, Inference(gamma, Var("s")))


@settings(max_examples=100)
@given(bnm_schemes, st.sampled_from([SS, TT]), formulas())
def test_theorem_iff_follows_from_fresh_premise(scheme, standard, f):
    logic = LogicSpec(scheme, standard)
    assert is_theorem(logic, f) == is_valid(logic, Inference((Var("s"),), f))


@settings(max_examples=80)
@given(bnm_schemes, st.sampled_from([SS, TT, ST]), inferences())
def test_countervaluation_is_first_and_falsifying(scheme, standard, inf):
    logic = LogicSpec(scheme, standard)
    counter = find_countervaluation(logic, inf)
    names = sorted(atoms(inf))
    if counter is None:
        assert is_valid(logic, inf)
        return
    assert not satisfies_inference(scheme, counter, inf, standard)
    for v in all_valuations(names):
        if v == counter:
            break
        assert satisfies_inference(scheme, v, inf, standard)


def test_custom_standards():
    assert parse_standard("ss") == SS
    assert parse_standard("1:1i") == Standard(STRICT, TOLERANT) == ST
    exotic = parse_standard("01:1")
    assert exotic.premise.allowed == {F, T}
    assert exotic.conclusion.allowed == {T}
    empty_side = parse_standard("-:1")
    assert empty_side.premise.allowed == frozenset()
    with pytest.raises(ValueError):
        parse_standard("xx")
    with pytest.raises(ValueError):
        parse_standard("1:2")


def test_custom_standard_validity(strong):
    # empty premise standard: no premise is ever satisfied, everything holds
    vacuous = LogicSpec(strong, Standard(FormulaStandard(frozenset()), STRICT))
    assert is_valid(vacuous, parse_inference("q => p"))


def test_logic_spec_requires_bnm(strong):
    from trivalent.scheme import Scheme

    broken = Scheme((T, I, T), strong.conj_table, strong.disj_table)
    with pytest.raises(ValueError):
        LogicSpec(broken, SS)
    assert LogicSpec(broken, SS, allow_non_bnm=True).scheme is broken


def test_atom_cap(strong):
    wide = Inference([], Or(*[Var(f"x{i}") for i in range(2)]))
    for i in range(2, 13):
        wide = Inference([], Or(wide.conclusion, Var(f"x{i}")))
    assert len(atoms(wide)) == 13
    with pytest.raises(ResourceLimitError):
        is_valid(LogicSpec(strong, SS), wide)
    assert is_valid(LogicSpec(strong, SS), wide, atom_cap=13) is False
