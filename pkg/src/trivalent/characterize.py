"""Executable characterizations of the collapse and lattice results.

The centerpiece facts this module turns into checkable constructions:

* every classically valid inference factors through a two-step derivation
  whose first stage holds tolerant-tolerant and whose second stage holds
  strict-strict, over freely mixed Boolean-normal monotonic schemes
  (``derive_classical`` builds the witness, cut recovers the inference);
* the dual transitive closure of a validity set keeps exactly its
  antitheorem-premised and theorem-concluded inferences (``star_set``,
  ``check_td_equals_star``), and erases the strict/tolerant intersection
  entirely (``check_ts_collapse``);
* the four validity sets {ss, tt, their intersection, st} form a lattice
  whose join is cut-closure of the union and whose meet is intersection,
  and the corresponding star sets form an isomorphic lattice the other way
  up (``LatticeFamily``, ``verify_lattices``).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .closure import (
    Universe,
    dual_transitive_closure,
    transitive_closure,
    universe_inferences,
)
from .formula import And, Formula, Inference, Neg, Or, Var, atoms, formula_key
from .report import Report
from .scheme import TruthValue
from .semantics import (
    DEFAULT_ATOM_CAP,
    LogicSpec,
    Logics,
    SS,
    ST,
    TS,
    TT,
    Valuation,
    antitheorem_in_all,
    as_logic_tuple,
    is_classical_tautology,
    is_classically_unsatisfiable,
    is_classically_valid,
    is_valid,
    satisfies_inference,
    theorem_in_all,
    valid_in_all,
)


def delta_witness(inf: Inference) -> frozenset[Formula]:
    """The intermediate formula set of the two-step factorization: the
    premises plus one excluded-middle disjunct per conclusion atom."""
    extras = {Var(name) for name in atoms(inf.conclusion)}
    return inf.premises | {Or(v, Neg(v)) for v in sorted(extras, key=formula_key)}


@dataclass(frozen=True, slots=True)
class DerivationWitness:
    """A checked two-step derivation of a classically valid inference.

    ``tt_checks`` records one tolerant-tolerant validity per intermediate
    formula; ``ss_check`` the single strict-strict step from the
    intermediate set to the conclusion.  The witness certifies membership
    in the cut closure of the union of the two validity sets.
    """

    delta: frozenset[Formula]
    tt_checks: tuple[tuple[Inference, bool], ...]
    ss_check: tuple[Inference, bool]
    tt_logic: LogicSpec
    ss_logic: LogicSpec

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok in self.tt_checks) and self.ss_check[1]

    def step_inferences(self) -> list[Inference]:
        return [inf for inf, _ in self.tt_checks] + [self.ss_check[0]]


def derive_classical(
    inf: Inference,
    tt_logic: LogicSpec,
    ss_logic: LogicSpec,
    atom_cap: int = DEFAULT_ATOM_CAP,
) -> DerivationWitness | None:
    """Build the two-step witness for a classically valid inference.

    Returns None when the inference is not classically valid.  The two
    logics may use different schemes; their standards must be
    tolerant-tolerant and strict-strict respectively.
    """
    if tt_logic.standard != TT:
        raise ValueError("tt_logic must use the tolerant-tolerant standard")
    if ss_logic.standard != SS:
        raise ValueError("ss_logic must use the strict-strict standard")
    if not is_classically_valid(inf, atom_cap):
        return None
    delta = delta_witness(inf)
    tt_checks = tuple(
        (step, is_valid(tt_logic, step, atom_cap))
        for step in (
            Inference(inf.premises, d)
            for d in sorted(delta, key=formula_key)
        )
    )
    ss_step = Inference(delta, inf.conclusion)
    witness = DerivationWitness(
        delta=delta,
        tt_checks=tt_checks,
        ss_check=(ss_step, is_valid(ss_logic, ss_step, atom_cap)),
        tt_logic=tt_logic,
        ss_logic=ss_logic,
    )
    return witness


def replay_witness(inf: Inference, witness: DerivationWitness) -> bool:
    """Feed the witness steps to the cut closure inside a universe just big
    enough to hold them, and confirm the target inference is recovered."""
    pool = list(inf.premises) + sorted(witness.delta, key=formula_key) + [inf.conclusion]
    cap = max(1, len(inf.premises), len(witness.delta))
    u = Universe(pool, cap)
    base = set(witness.step_inferences())
    return inf in transitive_closure(base, u)


def valid_subset(logics: Logics, u: Universe, atom_cap: int = DEFAULT_ATOM_CAP) -> frozenset[Inference]:
    """The universe inferences valid in every given logic."""
    return frozenset(
        inf for inf in universe_inferences(u) if valid_in_all(logics, inf, atom_cap)
    )


def star_set(logics: Logics, u: Universe, atom_cap: int = DEFAULT_ATOM_CAP) -> frozenset[Inference]:
    """All universe inferences with an antitheorem premise set or a theorem
    conclusion, decided semantically (intersections take both components)."""
    logic_tuple = as_logic_tuple(logics)
    theorem_cache = {
        f: theorem_in_all(logic_tuple, f, atom_cap) for f in u.formulas
    }
    antith_cache: dict[frozenset[Formula], bool] = {}
    found = []
    for inf in universe_inferences(u):
        if theorem_cache[inf.conclusion]:
            found.append(inf)
            continue
        premises = inf.premises
        if premises not in antith_cache:
            antith_cache[premises] = antitheorem_in_all(logic_tuple, premises, atom_cap)
        if antith_cache[premises]:
            found.append(inf)
    return frozenset(found)


def classical_star_set(u: Universe, atom_cap: int = DEFAULT_ATOM_CAP) -> frozenset[Inference]:
    """The classical counterpart: unsatisfiable premises or tautological
    conclusion, decided by the two-valued evaluator."""
    taut_cache = {f: is_classical_tautology(f, atom_cap) for f in u.formulas}
    unsat_cache: dict[frozenset[Formula], bool] = {}
    found = []
    for inf in universe_inferences(u):
        if taut_cache[inf.conclusion]:
            found.append(inf)
            continue
        if inf.premises not in unsat_cache:
            unsat_cache[inf.premises] = is_classically_unsatisfiable(inf.premises, atom_cap)
        if unsat_cache[inf.premises]:
            found.append(inf)
    return frozenset(found)


def _require_reserve(u: Universe) -> None:
    if not u.reserve_atoms:
        raise ValueError("this check needs a universe with at least one reserve atom")


def check_td_equals_star(
    logics: Logics, u: Universe, atom_cap: int = DEFAULT_ATOM_CAP
) -> Report:
    """Compare the dual transitive closure of a validity set against its
    star set, on the reserve-free part of the universe.

    Inferences touching a reserve atom are left out of the comparison: the
    removal argument consumes a fresh atom, and the universe cannot supply
    one for inferences that already use every atom it has.
    """
    _require_reserve(u)
    logic_tuple = as_logic_tuple(logics)
    label = " & ".join(str(logic) for logic in logic_tuple)
    report = Report(f"td-equals-star[{label}]")
    members = valid_subset(logic_tuple, u, atom_cap)
    closed = dual_transitive_closure(members, u)
    star = star_set(logic_tuple, u, atom_cap)
    free_closed = {inf for inf in closed if u.is_reserve_free(inf)}
    free_star = {inf for inf in star if u.is_reserve_free(inf)}
    report.notes["valid members"] = len(members)
    report.notes["reserve-free star size"] = len(free_star)
    for inf in sorted(free_closed - free_star, key=str):
        report.record("td-minus-star", False, str(inf))
    for inf in sorted(free_star - free_closed, key=str):
        report.record("star-minus-td", False, str(inf))
    report.record("td-equals-star", free_closed == free_star, "set equality")
    return report


def check_ts_collapse(
    ss_logic: LogicSpec,
    tt_logic: LogicSpec,
    u: Universe,
    atom_cap: int = DEFAULT_ATOM_CAP,
) -> Report:
    """The dual transitive closure of the ss/tt intersection is empty on the
    reserve-free part of the universe, and non-vacuously so."""
    if ss_logic.standard != SS:
        raise ValueError("ss_logic must use the strict-strict standard")
    if tt_logic.standard != TT:
        raise ValueError("tt_logic must use the tolerant-tolerant standard")
    _require_reserve(u)
    report = Report(f"ts-collapse[{ss_logic} & {tt_logic}]")
    both = valid_subset((ss_logic, tt_logic), u, atom_cap)
    reflexive = any(inf.premises == frozenset({inf.conclusion}) for inf in both)
    report.record("intersection-nonvacuous", reflexive, "expected some f => f member")
    closed = dual_transitive_closure(both, u)
    survivors = sorted(
        (inf for inf in closed if u.is_reserve_free(inf)), key=str
    )
    for inf in survivors:
        report.record("collapse", False, f"survived dual closure: {inf}")
    report.record("collapse-empty", not survivors, f"{len(both)} members erased")
    return report


def union_gap_witness() -> Inference:
    """The inference separating the ss/tt union from classical validity."""
    p, q, r = Var("p"), Var("q"), Var("r")
    premise = Or(p, And(q, Neg(q)))
    conclusion = And(p, Or(r, Neg(r)))
    return Inference((premise,), conclusion)


def check_union_gap(
    ss_logic: LogicSpec, tt_logic: LogicSpec, atom_cap: int = DEFAULT_ATOM_CAP
) -> Report:
    """The witness inference separating the ss/tt union from classical
    validity, plus the two incomparability witnesses."""
    if ss_logic.standard != SS:
        raise ValueError("ss_logic must use the strict-strict standard")
    if tt_logic.standard != TT:
        raise ValueError("tt_logic must use the tolerant-tolerant standard")
    report = Report(f"union-gap[{ss_logic} & {tt_logic}]")
    witness = union_gap_witness()
    report.record("witness-classical", is_classically_valid(witness, atom_cap), str(witness))
    report.record("witness-ss-invalid", not is_valid(ss_logic, witness, atom_cap), str(witness))
    report.record("witness-tt-invalid", not is_valid(tt_logic, witness, atom_cap), str(witness))

    v_ss = Valuation.of({"p": TruthValue.T, "q": TruthValue.F, "r": TruthValue.I})
    v_tt = Valuation.of({"p": TruthValue.F, "q": TruthValue.I, "r": TruthValue.F})
    report.record(
        "ss-countervaluation",
        not satisfies_inference(ss_logic.scheme, v_ss, witness, SS),
        f"{v_ss} should falsify strictly",
    )
    report.record(
        "tt-countervaluation",
        not satisfies_inference(tt_logic.scheme, v_tt, witness, TT),
        f"{v_tt} should falsify tolerantly",
    )

    p, r = Var("p"), Var("r")
    explosion = Inference((And(p, Neg(p)),), r)
    excluded_middle = Inference((), Or(p, Neg(p)))
    report.record("explosion-ss-valid", is_valid(ss_logic, explosion, atom_cap), str(explosion))
    report.record("explosion-tt-invalid", not is_valid(tt_logic, explosion, atom_cap), str(explosion))
    report.record(
        "excluded-middle-tt-valid", is_valid(tt_logic, excluded_middle, atom_cap), str(excluded_middle)
    )
    report.record(
        "excluded-middle-ss-invalid",
        not is_valid(ss_logic, excluded_middle, atom_cap),
        str(excluded_middle),
    )

    ts_logic = LogicSpec(ss_logic.scheme, TS)
    report.record("witness-ts-invalid", not is_valid(ts_logic, witness, atom_cap), str(witness))
    return report


# --- the two lattices ------------------------------------------------------

class FamilyMember(Enum):
    """The four validity sets carried by a lattice family."""

    SS = "ss"
    TT = "tt"
    MEET = "ss&tt"
    ST = "st"

    def __str__(self) -> str:
        return self.value


def member_leq(a: FamilyMember, b: FamilyMember) -> bool:
    """The inclusion order of the four sets (ss and tt are incomparable)."""
    if a == b or a is FamilyMember.MEET or b is FamilyMember.ST:
        return True
    return False


def lattice_join(a: FamilyMember, b: FamilyMember) -> FamilyMember:
    """Join = cut closure of the union, decided by the collapse identities:
    the larger of a comparable pair, and st for the pair {ss, tt}."""
    if member_leq(a, b):
        return b
    if member_leq(b, a):
        return a
    return FamilyMember.ST


def lattice_meet(a: FamilyMember, b: FamilyMember) -> FamilyMember:
    """Meet = intersection: the smaller of a comparable pair, and the
    ss/tt intersection for the pair {ss, tt}."""
    if member_leq(a, b):
        return a
    if member_leq(b, a):
        return b
    return FamilyMember.MEET


@dataclass(frozen=True, slots=True)
class LatticeFamily:
    """Membership deciders for the four validity sets, each possibly over a
    different Boolean-normal monotonic scheme."""

    ss: LogicSpec
    tt: LogicSpec
    st: LogicSpec

    def __post_init__(self):
        if self.ss.standard != SS or self.tt.standard != TT or self.st.standard != ST:
            raise ValueError("family logics must use the ss, tt and st standards")

    def logics(self, member: FamilyMember) -> tuple[LogicSpec, ...]:
        if member is FamilyMember.SS:
            return (self.ss,)
        if member is FamilyMember.TT:
            return (self.tt,)
        if member is FamilyMember.MEET:
            return (self.ss, self.tt)
        return (self.st,)

    def decide(self, member: FamilyMember, inf: Inference, atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
        return valid_in_all(self.logics(member), inf, atom_cap)


def verify_lattices(
    family: LatticeFamily,
    sample: Iterable[Inference],
    universe: Universe | None = None,
    atom_cap: int = DEFAULT_ATOM_CAP,
) -> Report:
    """Check the lattice algebra as membership equivalences on the sample,
    and (when a universe is supplied) the star-set lattice exactly on it."""
    report = Report("lattices")
    members = list(FamilyMember)
    pairs = [(a, b) for a in members for b in members]
    triples = [(a, b, c) for a in members for b in members for c in members]

    decided = 0
    for inf in sample:
        value = {m: family.decide(m, inf, atom_cap) for m in members}
        decided += 1
        ok = True
        ok &= value[FamilyMember.MEET] == (value[FamilyMember.SS] and value[FamilyMember.TT])
        ok &= value[FamilyMember.ST] == is_classically_valid(inf, atom_cap)
        for a, b in pairs:
            if member_leq(a, b) and value[a] and not value[b]:
                ok = False
            if value[lattice_join(a, b)] != value[lattice_join(b, a)]:
                ok = False
            if value[lattice_meet(a, b)] != value[lattice_meet(b, a)]:
                ok = False
            if value[lattice_join(a, lattice_meet(a, b))] != value[a]:
                ok = False
            if value[lattice_meet(a, lattice_join(a, b))] != value[a]:
                ok = False
        for a, b, c in triples:
            if value[lattice_join(lattice_join(a, b), c)] != value[
                lattice_join(a, lattice_join(b, c))
            ]:
                ok = False
            if value[lattice_meet(lattice_meet(a, b), c)] != value[
                lattice_meet(a, lattice_meet(b, c))
            ]:
                ok = False
        if not report.record("membership-identities", ok, str(inf)):
            break
    report.notes["sampled"] = decided

    if universe is not None:
        _star_lattice_checks(report, family, universe, atom_cap)
    return report


def _star_lattice_checks(
    report: Report, family: LatticeFamily, u: Universe, atom_cap: int
) -> None:
    ss_star = star_set(family.ss, u, atom_cap)
    tt_star = star_set(family.tt, u, atom_cap)
    st_star = star_set(family.st, u, atom_cap)
    cl_star = classical_star_set(u, atom_cap)
    report.record(
        "star-union-equals-st-star", ss_star | tt_star == st_star,
        f"|ss*|={len(ss_star)} |tt*|={len(tt_star)} |st*|={len(st_star)}",
    )
    report.record("st-star-equals-classical-star", st_star == cl_star, "")

    ts_logic = LogicSpec(family.st.scheme, TS)
    ts_star = star_set(ts_logic, u, atom_cap)
    report.record("ts-star-empty", ts_star == frozenset(), f"|ts*|={len(ts_star)}")
    report.record(
        "ts-star-equals-td-of-empty",
        ts_star == dual_transitive_closure(frozenset(), u),
        "dual route through the interior operator",
    )
    meet_star = ss_star & tt_star
    report.record(
        "td-of-star-meet-empty",
        dual_transitive_closure(meet_star, u) == frozenset(),
        f"|ss* & tt*|={len(meet_star)}",
    )
    for name, star in (("ss*", ss_star), ("tt*", tt_star), ("union*", ss_star | tt_star)):
        report.record(
            f"td-fixes-{name}",
            dual_transitive_closure(star, u) == star,
            "star sets are open under the dual closure",
        )

    star_sets = {
        "ts*": ts_star,
        "ss*": ss_star,
        "tt*": tt_star,
        "union*": ss_star | tt_star,
    }
    for name_a, a in star_sets.items():
        for name_b, b in star_sets.items():
            included = a <= b
            fixed = dual_transitive_closure(a & b, u) == a
            report.record(
                "star-order-vs-meet",
                included == fixed,
                f"{name_a} vs {name_b}",
            )

    p, q = Var("p"), Var("q")
    example = Inference((And(p, Neg(p)),), Or(q, Neg(q)))
    in_ss = antitheorem_in_all((family.ss,), example.premises, atom_cap)
    in_tt = theorem_in_all((family.tt,), example.conclusion, atom_cap)
    report.record("contradiction-to-tautology-in-star-meet", in_ss and in_tt, str(example))
    ts_theorem = theorem_in_all((ts_logic,), example.conclusion, atom_cap)
    ts_antith = antitheorem_in_all((ts_logic,), example.premises, atom_cap)
    report.record("contradiction-to-tautology-not-in-ts-star", not (ts_theorem or ts_antith), str(example))

    explosionish = Inference((And(p, Neg(p)),), q)
    lem_ish = Inference((p,), Or(q, Neg(q)))
    report.record(
        "star-incomparability",
        antitheorem_in_all((family.ss,), explosionish.premises, atom_cap)
        and not theorem_in_all((family.tt,), explosionish.conclusion, atom_cap)
        and not antitheorem_in_all((family.tt,), explosionish.premises, atom_cap)
        and theorem_in_all((family.tt,), lem_ish.conclusion, atom_cap)
        and not antitheorem_in_all((family.ss,), lem_ish.premises, atom_cap)
        and not theorem_in_all((family.ss,), lem_ish.conclusion, atom_cap),
        "explosion-style vs excluded-middle-style witnesses",
    )
