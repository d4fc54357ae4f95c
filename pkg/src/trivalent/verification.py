"""The desk-scale verification suite.

Each claim function checks one of the package's headline results over
seeded corpora and micro-universes, returning a structured report.  The
suite is what ``trivalent verify`` runs; the test suite drives the same
functions with the same default sizes.

Claim names follow the package's own numbered result list (see README):

* theorem1 - strict-tolerant validity coincides with classical validity
  for every BNM scheme;
* theorem2 - tolerant-strict validity is empty, with the all-middle
  valuation as a uniform countervaluation;
* theorem3 - the ss/tt union falls strictly short of classical validity;
* theorem4 - cut closure of the ss/tt union recovers classical validity,
  via explicit two-step derivations over arbitrary scheme pairs;
* theorem5 - the dual cut closure of the ss/tt intersection is empty;
* prop2 - the dual closure of a validity set keeps exactly its star set
  (antitheorem premises or theorem conclusions);
* prop3 - for cut-closed, reflexive, monotone, substitution-closed sets,
  full Tarskian closure of a union adds nothing beyond cut closure;
* plus scheme enumeration, operator laws, the antitheorem/theorem
  equivalences, non-reflexivity of the dual closure, and the two lattices.

Sampling is reproducible: the random corpus is drawn from a
``random.Random(seed)`` stream (formulas over atoms p, q, r with depth at
most 3, premise counts at most 3), and each claim that samples further
gets its own stream seeded from (seed, claim name), so ``--only``
selections see the same draws as a full run.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from .closure import (
    Universe,
    check_operator_laws,
    dual_transitive_closure,
    ordered_inferences,
    tarskian_closure,
    transitive_closure,
)
from .characterize import (
    LatticeFamily,
    check_td_equals_star,
    check_ts_collapse,
    check_union_gap,
    derive_classical,
    replay_witness,
    valid_subset,
    verify_lattices,
)
from .formula import (
    And,
    Formula,
    Inference,
    Neg,
    Or,
    Var,
    atoms,
    enumerate_formulas,
    iter_subsets,
    substitute_inference,
)
from .report import Report
from .scheme import (
    F,
    I,
    Scheme,
    T,
    VALUES,
    enumerate_bnm_schemes,
    info_leq,
    is_boolean_normal,
    is_monotonic,
    preset,
)
from .semantics import (
    LogicSpec,
    SS,
    ST,
    TS,
    TT,
    Standard,
    Valuation,
    eval_formula,
    is_antitheorem,
    is_classically_valid,
    is_theorem,
    is_valid,
    satisfies_inference,
)


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 42
    corpus_size: int = 10_000
    reduced_size: int = 500
    law_samples: int = 100
    lemma_samples: int = 200
    equivalence_samples: int = 60
    all_pairs: bool = True
    atom_cap: int = 12


CORPUS_ATOMS = ("p", "q", "r")


def random_formula(rng: random.Random, names=CORPUS_ATOMS, max_depth: int = 3) -> Formula:
    """Random formula, depth-bounded.  Besides plain connective draws, the
    generator occasionally emits excluded-middle and contradiction units
    (x | ~x, x & ~x), so the corpus reliably contains the tautology-guarded
    and contradiction-guarded shapes the collapse results turn on."""
    if max_depth == 0 or rng.random() < 0.28:
        return Var(rng.choice(names))
    roll = rng.random()
    if max_depth >= 2 and roll < 0.06:
        unit = Var(rng.choice(names))
        return Or(unit, Neg(unit))
    if max_depth >= 2 and roll < 0.12:
        unit = Var(rng.choice(names))
        return And(unit, Neg(unit))
    if roll < 0.40:
        return Neg(random_formula(rng, names, max_depth - 1))
    left = random_formula(rng, names, max_depth - 1)
    right = random_formula(rng, names, max_depth - 1)
    return And(left, right) if roll < 0.70 else Or(left, right)


def random_inference(
    rng: random.Random, names=CORPUS_ATOMS, max_depth: int = 3, max_premises: int = 3
) -> Inference:
    count = rng.randint(0, max_premises)
    premises = [random_formula(rng, names, max_depth) for _ in range(count)]
    return Inference(premises, random_formula(rng, names, max_depth))


def exhaustive_corpus() -> list[Inference]:
    """Every inference over p, q with depth <= 1 and at most two premises."""
    pool = enumerate_formulas(["p", "q"], 1)
    return [
        Inference(premises, conclusion)
        for premises in iter_subsets(pool, 2)
        for conclusion in pool
    ]


class VerificationContext:
    """Shared corpora, universes and caches for one verification run."""

    def __init__(self, config: VerifyConfig):
        self.config = config
        rng = random.Random(config.seed)
        self.corpus_a = exhaustive_corpus()
        self.corpus_b = [random_inference(rng) for _ in range(config.corpus_size)]
        self.reduced = self.corpus_b[: config.reduced_size]
        self.schemes = enumerate_bnm_schemes()
        self.strong = preset("strong")
        self.weak = preset("weak")
        self.middle = preset("middle")
        self.pair_schemes = (
            self.schemes if config.all_pairs else [self.strong, self.weak, self.middle]
        )
        self.micro1 = Universe.build(["p", "q"], 1, 2, reserve=["r"])
        self.micro2 = Universe.build(["p"], 2, 2, reserve=["q"])
        self.law_universes = (
            self.micro1,
            Universe.build(["p"], 1, 2, reserve=["q"]),
        )
        self._classical: dict[Inference, bool] = {}
        self._valid: dict[tuple[LogicSpec, Inference], bool] = {}
        self._logics: dict[tuple[Scheme, Standard], LogicSpec] = {}

    def rng_for(self, claim: str) -> random.Random:
        """A fresh stream per claim, so ``--only`` selections reproduce the
        same draws as a full run."""
        return random.Random(f"{self.config.seed}:{claim}")

    def logic(self, scheme: Scheme, standard: Standard) -> LogicSpec:
        key = (scheme, standard)
        spec = self._logics.get(key)
        if spec is None:
            spec = self._logics[key] = LogicSpec(scheme, standard)
        return spec

    def classical(self, inf: Inference) -> bool:
        cached = self._classical.get(inf)
        if cached is None:
            cached = self._classical[inf] = is_classically_valid(inf, self.config.atom_cap)
        return cached

    def valid(self, logic: LogicSpec, inf: Inference) -> bool:
        key = (logic, inf)
        cached = self._valid.get(key)
        if cached is None:
            cached = self._valid[key] = is_valid(logic, inf, self.config.atom_cap)
        return cached


# --- claims ----------------------------------------------------------------

def _bruteforce_bnm_tables() -> tuple[set, set, set]:
    """Filter every raw table by Boolean normality and monotonicity.

    Returns the surviving (negation, conjunction, disjunction) tables; the
    scheme count is the product of the three sizes.
    """
    unary = set()
    for table in itertools.product(VALUES, repeat=3):
        if table[F] is T and table[T] is F:
            if all(
                info_leq(table[a], table[b])
                for a in VALUES
                for b in VALUES
                if info_leq(a, b)
            ):
                unary.add(table)

    def monotone_binary(table: dict) -> bool:
        for a1 in VALUES:
            for a2 in VALUES:
                for b1 in VALUES:
                    for b2 in VALUES:
                        if info_leq(a1, b1) and info_leq(a2, b2):
                            if not info_leq(table[(a1, a2)], table[(b1, b2)]):
                                return False
        return True

    conj, disj = set(), set()
    for flat in itertools.product(VALUES, repeat=9):
        table = {
            (a, b): flat[3 * a + b] for a in VALUES for b in VALUES
        }
        if not monotone_binary(table):
            continue
        if (
            table[(T, T)] is T
            and table[(T, F)] is F
            and table[(F, T)] is F
            and table[(F, F)] is F
        ):
            conj.add(flat)
        if (
            table[(T, T)] is T
            and table[(T, F)] is T
            and table[(F, T)] is T
            and table[(F, F)] is F
        ):
            disj.add(flat)
    return unary, conj, disj


def claim_scheme_enumeration(ctx: VerificationContext) -> Report:
    report = Report("scheme-enumeration")
    schemes = ctx.schemes
    report.record("count-16", len(schemes) == 16, f"got {len(schemes)}")
    report.record("pairwise-distinct", len(set(schemes)) == 16, "")
    report.record(
        "predicates-hold",
        all(is_boolean_normal(s) and is_monotonic(s) for s in schemes),
        "",
    )

    unary, conj, disj = _bruteforce_bnm_tables()
    report.record(
        "bruteforce-product",
        len(unary) * len(conj) * len(disj) == 16,
        f"{len(unary)} x {len(conj)} x {len(disj)}",
    )
    tables = {(s.neg_table, s.conj_table, s.disj_table) for s in schemes}
    oracle_tables = {
        (n, c, d) for n in unary for c in conj for d in disj
    }
    report.record("bruteforce-same-tables", tables == oracle_tables, "")

    scheme_set = set(schemes)
    for name in ("strong", "weak", "middle"):
        report.record(f"preset-{name}-enumerated", preset(name) in scheme_set, "")

    all_i = Valuation.of({"p": I, "q": I})
    middle_forced = all(
        eval_formula(s, all_i, f) is I
        for s in schemes
        for f in (Neg(Var("p")), And(Var("p"), Var("q")), Or(Var("p"), Var("q")))
    )
    report.record("middle-value-forced", middle_forced, "all-i arguments give i")

    classical_points = [(a, b) for a in (F, T) for b in (F, T)]
    restrictions = {
        (
            tuple(s.neg(a) for a in (F, T)),
            tuple(s.conj(a, b) for a, b in classical_points),
            tuple(s.disj(a, b) for a, b in classical_points),
        )
        for s in schemes
    }
    report.record("two-valued-restrictions-coincide", len(restrictions) == 1, "")
    return report


def claim_theorem1(ctx: VerificationContext) -> Report:
    report = Report("theorem1")
    mismatches = 0
    total = 0
    for corpus_name, corpus in (("exhaustive", ctx.corpus_a), ("random", ctx.corpus_b)):
        for scheme in ctx.schemes:
            st_logic = ctx.logic(scheme, ST)
            for inf in corpus:
                total += 1
                if ctx.valid(st_logic, inf) != ctx.classical(inf):
                    mismatches += 1
                    report.record(
                        "st-equals-classical", False, f"{scheme} on {corpus_name}: {inf}"
                    )
    report.record("st-equals-classical", mismatches == 0, f"{total} comparisons")
    report.notes["comparisons"] = total
    return report


def claim_theorem2(ctx: VerificationContext) -> Report:
    report = Report("theorem2")
    all_i = Valuation.of({name: I for name in CORPUS_ATOMS})
    failures = 0
    total = 0
    for corpus in (ctx.corpus_a, ctx.corpus_b):
        for scheme in ctx.schemes:
            ts_logic = ctx.logic(scheme, TS)
            for inf in corpus:
                total += 1
                ok = not ctx.valid(ts_logic, inf) and not satisfies_inference(
                    scheme, all_i, inf, TS
                )
                if not ok:
                    failures += 1
                    report.record("ts-invalid-with-all-i-witness", False, f"{scheme}: {inf}")
    report.record("ts-invalid-with-all-i-witness", failures == 0, f"{total} inferences")
    report.notes["inferences"] = total
    return report


def claim_theorem3(ctx: VerificationContext) -> Report:
    report = Report("theorem3")
    pair_count = len(ctx.pair_schemes) ** 2
    for ss_scheme in ctx.pair_schemes:
        for tt_scheme in ctx.pair_schemes:
            gap = check_union_gap(
                ctx.logic(ss_scheme, SS), ctx.logic(tt_scheme, TT), ctx.config.atom_cap
            )
            if not gap.passed:
                for finding in gap.failures:
                    report.record("union-gap", False, f"{ss_scheme}/{tt_scheme}: {finding}")
    report.record("union-gap-all-pairs", report.passed, f"{pair_count} scheme pairs")

    missing_pairs = []
    for ss_scheme in ctx.pair_schemes:
        ss_logic = ctx.logic(ss_scheme, SS)
        for tt_scheme in ctx.pair_schemes:
            tt_logic = ctx.logic(tt_scheme, TT)
            separator = next(
                (
                    inf
                    for inf in ctx.corpus_b
                    if ctx.classical(inf)
                    and not ctx.valid(ss_logic, inf)
                    and not ctx.valid(tt_logic, inf)
                ),
                None,
            )
            if separator is None:
                missing_pairs.append(f"{ss_scheme}/{tt_scheme}")
    report.record(
        "corpus-separator-per-pair",
        not missing_pairs,
        f"{len(missing_pairs)} of {pair_count} pairs lack a separator "
        f"(first: {missing_pairs[0]})" if missing_pairs else "",
    )
    report.notes["scheme pairs"] = pair_count
    return report


def claim_theorem4(ctx: VerificationContext) -> Report:
    report = Report("theorem4")
    cap = ctx.config.atom_cap

    reduced_valid = [inf for inf in ctx.reduced if ctx.classical(inf)]
    report.notes["reduced classically valid"] = len(reduced_valid)
    pair_count = len(ctx.pair_schemes) ** 2
    pair_failures = 0
    for tt_scheme in ctx.pair_schemes:
        tt_logic = ctx.logic(tt_scheme, TT)
        for ss_scheme in ctx.pair_schemes:
            ss_logic = ctx.logic(ss_scheme, SS)
            for inf in reduced_valid:
                witness = derive_classical(inf, tt_logic, ss_logic, cap)
                if witness is None or not witness.all_passed or not replay_witness(inf, witness):
                    pair_failures += 1
                    report.record(
                        "two-step-derivation",
                        False,
                        f"tt={tt_scheme} ss={ss_scheme}: {inf}",
                    )
    report.record(
        "two-step-derivation-all-pairs",
        pair_failures == 0,
        f"{pair_count} scheme pairs x {len(reduced_valid)} inferences",
    )

    strong_tt = ctx.logic(ctx.strong, TT)
    strong_ss = ctx.logic(ctx.strong, SS)
    full_failures = 0
    full_valid = 0
    for inf in ctx.corpus_b:
        if not ctx.classical(inf):
            if derive_classical(inf, strong_tt, strong_ss, cap) is not None:
                full_failures += 1
                report.record("derivation-rejects-invalid", False, str(inf))
            continue
        full_valid += 1
        witness = derive_classical(inf, strong_tt, strong_ss, cap)
        if witness is None or not witness.all_passed or not replay_witness(inf, witness):
            full_failures += 1
            report.record("two-step-derivation-full", False, str(inf))
    report.record(
        "two-step-derivation-full-corpus", full_failures == 0, f"{full_valid} valid inferences"
    )

    u = ctx.micro1
    union = valid_subset(strong_ss, u, cap) | valid_subset(strong_tt, u, cap)
    closed = transitive_closure(union, u)
    st_members = valid_subset(ctx.logic(ctx.strong, ST), u, cap)
    report.record(
        "closure-of-union-inside-st",
        closed <= st_members,
        f"|T(union)|={len(closed)} |st members|={len(st_members)}",
    )
    report.notes["micro-universe union"] = len(union)
    report.notes["micro-universe closure"] = len(closed)
    report.notes["micro-universe st members"] = len(st_members)
    return report


def claim_theorem5(ctx: VerificationContext) -> Report:
    report = Report("theorem5")
    assignments = (
        (ctx.logic(ctx.strong, SS), ctx.logic(ctx.strong, TT)),
        (ctx.logic(ctx.weak, SS), ctx.logic(ctx.weak, TT)),
        (ctx.logic(ctx.strong, SS), ctx.logic(ctx.weak, TT)),
    )
    for u in (ctx.micro1, ctx.micro2):
        for ss_logic, tt_logic in assignments:
            result = check_ts_collapse(ss_logic, tt_logic, u, ctx.config.atom_cap)
            report.checks += result.checks
            report.failures.extend(result.failures)
    return report


def claim_prop2(ctx: VerificationContext) -> Report:
    report = Report("prop2")
    assignments = {
        "strong": {
            SS: ctx.logic(ctx.strong, SS),
            TT: ctx.logic(ctx.strong, TT),
            ST: ctx.logic(ctx.strong, ST),
        },
        "weak": {
            SS: ctx.logic(ctx.weak, SS),
            TT: ctx.logic(ctx.weak, TT),
            ST: ctx.logic(ctx.weak, ST),
        },
        "mixed": {
            SS: ctx.logic(ctx.strong, SS),
            TT: ctx.logic(ctx.weak, TT),
            ST: ctx.logic(ctx.middle, ST),
        },
    }
    for u in (ctx.micro1, ctx.micro2):
        for label, logics in assignments.items():
            cases = [
                logics[SS],
                logics[TT],
                (logics[SS], logics[TT]),
                logics[ST],
            ]
            for case in cases:
                result = check_td_equals_star(case, u, ctx.config.atom_cap)
                report.checks += result.checks
                for finding in result.failures:
                    report.record("td-equals-star", False, f"{label}: {finding}")
    return report


def claim_operator_laws(ctx: VerificationContext) -> Report:
    rng = ctx.rng_for("operator-laws")
    samples = []
    for u in ctx.law_universes:
        population = ordered_inferences(u)
        for _ in range(ctx.config.law_samples):
            size = rng.randint(0, min(40, len(population)))
            samples.append((rng.sample(population, size), u))
    return check_operator_laws(samples)


def claim_prop3(ctx: VerificationContext) -> Report:
    report = Report("prop3")
    u = ctx.micro1
    cap = ctx.config.atom_cap
    l1 = valid_subset(ctx.logic(ctx.strong, SS), u, cap)
    l2 = valid_subset(ctx.logic(ctx.strong, TT), u, cap)
    report.record("ss-tarskian-closed", tarskian_closure(l1, u) == l1, f"|ss members|={len(l1)}")
    report.record("tt-tarskian-closed", tarskian_closure(l2, u) == l2, f"|tt members|={len(l2)}")
    union = l1 | l2
    report.record(
        "tarskian-union-is-cut-closure",
        tarskian_closure(union, u) == transitive_closure(union, u),
        f"|union|={len(union)}",
    )
    return report


def claim_lemma1(ctx: VerificationContext) -> Report:
    """Sampled reflexivity, monotonicity, cut and substitution instances."""
    report = Report("lemma1")
    rng = ctx.rng_for("lemma1")
    logic_sets: dict[str, tuple[LogicSpec, ...]] = {
        "ss": (ctx.logic(ctx.strong, SS),),
        "tt": (ctx.logic(ctx.strong, TT),),
        "ss&tt": (ctx.logic(ctx.strong, SS), ctx.logic(ctx.weak, TT)),
        "st": (ctx.logic(ctx.middle, ST),),
    }
    pool = [
        f for inf in ctx.corpus_b[:400] for f in (*inf.sorted_premises(), inf.conclusion)
    ]

    def member(logics, inf):
        return all(ctx.valid(logic, inf) for logic in logics)

    cut_instances = 0
    for name, logics in logic_sets.items():
        for _ in range(ctx.config.lemma_samples):
            f = rng.choice(pool)
            report.record("reflexivity", member(logics, Inference((f,), f)), f"{name}: {f}")

            inf = rng.choice(ctx.corpus_b)
            if not member(logics, inf):
                continue
            widened = Inference(inf.premises | {rng.choice(pool)}, inf.conclusion)
            report.record("monotonicity", member(logics, widened), f"{name}: {widened}")

            if inf.premises:
                extra = rng.choice(pool)
                gamma = inf.premises | {extra}
                if all(member(logics, Inference(gamma, d)) for d in inf.premises):
                    cut_instances += 1
                    report.record(
                        "cut",
                        member(logics, Inference(gamma, inf.conclusion)),
                        f"{name}: {inf} widened by {extra}",
                    )

            sigma = {
                atom_name: random_formula(rng, CORPUS_ATOMS, 1)
                for atom_name in sorted(atoms(inf))
            }
            report.record(
                "structurality",
                member(logics, substitute_inference(inf, sigma)),
                f"{name}: image of {inf}",
            )

    chained = 0
    strong_ss = ctx.logic(ctx.strong, SS)
    for inf in ctx.corpus_b[:2000]:
        if not inf.premises or not ctx.valid(strong_ss, inf):
            continue
        mid = inf.conclusion
        for f in rng.sample(pool, 8):
            step = Inference((mid,), f)
            if ctx.valid(strong_ss, step):
                chained += 1
                report.record(
                    "cut-chained",
                    ctx.valid(strong_ss, Inference(inf.premises, f)),
                    f"{inf} ; {step}",
                )
                break
        if chained >= 50:
            break
    report.record(
        "cut-nonvacuous", cut_instances > 0 and chained > 0, f"{cut_instances}+{chained} instances"
    )
    return report


def claim_facts_45(ctx: VerificationContext) -> Report:
    """Antitheorem and theorem equivalences through a fresh variable."""
    report = Report("facts4-5")
    cap = ctx.config.atom_cap
    rng = ctx.rng_for("facts4-5")
    fresh = Var("s")
    pool = [
        f for inf in ctx.corpus_b[:200] for f in (*inf.sorted_premises(), inf.conclusion)
    ]
    for scheme in ctx.schemes:
        for standard in (SS, TT):
            logic = ctx.logic(scheme, standard)
            for _ in range(ctx.config.equivalence_samples):
                gamma = frozenset(rng.sample(pool, rng.randint(1, 3)))
                antith = is_antitheorem(logic, gamma, cap)
                via_fresh = ctx.valid(logic, Inference(gamma, fresh))
                report.record(
                    "antitheorem-iff-fresh-conclusion",
                    antith == via_fresh,
                    f"{logic}: {sorted(map(str, gamma))}",
                )
                if antith:
                    psi = rng.choice(pool)
                    report.record(
                        "antitheorem-implies-everything",
                        ctx.valid(logic, Inference(gamma, psi)),
                        f"{logic}: {sorted(map(str, gamma))} => {psi}",
                    )

                phi = rng.choice(pool)
                theorem = is_theorem(logic, phi, cap)
                from_fresh = ctx.valid(logic, Inference((fresh,), phi))
                report.record(
                    "theorem-iff-fresh-premise",
                    theorem == from_fresh,
                    f"{logic}: {phi}",
                )
                if theorem:
                    gamma2 = frozenset(rng.sample(pool, rng.randint(0, 3)))
                    report.record(
                        "theorem-follows-from-anything",
                        ctx.valid(logic, Inference(gamma2, phi)),
                        f"{logic}: {phi}",
                    )
    return report


def claim_non_reflexivity(ctx: VerificationContext) -> Report:
    report = Report("non-reflexivity")
    cap = ctx.config.atom_cap
    u = ctx.micro1
    p = Var("p")
    reflexive = Inference((p,), p)
    bases = {
        "ss": valid_subset(ctx.logic(ctx.strong, SS), u, cap),
        "tt": valid_subset(ctx.logic(ctx.strong, TT), u, cap),
        "ss&tt": valid_subset((ctx.logic(ctx.strong, SS), ctx.logic(ctx.strong, TT)), u, cap),
        "st": valid_subset(ctx.logic(ctx.strong, ST), u, cap),
    }
    for name, base in bases.items():
        report.record(f"{name}-contains-p=>p", reflexive in base, "")
        closed = dual_transitive_closure(base, u)
        report.record(
            f"{name}-dual-closure-drops-p=>p", reflexive not in closed, f"|closed|={len(closed)}"
        )
    return report


def claim_lattice(ctx: VerificationContext) -> Report:
    report = Report("lattice")
    families = {
        "strong": LatticeFamily(
            ctx.logic(ctx.strong, SS), ctx.logic(ctx.strong, TT), ctx.logic(ctx.strong, ST)
        ),
        "mixed": LatticeFamily(
            ctx.logic(ctx.weak, SS), ctx.logic(ctx.strong, TT), ctx.logic(ctx.middle, ST)
        ),
    }
    for label, family in families.items():
        result = verify_lattices(family, ctx.corpus_b, None, ctx.config.atom_cap)
        report.checks += result.checks
        for finding in result.failures:
            report.record("lattice-identities", False, f"{label}: {finding}")
    report.record("lattice-identities-both-families", report.passed, f"{len(ctx.corpus_b)} inferences")
    return report


def claim_star_lattice(ctx: VerificationContext) -> Report:
    report = Report("star-lattice")
    strong_family = LatticeFamily(
        ctx.logic(ctx.strong, SS), ctx.logic(ctx.strong, TT), ctx.logic(ctx.strong, ST)
    )
    mixed_family = LatticeFamily(
        ctx.logic(ctx.weak, SS), ctx.logic(ctx.strong, TT), ctx.logic(ctx.middle, ST)
    )
    runs = (
        ("strong", strong_family, ctx.micro1),
        ("strong", strong_family, ctx.micro2),
        ("mixed", mixed_family, ctx.micro1),
    )
    for label, family, u in runs:
        result = verify_lattices(family, (), u, ctx.config.atom_cap)
        report.checks += result.checks
        for finding in result.failures:
            report.record("star-lattice", False, f"{label}/{u.describe()}: {finding}")
    report.record("star-lattice-all-runs", report.passed, "")
    return report


CLAIMS = {
    "scheme-enumeration": claim_scheme_enumeration,
    "theorem1": claim_theorem1,
    "theorem2": claim_theorem2,
    "theorem3": claim_theorem3,
    "theorem4": claim_theorem4,
    "theorem5": claim_theorem5,
    "prop2": claim_prop2,
    "operator-laws": claim_operator_laws,
    "prop3": claim_prop3,
    "lemma1": claim_lemma1,
    "facts4-5": claim_facts_45,
    "non-reflexivity": claim_non_reflexivity,
    "lattice": claim_lattice,
    "star-lattice": claim_star_lattice,
}

CLAIM_ALIASES = {"prop1": "operator-laws", "fact3": "theorem3"}


@dataclass
class ClaimResult:
    claim: str
    report: Report
    runtime_ms: float

    def to_dict(self, include_runtime: bool = True) -> dict:
        out = {
            "claim": self.claim,
            "status": "pass" if self.report.passed else "fail",
            "instances": self.report.checks,
        }
        if self.report.failures:
            out["counterexample"] = str(self.report.failures[0])
            out["failure_count"] = len(self.report.failures)
        if self.report.notes:
            out["notes"] = {k: v for k, v in sorted(self.report.notes.items())}
        if include_runtime:
            out["runtime_ms"] = round(self.runtime_ms, 1)
        return out


def resolve_claims(only: list[str] | None) -> list[str]:
    if not only:
        return list(CLAIMS)
    resolved = []
    for name in only:
        canonical = CLAIM_ALIASES.get(name, name)
        if canonical not in CLAIMS:
            raise ValueError(
                f"unknown claim {name!r}; available: {', '.join(CLAIMS)}"
            )
        resolved.append(canonical)
    return resolved


def run_verification(
    config: VerifyConfig, only: list[str] | None = None
) -> list[ClaimResult]:
    names = resolve_claims(only)
    ctx = VerificationContext(config)
    results = []
    for name in names:
        start = time.perf_counter()
        report = CLAIMS[name](ctx)
        elapsed = (time.perf_counter() - start) * 1000.0
        results.append(ClaimResult(name, report, elapsed))
    return results
