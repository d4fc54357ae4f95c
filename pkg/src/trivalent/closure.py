"""Bounded inference universes and the closure operators over them.

The closure operators of interest act on *sets of inferences*:

* transitive closure: the least superset closed under cut with an
  arbitrary nonempty set of intermediate formulas (if Delta => phi is in
  the set and Gamma => delta is in the set for every delta in Delta, then
  Gamma => phi is in the set);
* dual transitive closure: the greatest subset whose complement is closed
  under the same rule (computed here via that complement identity, with an
  independent direct greatest-fixpoint implementation kept alongside for
  cross-checking);
* Tarskian closure: the least superset closed under reflexivity,
  premise monotonicity, the cut rule, and substitution.

The unrestricted operators act on an infinite inference space and are not
computable, so everything here is *relative to a universe*: a finite,
explicitly listed formula pool with a premise-size cap, optionally with
designated "reserve" atoms that enter the pool only as bare atomic
formulas and stand in for fresh variables.  Results are exact within the
universe; callers comparing against unrestricted claims must pick
universes large enough to express the derivations they care about.

A technical point the implementation relies on: the cut rule can only ever
add an inference Gamma => phi when Gamma already appears as the premise
set of some member (the rule requires Gamma => delta in the set for all
delta in a nonempty Delta).  The transitive closure of a base therefore
lives entirely on the base's own premise sets and conclusions, so the
saturation below never materializes the universe; the universe is needed
only to validate membership, and for the complement step of the dual
operator.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import ResourceLimitError
from .formula import (
    Formula,
    Inference,
    Var,
    atoms,
    enumerate_formulas,
    inference_key,
    iter_subsets,
    substitute,
    substitute_inference,
)
from .report import Report

InferenceSet = frozenset[Inference]

DEFAULT_UNIVERSE_CAP = 500_000
DEFAULT_SUBSTITUTION_CAP = 300_000


@dataclass(frozen=True, slots=True)
class Universe:
    """A finite formula pool with a premise-size cap and reserve atoms.

    All inferences drawn from the universe take their premises (at most
    ``premise_cap`` of them) and their conclusion from ``formulas``.
    Reserve atoms mark formulas acting as fresh variables; checks that
    need a fresh atom restrict their comparisons to inferences avoiding
    them (see :mod:`.characterize`).
    """

    formulas: tuple[Formula, ...]
    premise_cap: int
    reserve_atoms: frozenset[str]
    _hash: int = field(init=False, repr=False, compare=False)

    def __init__(
        self,
        formulas: Iterable[Formula],
        premise_cap: int,
        reserve_atoms: Iterable[str] = (),
    ):
        seen: dict[Formula, None] = {}
        for f in formulas:
            seen.setdefault(f, None)
        pool = tuple(seen)
        if not pool:
            raise ValueError("universe requires a nonempty formula pool")
        if premise_cap < 1:
            raise ValueError("premise_cap must be >= 1")
        reserve = frozenset(reserve_atoms)
        occurring = set()
        for f in pool:
            occurring |= atoms(f)
        stray = reserve - occurring
        if stray:
            raise ValueError(f"reserve atoms not occurring in any formula: {sorted(stray)}")
        object.__setattr__(self, "formulas", pool)
        object.__setattr__(self, "premise_cap", premise_cap)
        object.__setattr__(self, "reserve_atoms", reserve)
        object.__setattr__(self, "_hash", hash((pool, premise_cap, reserve)))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def build(
        cls,
        atom_names: Iterable[str],
        depth: int,
        premise_cap: int,
        reserve: Iterable[str] = (),
        max_formulas: int = DEFAULT_UNIVERSE_CAP,
    ) -> "Universe":
        """Enumerate all formulas over ``atom_names`` up to ``depth`` and add
        each reserve atom as a bare atomic formula.

        Keeping reserve atoms out of the depth enumeration keeps the pool
        small and matches their role: a fresh variable is only ever used
        bare, as an intermediate step of a cut.
        """
        base_atoms = sorted(set(atom_names))
        reserve_list = sorted(set(reserve))
        overlap = set(base_atoms) & set(reserve_list)
        if overlap:
            raise ValueError(f"reserve atoms must be distinct from base atoms: {sorted(overlap)}")
        pool = list(enumerate_formulas(base_atoms, depth, max_formulas))
        pool.extend(Var(name) for name in reserve_list)
        return cls(pool, premise_cap, reserve_list)

    @property
    def formula_set(self) -> frozenset[Formula]:
        return _formula_set(self)

    def atom_names(self) -> tuple[str, ...]:
        names: set[str] = set()
        for f in self.formulas:
            names |= atoms(f)
        return tuple(sorted(names))

    def contains(self, inf: Inference) -> bool:
        pool = self.formula_set
        return (
            len(inf.premises) <= self.premise_cap
            and inf.conclusion in pool
            and inf.premises <= pool
        )

    def is_reserve_free(self, inf: Inference) -> bool:
        return not (atoms(inf) & self.reserve_atoms)

    def premise_set_count(self) -> int:
        n = len(self.formulas)
        return sum(math.comb(n, j) for j in range(min(self.premise_cap, n) + 1))

    def inference_count(self) -> int:
        return len(self.formulas) * self.premise_set_count()

    def describe(self) -> str:
        return (
            f"{len(self.formulas)} formulas, premise cap {self.premise_cap}, "
            f"reserve {sorted(self.reserve_atoms) or '-'}"
        )


@lru_cache(maxsize=None)
def _formula_set(u: Universe) -> frozenset[Formula]:
    return frozenset(u.formulas)


@lru_cache(maxsize=None)
def _premise_sets(u: Universe) -> tuple[frozenset[Formula], ...]:
    return tuple(
        frozenset(subset) for subset in iter_subsets(list(u.formulas), u.premise_cap)
    )


@lru_cache(maxsize=None)
def _all_inferences(u: Universe) -> tuple[Inference, ...]:
    return tuple(
        Inference(premises, conclusion)
        for premises in _premise_sets(u)
        for conclusion in u.formulas
    )


def universe_inferences(u: Universe, max_count: int = DEFAULT_UNIVERSE_CAP) -> InferenceSet:
    """Every inference expressible in the universe."""
    count = u.inference_count()
    if count > max_count:
        raise ResourceLimitError(
            f"universe holds {count} inferences, above the cap of {max_count}"
        )
    return frozenset(_all_inferences(u))


def ordered_inferences(u: Universe, max_count: int = DEFAULT_UNIVERSE_CAP) -> list[Inference]:
    """Universe inferences in canonical order: premise sets smallest first
    (combination order over the formula pool), then conclusions in pool order."""
    count = u.inference_count()
    if count > max_count:
        raise ResourceLimitError(
            f"universe holds {count} inferences, above the cap of {max_count}"
        )
    return list(_all_inferences(u))


def _require_in_universe(base: Iterable[Inference], u: Universe) -> set[Inference]:
    out = set(base)
    for inf in out:
        if not u.contains(inf):
            raise ValueError(f"inference not in universe: {inf}")
    return out


def _saturate_cut(concl: dict[frozenset[Formula], set[Formula]]) -> None:
    """In-place cut saturation: concl maps each premise set to the set of
    conclusions derivable from it.  Fixpoint is the least one; the loop is
    order-insensitive because the rule is monotone."""
    keys = list(concl)
    deltas = [k for k in keys if k]
    changed = True
    while changed:
        changed = False
        for gamma in keys:
            derivable = concl[gamma]
            for delta in deltas:
                if delta <= derivable:
                    extra = concl[delta]
                    if not extra <= derivable:
                        derivable |= extra
                        changed = True


def _concl_index(members: Iterable[Inference]) -> dict[frozenset[Formula], set[Formula]]:
    concl: dict[frozenset[Formula], set[Formula]] = {}
    for inf in members:
        concl.setdefault(inf.premises, set()).add(inf.conclusion)
    return concl


def _from_concl_index(concl: Mapping[frozenset[Formula], set[Formula]]) -> InferenceSet:
    return frozenset(
        Inference(premises, c) for premises, cs in concl.items() for c in cs
    )


def transitive_closure(base: Iterable[Inference], u: Universe) -> InferenceSet:
    """Least superset of ``base`` closed under the cut rule.

    The result stays within the universe automatically: cut never
    introduces a premise set or conclusion that the base did not already
    use.
    """
    members = _require_in_universe(base, u)
    concl = _concl_index(members)
    _saturate_cut(concl)
    return _from_concl_index(concl)


def dual_transitive_closure(
    base: Iterable[Inference], u: Universe, max_count: int = DEFAULT_UNIVERSE_CAP
) -> InferenceSet:
    """Greatest subset of ``base`` whose relative complement is cut-closed.

    Computed through the complement identity: take the complement of the
    transitive closure of the complement of ``base``, both relative to the
    universe.
    """
    members = _require_in_universe(base, u)
    everything = universe_inferences(u, max_count)
    complement_closed = transitive_closure(everything - members, u)
    return frozenset(members - complement_closed)


def dual_transitive_closure_direct(
    base: Iterable[Inference], u: Universe
) -> InferenceSet:
    """Reference implementation of the dual closure as a greatest fixpoint.

    Repeatedly removes any member Gamma => phi for which some nonempty
    premise-capped Delta has Delta => phi outside the set and Gamma =>
    delta outside the set for every delta in Delta.  Kept independent of
    :func:`dual_transitive_closure` so the two can be played against each
    other in the operator-law checks.
    """
    empty: frozenset[Formula] = frozenset()
    members = _require_in_universe(base, u)
    deltas = [d for d in _premise_sets(u) if d]
    concl = _concl_index(members)
    changed = True
    while changed:
        changed = False
        for inf in sorted(members, key=inference_key):
            if inf not in members:
                continue
            gamma_derives = concl[inf.premises]
            for delta in deltas:
                if delta & gamma_derives:
                    continue
                if inf.conclusion not in concl.get(delta, empty):
                    members.remove(inf)
                    gamma_derives.remove(inf.conclusion)
                    if not gamma_derives:
                        del concl[inf.premises]
                    changed = True
                    break
    return frozenset(members)


@lru_cache(maxsize=None)
def universe_preserving_substitutions(
    u: Universe, max_candidates: int = DEFAULT_SUBSTITUTION_CAP
) -> tuple[dict, ...]:
    """All substitutions on the universe's atoms mapping every pool formula
    back into the pool.  Unrestricted substitution escapes any finite pool,
    so the Tarskian closure below applies exactly these."""
    names = u.atom_names()
    candidate_count = len(u.formulas) ** len(names)
    if candidate_count > max_candidates:
        raise ResourceLimitError(
            f"substitution search space has {candidate_count} candidates, "
            f"above the cap of {max_candidates}"
        )
    pool = u.formula_set
    found: list[dict] = []
    for images in itertools.product(u.formulas, repeat=len(names)):
        sigma = dict(zip(names, images))
        if all(substitute(f, sigma) in pool for f in u.formulas):
            found.append(sigma)
    return tuple(found)


def tarskian_closure(
    base: Iterable[Inference], u: Universe, max_count: int = DEFAULT_UNIVERSE_CAP
) -> InferenceSet:
    """Least superset of ``base`` within the universe closed under
    reflexivity, premise monotonicity (up to the cap), cut, and
    universe-preserving substitution."""
    if u.inference_count() > max_count:
        raise ResourceLimitError(
            f"universe holds {u.inference_count()} inferences, above the cap of {max_count}"
        )
    members = _require_in_universe(base, u)
    for f in u.formulas:
        members.add(Inference((f,), f))
    substitutions = universe_preserving_substitutions(u)
    pool = u.formulas
    while True:
        added: set[Inference] = set()
        for inf in members:
            if len(inf.premises) < u.premise_cap:
                for f in pool:
                    if f not in inf.premises:
                        widened = Inference(inf.premises | {f}, inf.conclusion)
                        if widened not in members:
                            added.add(widened)
            for sigma in substitutions:
                image = substitute_inference(inf, sigma)
                if image not in members:
                    added.add(image)
        concl = _concl_index(members)
        _saturate_cut(concl)
        for premises, cs in concl.items():
            for c in cs:
                inf = Inference(premises, c)
                if inf not in members:
                    added.add(inf)
        if not added:
            return frozenset(members)
        members |= added


def check_operator_laws(
    samples: Iterable[tuple[Iterable[Inference], Universe]],
    check_direct_duality: bool = True,
) -> Report:
    """Check the closure laws of the transitive operator, the interior laws
    of its dual, and the two complement identities, on every sample.

    Monotonicity is exercised by comparing each sample against its
    intersection and union with the next sample over the same universe.
    The complement identities are checked against the independent direct
    fixpoint implementation (``check_direct_duality=False`` skips the
    costlier second identity on large universes).
    """
    report = Report("operator-laws")
    normalized = [(frozenset(xs), u) for xs, u in samples]
    for position, (xs, u) in enumerate(normalized):
        label = f"sample {position}"
        everything = universe_inferences(u)
        t_xs = transitive_closure(xs, u)
        report.record("t-extensive", xs <= t_xs, label)
        report.record("t-idempotent", transitive_closure(t_xs, u) == t_xs, label)
        td_xs = dual_transitive_closure(xs, u)
        report.record("td-contractive", td_xs <= xs, label)
        report.record(
            "td-idempotent", dual_transitive_closure(td_xs, u) == td_xs, label
        )
        partner = next(
            (ys for ys, v in normalized[position + 1:] if v == u), None
        )
        if partner is not None:
            smaller, larger = xs & partner, xs | partner
            report.record(
                "t-monotone",
                transitive_closure(smaller, u) <= t_xs
                and t_xs <= transitive_closure(larger, u),
                label,
            )
            report.record(
                "td-monotone",
                dual_transitive_closure(smaller, u) <= td_xs
                and td_xs <= dual_transitive_closure(larger, u),
                label,
            )
        direct = dual_transitive_closure_direct(xs, u)
        report.record("duality-td-from-t", direct == td_xs, label)
        if check_direct_duality:
            report.record(
                "duality-t-from-td",
                t_xs == everything - dual_transitive_closure_direct(everything - xs, u),
                label,
            )
    return report
