"""Valuations, standards of evaluation, and validity.

A valuation assigns one of the three truth values to each atom of a
declared finite atom set; formulas are evaluated by recursion through a
scheme's tables.  A formula-standard is the set of values that count as
satisfying a single formula (strict = {1}, tolerant = {1, i}); a standard
pairs a premise formula-standard with a conclusion formula-standard.  An
inference is satisfied by a valuation when, if every premise meets the
premise standard, the conclusion meets the conclusion standard; it is
valid under a (scheme, standard) pair when every valuation satisfies it.

Because evaluation is truth-functional, validity is decided by enumerating
the valuations over the atoms of the inference only.  Valuations are
ordered canonically: atoms sorted by name, value tuples ordered
lexicographically with 0 < i < 1, so the all-0 valuation comes first and
counterexample search is deterministic.

Classical validity is decided by a separate two-valued evaluator (plain
Boolean operations, no scheme tables); it serves as the independent
reference point for the collapse results checked in :mod:`.verification`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from .errors import MissingAtomError, ResourceLimitError
from .formula import And, Formula, Inference, Neg, Or, Var, atoms
from .scheme import I, Scheme, T, TruthValue, is_bnm

DEFAULT_ATOM_CAP = 12


@dataclass(frozen=True, slots=True)
class Valuation:
    """A total assignment of truth values to a declared finite atom set."""

    items: tuple[tuple[str, TruthValue], ...]

    @classmethod
    def of(cls, mapping: dict[str, TruthValue] | Iterable[tuple[str, TruthValue]]) -> "Valuation":
        pairs = dict(mapping)
        return cls(tuple(sorted(pairs.items())))

    @property
    def declared_atoms(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.items)

    def value(self, name: str) -> TruthValue:
        for key, val in self.items:
            if key == name:
                return val
        raise MissingAtomError(name)

    def __getitem__(self, name: str) -> TruthValue:
        return self.value(name)

    def as_dict(self) -> dict[str, TruthValue]:
        return dict(self.items)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}={v.symbol}" for k, v in self.items) + "}"


@dataclass(frozen=True, slots=True)
class FormulaStandard:
    """The set of truth values that satisfy a single formula."""

    allowed: frozenset[TruthValue]

    def accepts(self, value: TruthValue) -> bool:
        return value in self.allowed

    @property
    def text(self) -> str:
        return "".join(v.symbol for v in sorted(self.allowed)) or "-"

    def __str__(self) -> str:
        return self.text


STRICT = FormulaStandard(frozenset({T}))
TOLERANT = FormulaStandard(frozenset({T, I}))


@dataclass(frozen=True, slots=True)
class Standard:
    """A premise formula-standard paired with a conclusion formula-standard."""

    premise: FormulaStandard
    conclusion: FormulaStandard

    @property
    def name(self) -> str:
        named = _STANDARD_NAMES.get(self)
        return named if named is not None else f"{self.premise.text}:{self.conclusion.text}"

    def __str__(self) -> str:
        return self.name


SS = Standard(STRICT, STRICT)
TT = Standard(TOLERANT, TOLERANT)
ST = Standard(STRICT, TOLERANT)
TS = Standard(TOLERANT, STRICT)

_STANDARD_NAMES = {SS: "ss", TT: "tt", ST: "st", TS: "ts"}
_NAMED_STANDARDS = {"ss": SS, "tt": TT, "st": ST, "ts": TS}


def parse_formula_standard(text: str) -> FormulaStandard:
    values = set()
    body = text.strip()
    if body == "-":
        body = ""
    for ch in body:
        values.add(TruthValue.from_symbol(ch))
    return FormulaStandard(frozenset(values))


def parse_standard(text: str) -> Standard:
    """``ss``/``tt``/``st``/``ts``, or ``X:Y`` with X, Y strings over 0, i, 1."""
    body = text.strip()
    if body in _NAMED_STANDARDS:
        return _NAMED_STANDARDS[body]
    if ":" not in body:
        raise ValueError(
            f"unknown standard {text!r}; expected ss/tt/st/ts or <premise>:<conclusion>"
        )
    left, _, right = body.partition(":")
    return Standard(parse_formula_standard(left), parse_formula_standard(right))


@dataclass(frozen=True, slots=True)
class LogicSpec:
    """A scheme together with a standard: a membership decider for inferences.

    Schemes are required to be Boolean normal and monotonic unless the
    instance is constructed with ``allow_non_bnm=True``.
    """

    scheme: Scheme
    standard: Standard
    label: str | None = field(default=None, compare=False)
    allow_non_bnm: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not self.allow_non_bnm and not is_bnm(self.scheme):
            raise ValueError(
                "scheme is not Boolean normal monotonic; pass allow_non_bnm=True to override"
            )

    def __str__(self) -> str:
        return self.label or f"{self.scheme}/{self.standard}"


Logics = Union[LogicSpec, Sequence[LogicSpec]]


def as_logic_tuple(logics: Logics) -> tuple[LogicSpec, ...]:
    """Normalize a single logic or a sequence (read as intersection) to a tuple."""
    if isinstance(logics, LogicSpec):
        return (logics,)
    out = tuple(logics)
    if not out:
        raise ValueError("at least one logic is required")
    return out


# --- single-point evaluation ---------------------------------------------

def eval_formula(scheme: Scheme, valuation: Valuation, f: Formula) -> TruthValue:
    """Evaluate a formula by recursive table application."""
    if isinstance(f, Var):
        return valuation.value(f.name)
    if isinstance(f, Neg):
        return scheme.neg(eval_formula(scheme, valuation, f.child))
    if isinstance(f, And):
        return scheme.conj(
            eval_formula(scheme, valuation, f.left),
            eval_formula(scheme, valuation, f.right),
        )
    return scheme.disj(
        eval_formula(scheme, valuation, f.left),
        eval_formula(scheme, valuation, f.right),
    )


def satisfies_formula(
    scheme: Scheme, valuation: Valuation, f: Formula, standard: FormulaStandard
) -> bool:
    return standard.accepts(eval_formula(scheme, valuation, f))


def satisfies_inference(
    scheme: Scheme, valuation: Valuation, inf: Inference, standard: Standard
) -> bool:
    """Material reading: all premises up to the premise standard force the
    conclusion up to the conclusion standard."""
    if all(satisfies_formula(scheme, valuation, g, standard.premise) for g in inf.premises):
        return satisfies_formula(scheme, valuation, inf.conclusion, standard.conclusion)
    return True


# --- canonical valuation space -------------------------------------------

def sorted_atom_tuple(x: Formula | Inference | Iterable[str]) -> tuple[str, ...]:
    if isinstance(x, (Var, Neg, And, Or, Inference)):
        return tuple(sorted(atoms(x)))
    return tuple(sorted(set(x)))


def valuation_count(names: Sequence[str]) -> int:
    return 3 ** len(names)


def valuation_at(names: Sequence[str], index: int) -> Valuation:
    """The index-th valuation in canonical order (names sorted, 0 < i < 1)."""
    values = []
    remaining = index
    for position in range(len(names) - 1, -1, -1):
        values.append(TruthValue(remaining % 3))
        remaining //= 3
    values.reverse()
    return Valuation(tuple(zip(names, values)))


def all_valuations(names: Iterable[str]) -> Iterator[Valuation]:
    ordered = sorted_atom_tuple(names)
    for index in range(valuation_count(ordered)):
        yield valuation_at(ordered, index)


def _check_atom_cap(names: Sequence[str], atom_cap: int) -> None:
    if len(names) > atom_cap:
        raise ResourceLimitError(
            f"valuation space ranges over {len(names)} atoms, above the cap of {atom_cap}"
        )


# --- vectorized evaluation over the whole valuation space -----------------
#
# The truth vector of a formula lists its value (as a byte 0/1/2) at every
# valuation over a fixed atom tuple, in canonical order.  Connectives act
# bytewise: negation is a translate, and the binary tables are looked up by
# the pair code 3*left + right, computed carry-free by big-int addition.

@lru_cache(maxsize=None)
def _translate_unary(table: tuple) -> bytes:
    return bytes(table[v] if v < 3 else 0 for v in range(256))


@lru_cache(maxsize=None)
def _translate_pair(table: tuple) -> bytes:
    return bytes(table[v] if v < 9 else 0 for v in range(256))


_TRIPLE = _translate_unary((0, 3, 6))


def _combine(left: bytes, right: bytes, table: tuple) -> bytes:
    paired = int.from_bytes(left.translate(_TRIPLE), "big") + int.from_bytes(right, "big")
    return paired.to_bytes(len(left), "big").translate(_translate_pair(table))


@lru_cache(maxsize=None)
def _var_vector(names: tuple[str, ...], name: str) -> bytes:
    position = names.index(name)
    period = 3 ** (len(names) - 1 - position)
    cycle = b"\x00" * period + b"\x01" * period + b"\x02" * period
    return cycle * (3 ** position)


@lru_cache(maxsize=None)
def truth_vector(scheme: Scheme, f: Formula, names: tuple[str, ...]) -> bytes:
    """Values of ``f`` at every valuation over ``names`` in canonical order."""
    if isinstance(f, Var):
        if f.name not in names:
            raise MissingAtomError(f.name)
        return _var_vector(names, f.name)
    if isinstance(f, Neg):
        return truth_vector(scheme, f.child, names).translate(
            _translate_unary(scheme.neg_table)
        )
    table = scheme.conj_table if isinstance(f, And) else scheme.disj_table
    return _combine(
        truth_vector(scheme, f.left, names),
        truth_vector(scheme, f.right, names),
        table,
    )


@lru_cache(maxsize=None)
def _accept_table(standard: FormulaStandard) -> bytes:
    return bytes(1 if v < 3 and TruthValue(v) in standard.allowed else 0 for v in range(256))


_FLIP01 = bytes(1 - v if v < 2 else 0 for v in range(256))


def _violation_int(
    logic: LogicSpec, inf: Inference, names: tuple[str, ...]
) -> int:
    """Bitmap (one byte per valuation) of valuations falsifying the inference."""
    size = valuation_count(names)
    premises_ok = (1 << (8 * size)) // 255  # 0x0101...01: all-ones bytewise
    accept_premise = _accept_table(logic.standard.premise)
    for g in inf.premises:
        vec = truth_vector(logic.scheme, g, names).translate(accept_premise)
        premises_ok &= int.from_bytes(vec, "big")
    conclusion_bad = truth_vector(logic.scheme, inf.conclusion, names).translate(
        _accept_table(logic.standard.conclusion)
    ).translate(_FLIP01)
    return premises_ok & int.from_bytes(conclusion_bad, "big")


def is_valid(logic: LogicSpec, inf: Inference, atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    """Validity decided over all valuations of the inference's own atoms."""
    names = sorted_atom_tuple(inf)
    _check_atom_cap(names, atom_cap)
    return _violation_int(logic, inf, names) == 0


def find_countervaluation(
    logic: LogicSpec, inf: Inference, atom_cap: int = DEFAULT_ATOM_CAP
) -> Valuation | None:
    """The canonically first valuation falsifying the inference, if any."""
    names = sorted_atom_tuple(inf)
    _check_atom_cap(names, atom_cap)
    violations = _violation_int(logic, inf, names)
    if violations == 0:
        return None
    data = violations.to_bytes(valuation_count(names), "big")
    index = next(i for i, byte in enumerate(data) if byte)
    return valuation_at(names, index)


def is_theorem(logic: LogicSpec, f: Formula, atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    """Does the formula meet the conclusion standard under every valuation?"""
    names = sorted_atom_tuple(f)
    _check_atom_cap(names, atom_cap)
    vec = truth_vector(logic.scheme, f, names).translate(
        _accept_table(logic.standard.conclusion)
    )
    return all(b == 1 for b in vec)


def is_antitheorem(
    logic: LogicSpec, gamma: Iterable[Formula], atom_cap: int = DEFAULT_ATOM_CAP
) -> bool:
    """Does every valuation drop some member below the premise standard?"""
    members = list(gamma)
    names = sorted_atom_tuple(n for g in members for n in atoms(g))
    if not members:
        return False
    if not names:
        return False
    _check_atom_cap(names, atom_cap)
    size = valuation_count(names)
    all_ok = (1 << (8 * size)) // 255
    accept = _accept_table(logic.standard.premise)
    for g in members:
        vec = truth_vector(logic.scheme, g, names).translate(accept)
        all_ok &= int.from_bytes(vec, "big")
        if all_ok == 0:
            return True
    return all_ok == 0


def valid_in_all(logics: Logics, inf: Inference, atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    return all(is_valid(logic, inf, atom_cap) for logic in as_logic_tuple(logics))


def theorem_in_all(logics: Logics, f: Formula, atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    return all(is_theorem(logic, f, atom_cap) for logic in as_logic_tuple(logics))


def antitheorem_in_all(
    logics: Logics, gamma: Iterable[Formula], atom_cap: int = DEFAULT_ATOM_CAP
) -> bool:
    members = list(gamma)
    return all(is_antitheorem(logic, members, atom_cap) for logic in as_logic_tuple(logics))


# --- classical (two-valued) validity --------------------------------------

@lru_cache(maxsize=None)
def _bool_var_vector(names: tuple[str, ...], name: str) -> bytes:
    position = names.index(name)
    period = 2 ** (len(names) - 1 - position)
    cycle = b"\x00" * period + b"\x01" * period
    return cycle * (2 ** position)


@lru_cache(maxsize=None)
def bool_vector(f: Formula, names: tuple[str, ...]) -> bytes:
    """Classical truth table of ``f`` (bytes 0/1) over two-valued valuations,
    in canonical order (names sorted, False < True)."""
    if isinstance(f, Var):
        if f.name not in names:
            raise MissingAtomError(f.name)
        return _bool_var_vector(names, f.name)
    if isinstance(f, Neg):
        return bool_vector(f.child, names).translate(_FLIP01)
    left = int.from_bytes(bool_vector(f.left, names), "big")
    right = int.from_bytes(bool_vector(f.right, names), "big")
    combined = (left & right) if isinstance(f, And) else (left | right)
    return combined.to_bytes(2 ** len(names), "big")


def is_classically_valid(inf: Inference, atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    """Validity over all two-valued Boolean valuations."""
    names = sorted_atom_tuple(inf)
    _check_atom_cap(names, atom_cap)
    size = 2 ** len(names)
    premises_ok = (1 << (8 * size)) // 255
    for g in inf.premises:
        premises_ok &= int.from_bytes(bool_vector(g, names), "big")
    conclusion_bad = int.from_bytes(
        bool_vector(inf.conclusion, names).translate(_FLIP01), "big"
    )
    return premises_ok & conclusion_bad == 0


def is_classical_tautology(f: Formula, atom_cap: int = DEFAULT_ATOM_CAP) -> bool:
    names = sorted_atom_tuple(f)
    _check_atom_cap(names, atom_cap)
    return all(b == 1 for b in bool_vector(f, names))


def is_classically_unsatisfiable(
    gamma: Iterable[Formula], atom_cap: int = DEFAULT_ATOM_CAP
) -> bool:
    members = list(gamma)
    if not members:
        return False
    names = sorted_atom_tuple(n for g in members for n in atoms(g))
    _check_atom_cap(names, atom_cap)
    size = 2 ** len(names)
    all_ok = (1 << (8 * size)) // 255
    for g in members:
        all_ok &= int.from_bytes(bool_vector(g, names), "big")
    return all_ok == 0
