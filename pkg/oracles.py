"""
Independent validity oracles for baselab.
Truth tables for classical logic and a contraction-free sequent calculus
(G4ip) for intuitionistic logic, plus the mapping that lets their verdicts
be compared with base-extension validity.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from errors import TooManyAtoms, UnmappableConnective
from syntax import (
    And, Atom, Bot, Formula, ImpE, ImpI, Oplus, Or, Tensor, Zero, parse_formula,
)

logger = logging.getLogger(__name__)

TRUTH_TABLE_MAX_ATOMS = 20


@dataclass(frozen=True)
class StandardFormula:
    """Textbook propositional formula."""

    def __str__(self):
        return render_standard(self)


@dataclass(frozen=True)
class SAtom(StandardFormula):
    name: str


@dataclass(frozen=True)
class SFalsum(StandardFormula):
    pass


@dataclass(frozen=True)
class SAnd(StandardFormula):
    left: StandardFormula
    right: StandardFormula


@dataclass(frozen=True)
class SOr(StandardFormula):
    left: StandardFormula
    right: StandardFormula


@dataclass(frozen=True)
class SImp(StandardFormula):
    left: StandardFormula
    right: StandardFormula


FALSUM = SFalsum()

_STANDARD_SYMBOLS = {SImp: ("⊃", 1), SOr: ("∨", 2), SAnd: ("∧", 3)}


def render_standard(f: StandardFormula) -> str:
    if isinstance(f, SAtom):
        return f.name
    if isinstance(f, SFalsum):
        return "⊥"
    symbol, level = _STANDARD_SYMBOLS[type(f)]

    def child_level(g):
        return _STANDARD_SYMBOLS[type(g)][1] if type(g) in _STANDARD_SYMBOLS else 4

    left, right = render_standard(f.left), render_standard(f.right)
    if level == 1:
        if child_level(f.left) <= 1:
            left = f"({left})"
    else:
        if child_level(f.left) < level:
            left = f"({left})"
        if child_level(f.right) <= level:
            right = f"({right})"
    return f"{left} {symbol} {right}"


def map_extrinsic(f: Formula) -> StandardFormula:
    """Map ⊸ ⊗ ⊕ 0 ∧ ∨ onto ⊃ ∧ ∨ ⊥ ∧ ∨.

    Raises:
        UnmappableConnective: For → and ⊥, which have no counterpart.
    """
    if isinstance(f, Atom):
        return SAtom(f.name)
    if isinstance(f, Zero):
        return FALSUM
    if isinstance(f, ImpE):
        return SImp(map_extrinsic(f.left), map_extrinsic(f.right))
    if isinstance(f, (Tensor, And)):
        return SAnd(map_extrinsic(f.left), map_extrinsic(f.right))
    if isinstance(f, (Oplus, Or)):
        return SOr(map_extrinsic(f.left), map_extrinsic(f.right))
    if isinstance(f, ImpI):
        raise UnmappableConnective(f"intrinsic implication has no counterpart: {f}")
    if isinstance(f, Bot):
        raise UnmappableConnective("intrinsic falsum ⊥ has no counterpart")
    raise UnmappableConnective(f"unknown connective in {f!r}")


def standard_atoms(f: StandardFormula) -> FrozenSet[str]:
    if isinstance(f, SAtom):
        return frozenset({f.name})
    if isinstance(f, SFalsum):
        return frozenset()
    return standard_atoms(f.left) | standard_atoms(f.right)


def evaluate(f: StandardFormula, valuation: Dict[str, bool]) -> bool:
    if isinstance(f, SAtom):
        return valuation[f.name]
    if isinstance(f, SFalsum):
        return False
    if isinstance(f, SAnd):
        return evaluate(f.left, valuation) and evaluate(f.right, valuation)
    if isinstance(f, SOr):
        return evaluate(f.left, valuation) or evaluate(f.right, valuation)
    return not evaluate(f.left, valuation) or evaluate(f.right, valuation)


def classical_valid(f: StandardFormula) -> bool:
    """Truth-table tautology check.

    Raises:
        TooManyAtoms: Above 20 atoms.
    """
    names = sorted(standard_atoms(f))
    if len(names) > TRUTH_TABLE_MAX_ATOMS:
        raise TooManyAtoms(f"{len(names)} atoms exceed the truth-table limit")
    for values in product((False, True), repeat=len(names)):
        if not evaluate(f, dict(zip(names, values))):
            return False
    return True


@lru_cache(maxsize=1 << 16)
def _provable(gamma: FrozenSet[StandardFormula], goal: StandardFormula) -> bool:
    # Invertible left rules first; a context is saturated once none applies.
    for h in gamma:
        rest = gamma - {h}
        if isinstance(h, SFalsum):
            return True
        if isinstance(h, SAnd):
            return _provable(rest | {h.left, h.right}, goal)
        if isinstance(h, SOr):
            return _provable(rest | {h.left}, goal) and _provable(rest | {h.right}, goal)
        if isinstance(h, SImp):
            a, b = h.left, h.right
            if isinstance(a, SAtom) and a in gamma:
                return _provable(rest | {b}, goal)
            if isinstance(a, SFalsum):
                return _provable(rest, goal)
            if isinstance(a, SAnd):
                return _provable(rest | {SImp(a.left, SImp(a.right, b))}, goal)
            if isinstance(a, SOr):
                return _provable(rest | {SImp(a.left, b), SImp(a.right, b)}, goal)

    if goal in gamma:
        return True
    if isinstance(goal, SAnd):
        return _provable(gamma, goal.left) and _provable(gamma, goal.right)
    if isinstance(goal, SImp):
        return _provable(gamma | {goal.left}, goal.right)

    if isinstance(goal, SOr):
        if _provable(gamma, goal.left) or _provable(gamma, goal.right):
            return True
    for h in gamma:
        if isinstance(h, SImp) and isinstance(h.left, SImp):
            c, d, b = h.left.left, h.left.right, h.right
            rest = gamma - {h}
            if _provable(rest | {SImp(d, b)}, SImp(c, d)) and _provable(rest | {b}, goal):
                return True
    return False


def intuitionistic_valid(f: StandardFormula) -> bool:
    """Decide intuitionistic validity with the terminating calculus G4ip."""
    return _provable(frozenset(), f)


# Fresh atoms a comparison may grow to before reporting a disagreement.
MAX_FRESH_ON_DISAGREEMENT = 2

ORACLES: Dict[str, Callable[[StandardFormula], bool]] = {
    "classical": classical_valid,
    "intuitionistic": intuitionistic_valid,
}


def oracle_for_level(level: int) -> str:
    """Level-1 bases recover classical logic, level-2 bases intuitionistic."""
    return "classical" if level == 1 else "intuitionistic"


@dataclass(frozen=True)
class ComparisonRecord:
    """One row of a compare run."""
    formula: Formula
    mapped: StandardFormula
    level: int
    bes_valid: bool
    oracle: str
    oracle_valid: bool
    vocab: Tuple[str, ...] = ()
    attempts: int = 1

    @property
    def agree(self) -> bool:
        return self.bes_valid == self.oracle_valid


def compare(ctx, f: Formula, max_fresh: int = MAX_FRESH_ON_DISAGREEMENT) -> ComparisonRecord:
    """Base-extension validity next to the oracle matching ctx's level.

    On disagreement the basis is widened by one fresh atom at a time, up to
    max_fresh fresh atoms, while it stays enumerable. The record carries the
    vocabulary of the last attempt.
    """
    mapped = map_extrinsic(f)
    name = oracle_for_level(ctx.spec.level)
    oracle_valid = ORACLES[name](mapped)
    attempts = 1
    bes_valid = ctx.valid(f)
    while bes_valid != oracle_valid and len(ctx.fresh_vocab) < max_fresh:
        wider = ctx.widened()
        if wider is None:
            break
        logger.info("%s: retrying over {%s}", f, ", ".join(wider.spec.vocab))
        ctx = wider
        attempts += 1
        bes_valid = ctx.valid(f)

    record = ComparisonRecord(
        formula=f,
        mapped=mapped,
        level=ctx.spec.level,
        bes_valid=bes_valid,
        oracle=name,
        oracle_valid=oracle_valid,
        vocab=ctx.spec.vocab,
        attempts=attempts,
    )
    if not record.agree:
        logger.warning("%s: base-extension %s, %s %s", f, record.bes_valid,
                       name, record.oracle_valid)
    return record


def kreisel_putnam_instance(chi: Formula, phi: Formula, psi: Formula) -> Formula:
    """(χ ⊸ (φ ∨ ψ)) ⊸ ((χ ⊸ φ) ∨ (χ ⊸ ψ))."""
    return ImpE(ImpE(chi, Or(phi, psi)), Or(ImpE(chi, phi), ImpE(chi, psi)))


# Each formula mentions at most two atoms so level-2 lattices stay small.
CURATED_CORPUS: Tuple[Tuple[str, str], ...] = (
    ("peirce", "((p -o q) -o p) -o p"),
    ("double_negation", "((p -o zero) -o zero) -o p"),
    ("identity", "p -o p"),
    ("non_theorem", "p -o q"),
    ("excluded_middle", "p + (p -o zero)"),
    ("ex_falso", "zero -o p"),
    ("tensor_commutes", "p * q -o q * p"),
    ("oplus_commutes", "p + q -o q + p"),
    ("tensor_associates", "(p * q) * p -o p * (q * p)"),
    ("oplus_associates", "(p + q) + p -o p + (q + p)"),
)


def curated_corpus() -> List[Tuple[str, Formula]]:
    return [(name, parse_formula(text)) for name, text in CURATED_CORPUS]


def load_corpus(text: str) -> List[Tuple[str, Formula]]:
    """Parse a corpus file: one formula per line, optionally `name: formula`,
    `#` starts a comment."""
    entries = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name: Optional[str] = None
        if ":" in line:
            name, line = (part.strip() for part in line.split(":", 1))
        entries.append((name or f"line{number}", parse_formula(line)))
    return entries
