"""
Base-extension support for baselab.

Evaluates ⊩ relative to a finite basis. Bases are bitmasks over the rule
universe of a BasisSpec; every "for all C ⊇ B" ranges over the bases of the
basis containing B, every "for any atom P" over the context vocabulary.

Two strategies compute identical judgments:
    recursive  follows the clauses, enumerating extensions per query
    lattice    builds one numpy bit table per subformula over the whole
               powerset lattice; universal clauses become superset-AND
               transforms
"""
import logging
import threading
import time
from dataclasses import dataclass, field, replace
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from atomic import (
    AtomicRule, Base, BasisSpec, EMPTY_BASE, basis_size, check_in_basis,
    extension_index_sets, rule_index, rule_universe,
)
from config import (
    DEFAULT_MAX_ENUM, FRESH_PREFIX, LATTICE_MAX_RULES, Strategy, fresh_atoms,
    is_enumerable,
)
from derivability import DerivabilityCache
from errors import (
    AtomOutsideVocabulary, AugmentedBaseOutsideBasis,
    EnumerationLimitExceeded, FormulaNotClausal,
)
from events import EventBus, EventType
from syntax import (
    And, Atom, Bot, Formula, ImpE, ImpI, Oplus, Or, Tensor, Zero,
    atoms_of, is_intrinsic, subformulas,
)
from translate import formula_to_base

logger = logging.getLogger(__name__)

# Bases the recursive strategy audits for monotonicity before trusting
# support at the empty base as validity.
DEFAULT_AUDIT_LIMIT = 4096

# Violations kept per formula in a monotonicity report.
MAX_REPORTED_VIOLATIONS = 20

# Lattice bit tables for rule presence are cached up to this many rules.
_CACHED_PRESENCE_RULES = 22


@dataclass
class EvaluationStats:
    """Counters surfaced in CLI reports."""
    bases_enumerated: int = 0
    cache_hits: int = 0
    wall_ms: float = 0.0

    def as_dict(self) -> dict:
        return {
            "bases_enumerated": self.bases_enumerated,
            "cache_hits": self.cache_hits,
            "wall_ms": round(self.wall_ms, 3),
        }


@dataclass(frozen=True)
class EntailmentQuery:
    """Δ ⊩_b φ; an empty Δ means plain support at every extension of b."""
    hypotheses: Tuple[Formula, ...]
    conclusion: Formula
    base: Base = EMPTY_BASE


@dataclass(frozen=True)
class MonotonicityViolation:
    smaller: Base
    larger: Base
    formula: Formula


@dataclass
class MonotonicityReport:
    """Pairs b ⊆ c of the basis with ⊩_b f but not ⊩_c f."""
    formulas_checked: int = 0
    bases_checked: int = 0
    violation_count: int = 0
    violations: List[MonotonicityViolation] = field(default_factory=list)
    truncated: bool = False

    @property
    def ok(self) -> bool:
        return self.violation_count == 0


@dataclass
class ImplicationReport:
    """Bases where φ → ψ and φ ⊸ ψ receive different verdicts."""
    antecedent: Formula
    consequent: Formula
    bases_checked: int = 0
    disagreements: List[Tuple[Base, bool, bool]] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.disagreements


class _CapReached(Exception):
    """Some base of the lattice leaves the basis under ⦅φ⦆; the query needs
    per-base evaluation to tell whether it reaches one."""


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class _Evaluator:
    """State shared by both strategies: universe, masks, derivability."""

    def __init__(self, ctx: "SupportContext"):
        self.ctx = ctx
        self.spec = ctx.spec
        self.vocab = ctx.spec.vocab
        self.universe: Tuple[AtomicRule, ...] = rule_universe(ctx.spec)
        self.index = rule_index(ctx.spec)
        self.full_mask = (1 << len(self.universe)) - 1
        self.counted_mask = sum(
            1 << i for i, r in enumerate(self.universe)
            if not (self.spec.fact_closed and r.is_fact)
        )
        self._augmentations: Dict[Formula, Tuple[int, Tuple[AtomicRule, ...], bool]] = {}
        self.memo_hits = 0

    def rules_of(self, mask: int) -> Tuple[AtomicRule, ...]:
        return tuple(self.universe[i] for i in _bits(mask))

    def base_of(self, mask: int) -> Base:
        return Base(self.rules_of(mask))

    def in_basis(self, mask: int) -> bool:
        if not self.spec.is_capped:
            return True
        return bin(mask & self.counted_mask).count("1") <= self.spec.max_rules

    def derived(self, mask: int) -> FrozenSet[str]:
        return self.ctx.derivability.closure(mask, self.rules_of(mask))

    def augmentation(self, antecedent: Formula):
        """(mask of in-universe rules, all rules, any rule outside universe) of ⦅φ⦆."""
        cached = self._augmentations.get(antecedent)
        if cached is None:
            rules = formula_to_base(antecedent).rules
            mask = 0
            outside = False
            for rule in rules:
                if rule in self.index:
                    mask |= 1 << self.index[rule]
                else:
                    outside = True
            cached = (mask, rules, outside)
            self._augmentations[antecedent] = cached
        return cached

    def intrinsic(self, rules: FrozenSet[AtomicRule], f: Formula) -> bool:
        """Support of an intrinsic formula on an explicit rule set.

        Needs no extensions, so the rule set may lie outside the universe.
        """
        if isinstance(f, Atom):
            return f.name in self.ctx.derivability.closure(rules, tuple(sorted(rules)))
        if isinstance(f, Bot):
            return False
        if isinstance(f, Zero):
            derived = self.ctx.derivability.closure(rules, tuple(sorted(rules)))
            return all(a in derived for a in self.vocab)
        if isinstance(f, And):
            return self.intrinsic(rules, f.left) and self.intrinsic(rules, f.right)
        if isinstance(f, Or):
            return self.intrinsic(rules, f.left) or self.intrinsic(rules, f.right)
        if isinstance(f, ImpI):
            _, extra, _ = self.augmentation(f.left)
            return self.intrinsic(rules | frozenset(extra), f.right)
        raise TypeError(f"Not an intrinsic formula: {f}")

    def check_augmentation(self, f: ImpI, mask: int) -> Optional[int]:
        """Augmented mask for an in-universe ⦅φ⦆, None when it leaves the universe."""
        aug_mask, _, outside = self.augmentation(f.left)
        needs_basis = not is_intrinsic(f.right)
        if outside:
            if needs_basis:
                raise AugmentedBaseOutsideBasis(
                    f"⦅{f.left}⦆ has rules outside the rule universe while {f.right} "
                    "quantifies over extensions"
                )
            return None
        augmented = mask | aug_mask
        if needs_basis and not self.in_basis(augmented):
            raise AugmentedBaseOutsideBasis(
                f"{self.base_of(mask)} ∪ ⦅{f.left}⦆ exceeds the rule cap"
            )
        return augmented

    def outside_universe(self, f: ImpI, mask: int) -> bool:
        _, rules, _ = self.augmentation(f.left)
        self.ctx.events.emit(EventType.FALLBACK_EVALUATION, formula=str(f))
        logger.warning("evaluating %s on a base outside the rule universe", f)
        return self.intrinsic(frozenset(self.rules_of(mask)) | frozenset(rules), f.right)


class _RecursiveEvaluator(_Evaluator):
    """Clause-by-clause evaluation with per-(base, formula) memoization."""

    def __init__(self, ctx):
        super().__init__(ctx)
        self._memo: Dict[Tuple[int, Formula], bool] = {}
        self._hyp_memo: Dict[Tuple[int, Tuple[Formula, ...], str], bool] = {}

    def extensions(self, mask: int) -> Iterator[int]:
        stats = self.ctx.stats
        if not self.spec.is_capped:
            free = self.full_mask & ~mask
            sub = free
            while True:
                stats.bases_enumerated += 1
                yield mask | sub
                if sub == 0:
                    return
                sub = (sub - 1) & free
        present = tuple(_bits(mask))
        for indices in extension_index_sets(self.spec, present):
            stats.bases_enumerated += 1
            yield sum(1 << i for i in indices)

    def all_bases(self) -> Iterator[int]:
        for indices in extension_index_sets(self.spec, ()):
            yield sum(1 << i for i in indices)

    def supports(self, mask: int, f: Formula) -> bool:
        key = (mask, f)
        cached = self._memo.get(key)
        if cached is not None:
            self.memo_hits += 1
            return cached
        result = self._evaluate(mask, f)
        self._memo[key] = result
        return result

    def _hypothetical(self, mask: int, hyps: Tuple[Formula, ...], atom: str) -> bool:
        """hyps ⊩_mask atom: every extension supporting all hyps derives atom."""
        key = (mask, hyps, atom)
        cached = self._hyp_memo.get(key)
        if cached is not None:
            self.memo_hits += 1
            return cached
        result = all(
            atom in self.derived(d) or not all(self.supports(d, h) for h in hyps)
            for d in self.extensions(mask)
        )
        self._hyp_memo[key] = result
        return result

    def _evaluate(self, mask: int, f: Formula) -> bool:
        if isinstance(f, Atom):
            return f.name in self.derived(mask)
        if isinstance(f, Bot):
            return False
        if isinstance(f, Zero):
            derived = self.derived(mask)
            return all(a in derived for a in self.vocab)
        if isinstance(f, And):
            return self.supports(mask, f.left) and self.supports(mask, f.right)
        if isinstance(f, Or):
            return self.supports(mask, f.left) or self.supports(mask, f.right)
        if isinstance(f, ImpI):
            augmented = self.check_augmentation(f, mask)
            if augmented is None:
                return self.outside_universe(f, mask)
            return self.supports(augmented, f.right)
        if isinstance(f, ImpE):
            return all(
                not self.supports(c, f.left) or self.supports(c, f.right)
                for c in self.extensions(mask)
            )
        if isinstance(f, Tensor):
            pair = (f.left, f.right)
            return all(
                atom in self.derived(c) or not self._hypothetical(c, pair, atom)
                for c in self.extensions(mask)
                for atom in self.vocab
            )
        if isinstance(f, Oplus):
            return all(
                atom in self.derived(c)
                or not (self._hypothetical(c, (f.left,), atom)
                        and self._hypothetical(c, (f.right,), atom))
                for c in self.extensions(mask)
                for atom in self.vocab
            )
        raise TypeError(f"Unknown formula node: {f!r}")

    def entails(self, mask: int, hyps: Sequence[Formula], f: Formula) -> bool:
        return all(
            self.supports(c, f) or not all(self.supports(c, h) for h in hyps)
            for c in self.extensions(mask)
        )

    def countermodel(self, f: Formula) -> Optional[int]:
        for mask in self.all_bases():
            self.ctx.stats.bases_enumerated += 1
            if not self.supports(mask, f):
                return mask
        return None

    def supported_everywhere(self, f: Formula) -> bool:
        return self.countermodel(f) is None

    def monotonicity(self, f: Formula, report: MonotonicityReport, limit: Optional[int] = None):
        for n, mask in enumerate(self.all_bases()):
            if limit is not None and n >= limit:
                report.truncated = True
                break
            report.bases_checked += 1
            if not self.supports(mask, f):
                continue
            for c in self.extensions(mask):
                if not self.supports(c, f):
                    report.violation_count += 1
                    if len(report.violations) < MAX_REPORTED_VIOLATIONS:
                        report.violations.append(
                            MonotonicityViolation(self.base_of(mask), self.base_of(c), f)
                        )


class _LatticeEvaluator(_Evaluator):
    """Bit tables over every subset of the rule universe.

    Entry m of a table is the judgment at the base whose rules are the set
    bits of m. Entries for masks outside a capped basis are neutralized
    before every superset-AND, so only in-basis extensions are quantified.
    """

    def __init__(self, ctx):
        super().__init__(ctx)
        n = len(self.universe)
        self.n = n
        self.size = 1 << n
        self.masks = np.arange(self.size, dtype=np.int64)
        self._presence: Dict[int, np.ndarray] = {}
        self.popcount = np.zeros(self.size, dtype=np.uint8)
        for i in range(n):
            self.popcount += self.present(i)
        self.basis_table = self._basis_table()
        self._tables: Dict[Formula, np.ndarray] = {}
        started = time.perf_counter()
        self.atom_tables = self._derivability_tables()
        ctx.stats.bases_enumerated += int(self.basis_table.sum())
        ctx.events.emit(
            EventType.DERIVABILITY_TABLE_BUILT,
            rules=n, bases=int(self.basis_table.sum()),
            ms=round((time.perf_counter() - started) * 1000, 3),
        )

    def present(self, i: int) -> np.ndarray:
        cached = self._presence.get(i)
        if cached is not None:
            return cached
        bit = ((self.masks >> i) & 1).astype(bool)
        if self.n <= _CACHED_PRESENCE_RULES:
            self._presence[i] = bit
        return bit

    def _basis_table(self) -> np.ndarray:
        if not self.spec.is_capped:
            return np.ones(self.size, dtype=bool)
        counted = np.zeros(self.size, dtype=np.uint8)
        for i, rule in enumerate(self.universe):
            if not (self.spec.fact_closed and rule.is_fact):
                counted += self.present(i)
        return counted <= self.spec.max_rules

    def _derivability_tables(self) -> Dict[str, np.ndarray]:
        """atom -> table of ⊢_B atom, by inflationary iteration over every
        context reachable through discharges."""
        contexts = {frozenset()}
        frontier = [frozenset()]
        while frontier:
            ctx = frontier.pop()
            for rule in self.universe:
                for premise in rule.premises:
                    grown = ctx.union(premise.discharge)
                    if grown not in contexts:
                        contexts.add(grown)
                        frontier.append(grown)
        ordered = sorted(contexts, key=lambda c: (-len(c), sorted(c)))

        tables = {
            c: {a: np.full(self.size, a in c, dtype=bool) for a in self.vocab}
            for c in ordered
        }
        changed = True
        rounds = 0
        while changed:
            changed = False
            rounds += 1
            for c in ordered:
                row = tables[c]
                for i, rule in enumerate(self.universe):
                    fires = self.present(i).copy()
                    for premise in rule.premises:
                        fires &= tables[c.union(premise.discharge)][premise.head]
                    new = fires & ~row[rule.conclusion]
                    if new.any():
                        row[rule.conclusion] |= new
                        changed = True
        logger.debug("derivability tables over %d contexts stable after %d rounds",
                     len(ordered), rounds)
        return tables[frozenset()]

    def upward_all(self, values: np.ndarray) -> np.ndarray:
        """Entry m becomes the AND of `values` over every in-basis superset of m."""
        out = values | ~self.basis_table
        for i in range(self.n):
            view = out.reshape(-1, 2, 1 << i)
            view[:, 0, :] &= view[:, 1, :]
        return out

    def _hypothetical(self, premise: np.ndarray, atom: str) -> np.ndarray:
        return self.upward_all(~premise | self.atom_tables[atom])

    def table(self, f: Formula) -> np.ndarray:
        cached = self._tables.get(f)
        if cached is not None:
            self.memo_hits += 1
            return cached
        result = self._build(f)
        result.setflags(write=False)
        self._tables[f] = result
        self.ctx.events.emit(EventType.FORMULA_TABLE_BUILT, formula=str(f))
        return result

    def _build(self, f: Formula) -> np.ndarray:
        if isinstance(f, Atom):
            return self.atom_tables[f.name].copy()
        if isinstance(f, Bot):
            return np.zeros(self.size, dtype=bool)
        if isinstance(f, Zero):
            result = np.ones(self.size, dtype=bool)
            for atom in self.vocab:
                result &= self.atom_tables[atom]
            return result
        if isinstance(f, And):
            return self.table(f.left) & self.table(f.right)
        if isinstance(f, Or):
            return self.table(f.left) | self.table(f.right)
        if isinstance(f, ImpI):
            return self._implication(f)
        if isinstance(f, ImpE):
            return self.upward_all(~self.table(f.left) | self.table(f.right))
        if isinstance(f, Tensor):
            both = self.table(f.left) & self.table(f.right)
            result = np.ones(self.size, dtype=bool)
            for atom in self.vocab:
                derived = self.atom_tables[atom]
                result &= self.upward_all(~self._hypothetical(both, atom) | derived)
            return result
        if isinstance(f, Oplus):
            left, right = self.table(f.left), self.table(f.right)
            result = np.ones(self.size, dtype=bool)
            for atom in self.vocab:
                derived = self.atom_tables[atom]
                hyps = self._hypothetical(left, atom) & self._hypothetical(right, atom)
                result &= self.upward_all(~hyps | derived)
            return result
        raise TypeError(f"Unknown formula node: {f!r}")

    def _implication(self, f: ImpI) -> np.ndarray:
        aug_mask, rules, outside = self.augmentation(f.left)
        if outside:
            if not is_intrinsic(f.right):
                raise AugmentedBaseOutsideBasis(
                    f"⦅{f.left}⦆ has rules outside the rule universe while {f.right} "
                    "quantifies over extensions"
                )
            self.ctx.events.emit(EventType.FALLBACK_EVALUATION, formula=str(f))
            logger.warning("evaluating %s base by base outside the rule universe", f)
            extra = frozenset(rules)
            return np.fromiter(
                (self.intrinsic(frozenset(self.rules_of(m)) | extra, f.right)
                 for m in range(self.size)),
                dtype=bool, count=self.size,
            )
        augmented = self.masks | aug_mask
        if not is_intrinsic(f.right):
            leaving = self.basis_table & ~self.basis_table[augmented]
            if leaving.any():
                raise _CapReached(f)
        return self.table(f.right)[augmented]

    def supports(self, mask: int, f: Formula) -> bool:
        return bool(self.table(f)[mask])

    def entails(self, mask: int, hyps: Sequence[Formula], f: Formula) -> bool:
        assumed = np.ones(self.size, dtype=bool)
        for h in hyps:
            assumed &= self.table(h)
        return bool(self.upward_all(~assumed | self.table(f))[mask])

    def countermodel(self, f: Formula) -> Optional[int]:
        failing = self.basis_table & ~self.table(f)
        if not failing.any():
            return None
        fewest = int(self.popcount[failing].min())
        candidates = np.flatnonzero(failing & (self.popcount == fewest))
        return min((int(m) for m in candidates), key=lambda m: tuple(_bits(m)))

    def supported_everywhere(self, f: Formula) -> bool:
        return not (self.basis_table & ~self.table(f)).any()

    def monotonicity(self, f: Formula, report: MonotonicityReport, limit: Optional[int] = None):
        t = self.table(f)
        report.bases_checked += int(self.basis_table.sum())
        bad = self.basis_table & t & ~self.upward_all(t)
        report.violation_count += int(bad.sum())
        for small in np.flatnonzero(bad)[:MAX_REPORTED_VIOLATIONS]:
            small = int(small)
            free = self.full_mask & ~small
            sub = free
            while True:
                large = small | sub
                if self.basis_table[large] and not t[large]:
                    report.violations.append(
                        MonotonicityViolation(self.base_of(small), self.base_of(large), f)
                    )
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & free


class SupportContext:
    """A basis, an evaluation strategy and the caches shared by queries.

    Queries may be issued from several threads; they are serialized on an
    internal lock so cached answers are computed once.
    """

    def __init__(self, spec: BasisSpec, strategy: Strategy = Strategy.AUTO,
                 max_enum: int = DEFAULT_MAX_ENUM, paranoid: bool = False,
                 event_bus: Optional[EventBus] = None,
                 audit_limit: int = DEFAULT_AUDIT_LIMIT):
        self.spec = spec
        self.paranoid = paranoid
        self.max_enum = max_enum
        self.requested_strategy = strategy
        self.audit_limit = audit_limit
        self.events = event_bus or EventBus(keep_history=False)
        self.stats = EvaluationStats()
        self.derivability = DerivabilityCache()
        self._lock = threading.RLock()
        self._audited: Dict[Formula, MonotonicityReport] = {}

        size = basis_size(spec)
        if size > max_enum:
            raise EnumerationLimitExceeded(
                f"Basis has {size} bases, above the limit of {max_enum}"
            )
        rules = len(rule_universe(spec))
        lattice_fits = rules <= LATTICE_MAX_RULES and 2 ** rules <= max_enum
        if strategy is Strategy.AUTO:
            strategy = Strategy.LATTICE if lattice_fits else Strategy.RECURSIVE
        elif strategy is Strategy.LATTICE and not lattice_fits:
            raise EnumerationLimitExceeded(
                f"Lattice strategy needs 2^{rules} table entries, above the limit"
            )
        self.strategy = strategy
        logger.info("support context: %d atoms, %d rules, %d bases, %s strategy",
                    len(spec.vocab), rules, size, strategy.value)
        self.events.emit(EventType.STRATEGY_SELECTED, strategy=strategy.value,
                         rules=rules, bases=size)
        self._evaluator: Optional[_Evaluator] = None
        self._recursive: Optional[_RecursiveEvaluator] = None

    @classmethod
    def for_formulas(cls, formulas: Iterable[Formula], level: int = 1, fresh: int = 1,
                     max_premises: int = 2, max_discharge: Optional[int] = None,
                     max_rules: Optional[int] = None, fact_closed: bool = False,
                     base: Optional[Base] = None, extra_atoms: Iterable[str] = (),
                     **options) -> "SupportContext":
        """Context whose vocabulary is the formulas' atoms plus `fresh` fresh atoms."""
        atoms = set(extra_atoms)
        for f in formulas:
            atoms |= atoms_of(f)
        if base is not None:
            atoms |= base.atoms()
        vocab = tuple(sorted(atoms)) + fresh_atoms(fresh, atoms)
        if max_discharge is None:
            max_discharge = 1 if level == 2 else 0
        spec = BasisSpec(vocab, level, max_premises, max_discharge, max_rules, fact_closed)
        return cls(spec, **options)

    @property
    def fresh_vocab(self) -> Tuple[str, ...]:
        """Vocabulary atoms no formula may mention."""
        return tuple(a for a in self.spec.vocab if a.startswith(FRESH_PREFIX))

    def widened(self, extra: int = 1) -> Optional["SupportContext"]:
        """The same context over `extra` more fresh atoms, or None when that
        basis cannot be enumerated."""
        spec = replace(self.spec, vocab=self.spec.vocab + fresh_atoms(extra, self.spec.vocab))
        if not is_enumerable(spec, self.max_enum):
            return None
        try:
            return SupportContext(spec, self.requested_strategy, self.max_enum, self.paranoid,
                                  self.events, self.audit_limit)
        except EnumerationLimitExceeded:
            return None

    @property
    def evaluator(self) -> _Evaluator:
        if self._evaluator is None:
            if self.strategy is Strategy.LATTICE:
                self._evaluator = _LatticeEvaluator(self)
            else:
                self._evaluator = _RecursiveEvaluator(self)
        return self._evaluator

    def _per_base(self) -> _Evaluator:
        if isinstance(self.evaluator, _RecursiveEvaluator):
            return self.evaluator
        if self._recursive is None:
            self._recursive = _RecursiveEvaluator(self)
        return self._recursive

    def _check_formula(self, f: Formula):
        outside = atoms_of(f) - set(self.spec.vocab)
        if outside:
            raise AtomOutsideVocabulary(
                f"Atoms outside the vocabulary: {', '.join(sorted(outside))}"
            )
        reserved = atoms_of(f) & set(self.fresh_vocab)
        if reserved:
            raise AtomOutsideVocabulary(
                f"Fresh atoms cannot occur in a query: {', '.join(sorted(reserved))}"
            )
        for sub in subformulas(f):
            if isinstance(sub, ImpI):
                try:
                    formula_to_base(sub.left)
                except FormulaNotClausal:
                    raise FormulaNotClausal(sub.left) from None

    def mask_of(self, b: Base) -> int:
        check_in_basis(self.spec, b)
        index = rule_index(self.spec)
        return sum(1 << index[rule] for rule in b)

    def _run(self, name: str, call):
        with self._lock:
            started = time.perf_counter()
            evaluator = self.evaluator
            try:
                result = call(evaluator)
            except _CapReached as e:
                logger.info("%s: a capped augmentation in %s, evaluating base by base",
                            name, e.args[0])
                self.events.emit(EventType.FALLBACK_EVALUATION, query=name,
                                 formula=str(e.args[0]))
                evaluator = self._per_base()
                result = call(evaluator)
            elapsed = (time.perf_counter() - started) * 1000
            self.stats.wall_ms += elapsed
            memo_hits = sum(ev.memo_hits for ev in (self._evaluator, self._recursive)
                            if ev is not None)
            self.stats.cache_hits = self.derivability.hits + memo_hits
            self.events.emit(EventType.QUERY_FINISHED, query=name, ms=round(elapsed, 3))
            return result

    def supports(self, b: Base, f: Formula) -> bool:
        """⊩_b f."""
        self._check_formula(f)
        mask = self.mask_of(b)
        return self._run("supports", lambda ev: ev.supports(mask, f))

    def entails(self, b: Base, delta: Iterable[Formula], f: Formula) -> bool:
        """Δ ⊩_b f: every extension of b supporting all of Δ supports f."""
        hyps = tuple(delta)
        for h in hyps + (f,):
            self._check_formula(h)
        mask = self.mask_of(b)
        return self._run("entails", lambda ev: ev.entails(mask, hyps, f))

    def query(self, q: EntailmentQuery) -> bool:
        return self.entails(q.base, q.hypotheses, q.conclusion)

    def valid(self, f: Formula) -> bool:
        """Support at every base of the basis.

        Decided at the empty base once the formula passed a monotonicity
        audit; in paranoid mode, or when the audit finds violations, every
        base is checked.
        """
        self._check_formula(f)
        report = self.audit(f)
        if self.paranoid or not report.ok:
            return self._run("valid", lambda ev: ev.supported_everywhere(f))
        return self._run("valid", lambda ev: ev.supports(0, f))

    def audit(self, f: Formula) -> MonotonicityReport:
        """One-time monotonicity audit of f.

        Exhaustive with the lattice strategy; per-base evaluation stops after
        audit_limit bases and marks the report truncated.
        """
        with self._lock:
            report = self._audited.get(f)
            if report is not None:
                return report
            report = MonotonicityReport(formulas_checked=1)
            limit = self.audit_limit if basis_size(self.spec) > self.audit_limit else None

            def run(ev: _Evaluator):
                per_base = isinstance(ev, _RecursiveEvaluator)
                return ev.monotonicity(f, report, limit if per_base else None)

            self._run("audit", run)
            if report.truncated:
                logger.warning("monotonicity of %s audited on the first %d of %d bases only",
                               f, report.bases_checked, basis_size(self.spec))
                self.events.emit(EventType.AUDIT_TRUNCATED, formula=str(f),
                                 bases_checked=report.bases_checked)
            self._publish_violations(report)
            self._audited[f] = report
            return report

    def countermodel(self, f: Formula) -> Optional[Base]:
        """A base where f fails: fewest rules first, then enumeration order."""
        self._check_formula(f)
        mask = self._run("countermodel", lambda ev: ev.countermodel(f))
        if mask is None:
            return None
        witness = self.evaluator.base_of(mask)
        self.events.emit(EventType.COUNTERMODEL_FOUND, formula=str(f), base=str(witness))
        return witness

    def check_monotonicity(self, formulas: Iterable[Formula]) -> MonotonicityReport:
        """Every pair b ⊆ c of the basis where support of a formula is lost."""
        report = MonotonicityReport()
        for f in formulas:
            self._check_formula(f)
            report.formulas_checked += 1
            self._run("monotonicity", lambda ev: ev.monotonicity(f, report))
        self._publish_violations(report)
        return report

    def _publish_violations(self, report: MonotonicityReport):
        for v in report.violations:
            logger.warning("support of %s lost from %s to %s", v.formula, v.smaller, v.larger)
            self.events.emit(EventType.MONOTONICITY_VIOLATION, formula=str(v.formula),
                             smaller=str(v.smaller), larger=str(v.larger))

    def bases(self) -> Iterator[Base]:
        """Every base of the basis in enumeration order."""
        universe = rule_universe(self.spec)
        for indices in extension_index_sets(self.spec, ()):
            yield Base(tuple(universe[i] for i in indices))


def supports(ctx: SupportContext, b: Base, f: Formula) -> bool:
    return ctx.supports(b, f)


def entails(ctx: SupportContext, b: Base, delta: Iterable[Formula], f: Formula) -> bool:
    return ctx.entails(b, delta, f)


def valid(ctx: SupportContext, f: Formula) -> bool:
    return ctx.valid(f)


def countermodel(ctx: SupportContext, f: Formula) -> Optional[Base]:
    return ctx.countermodel(f)


def check_monotonicity(ctx: SupportContext, formulas: Iterable[Formula]) -> MonotonicityReport:
    return ctx.check_monotonicity(formulas)


def compare_implications(ctx: SupportContext, antecedent: Formula,
                         consequent: Formula) -> ImplicationReport:
    """Compare φ → ψ with φ ⊸ ψ on every base of the basis.

    Raises:
        FormulaNotClausal: If the antecedent has no base counterpart.
    """
    intrinsic, extrinsic = ImpI(antecedent, consequent), ImpE(antecedent, consequent)
    report = ImplicationReport(antecedent, consequent)
    for b in ctx.bases():
        report.bases_checked += 1
        left, right = ctx.supports(b, intrinsic), ctx.supports(b, extrinsic)
        if left != right:
            report.disagreements.append((b, left, right))
    return report
