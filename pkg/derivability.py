"""
Derivability in a base for baselab.
Contexts only grow: a premise ([Σ] P) of a rule is met in context Γ when P
is derivable in Γ ∪ Σ, so the closure of Γ depends only on the closures of
Γ and of strictly larger contexts.
"""
import logging
import threading
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, Iterable, Optional, Sequence, Tuple

from atomic import AtomicRule, Base
from errors import VocabularyTooLarge

logger = logging.getLogger(__name__)

Context = FrozenSet[str]
Justifications = Dict[Tuple[Context, str], AtomicRule]

BRUTE_FORCE_MAX_CONTEXTS = 2 ** 16


def _closure(rules: Sequence[AtomicRule], ctx: Context,
             memo: Dict[Context, Context],
             justify: Optional[Justifications] = None) -> Context:
    cached = memo.get(ctx)
    if cached is not None:
        return cached

    derived = set(ctx)
    changed = True
    while changed:
        changed = False
        for rule in rules:
            if rule.conclusion in derived:
                continue
            if all(_premise_met(rules, ctx, derived, p.discharge, p.head, memo, justify)
                   for p in rule.premises):
                derived.add(rule.conclusion)
                if justify is not None:
                    justify[(ctx, rule.conclusion)] = rule
                changed = True

    result = frozenset(derived)
    memo[ctx] = result
    return result


def _premise_met(rules, ctx, derived, discharge, head, memo, justify) -> bool:
    if all(a in ctx for a in discharge):
        return head in derived
    return head in _closure(rules, ctx.union(discharge), memo, justify)


def closure(b: Base, gamma: Iterable[str] = ()) -> Context:
    """Every atom derivable in b from the assumptions gamma."""
    return _closure(b.rules, frozenset(gamma), {})


def derives(b: Base, gamma: Iterable[str], goal: str) -> bool:
    """Decide Γ ⊢_b goal."""
    return goal in closure(b, gamma)


def derivable_set(b: Base, gamma: Iterable[str], vocab: Iterable[str]) -> FrozenSet[str]:
    """The atoms of vocab derivable in b from gamma."""
    return closure(b, gamma) & frozenset(vocab)


@dataclass(frozen=True)
class Judgment:
    """Γ ⊢_b goal."""
    base: Base
    assumptions: FrozenSet[str]
    goal: str

    def __post_init__(self):
        object.__setattr__(self, "assumptions", frozenset(self.assumptions))

    def holds(self) -> bool:
        return derives(self.base, self.assumptions, self.goal)

    def __str__(self):
        gamma = ", ".join(sorted(self.assumptions))
        return f"{gamma} ⊢ {self.goal}" if gamma else f"⊢ {self.goal}"


class DerivabilityCache:
    """Shared closure memo keyed by (base key, context).

    A base key is any hashable that identifies the rule set, e.g. a bitmask
    over a rule universe.
    """

    def __init__(self):
        self._memos: Dict[Hashable, Dict[Context, Context]] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def closure(self, key: Hashable, rules: Sequence[AtomicRule],
                gamma: Context = frozenset()) -> Context:
        with self._lock:
            memo = self._memos.setdefault(key, {})
            cached = memo.get(gamma)
            if cached is not None:
                self.hits += 1
                return cached
            self.misses += 1
            return _closure(rules, gamma, memo)

    def __len__(self):
        return len(self._memos)

    def clear(self):
        with self._lock:
            self._memos.clear()
            self.hits = self.misses = 0


def brute_closure(b: Base, gamma: Iterable[str] = (),
                  vocab: Optional[Iterable[str]] = None,
                  max_contexts: int = BRUTE_FORCE_MAX_CONTEXTS) -> Context:
    """Reference closure by global inflationary iteration over every context.

    Computes the closure of all subsets of vocab at once and returns the one
    for gamma. Independent of the per-context fixpoint used by `closure`.

    Raises:
        VocabularyTooLarge: When vocab has more than log2(max_contexts) atoms.
    """
    gamma = frozenset(gamma)
    names = sorted(set(vocab) if vocab is not None else b.atoms() | gamma)
    if not gamma <= set(names):
        raise ValueError("Assumptions must lie inside the vocabulary")
    if 2 ** len(names) > max_contexts:
        raise VocabularyTooLarge(
            f"{len(names)} atoms give {2 ** len(names)} contexts (limit {max_contexts})"
        )

    contexts = [frozenset(c) for k in range(len(names) + 1) for c in combinations(names, k)]
    table: Dict[Context, set] = {ctx: set(ctx) for ctx in contexts}
    changed = True
    rounds = 0
    while changed:
        changed = False
        rounds += 1
        for ctx in contexts:
            current = table[ctx]
            for rule in b.rules:
                if rule.conclusion in current:
                    continue
                if all(p.head in table[ctx.union(p.discharge)] for p in rule.premises):
                    current.add(rule.conclusion)
                    changed = True
    logger.debug("brute closure stabilised after %d rounds over %d contexts",
                 rounds, len(contexts))
    return frozenset(table[gamma])


@dataclass(frozen=True)
class DerivationNode:
    """One step of a derivation: an assumption leaf or a rule application."""
    context: Tuple[str, ...]
    atom: str
    rule: Optional[AtomicRule] = None
    children: Tuple["DerivationNode", ...] = ()

    @property
    def is_assumption(self) -> bool:
        return self.rule is None

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.children)


def derivation_trace(b: Base, gamma: Iterable[str], goal: str) -> Optional[DerivationNode]:
    """A witness derivation of Γ ⊢_b goal, or None when goal is not derivable.

    Each atom is justified by the rule that first derived it, so premises in
    the same context were derived strictly earlier and the tree is finite.
    """
    ctx = frozenset(gamma)
    justify: Justifications = {}
    if goal not in _closure(b.rules, ctx, {}, justify):
        return None

    def build(context: Context, atom: str) -> DerivationNode:
        if atom in context:
            return DerivationNode(tuple(sorted(context)), atom)
        rule = justify[(context, atom)]
        children = tuple(build(context.union(p.discharge), p.head) for p in rule.premises)
        return DerivationNode(tuple(sorted(context)), atom, rule, children)

    return build(ctx, goal)
