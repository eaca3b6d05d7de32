"""
Atomic rules, bases and bases-of-bases for baselab.
A base is a finite set of atomic rules; a basis is the family of bases a
support context quantifies over, induced by a BasisSpec.
"""
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Tuple, Union

from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, UnexpectedToken

from errors import BaseOutsideBasis, BaseSyntaxError, ConfigurationError
from syntax import describe_terminals, syntax_error_position

ATOM_NAME = re.compile(r"_?[a-z][a-z0-9_]*\Z")


def check_atom_name(name: str) -> str:
    if not isinstance(name, str) or not ATOM_NAME.match(name):
        raise ValueError(f"Invalid atom name: {name!r}")
    return name


@dataclass(frozen=True, order=True)
class RulePremise:
    """One premise of a rule: derive `head` with `discharge` added as assumptions."""
    discharge: Tuple[str, ...]
    head: str

    def __str__(self):
        if not self.discharge:
            return self.head
        return f"[{' '.join(self.discharge)}] {self.head}"


@dataclass(frozen=True, order=True)
class AtomicRule:
    """Premises (sorted, duplicate-free) and a conclusion atom."""
    premises: Tuple[RulePremise, ...]
    conclusion: str

    @property
    def is_fact(self) -> bool:
        return not self.premises

    @property
    def level(self) -> int:
        return level_of(self)

    def atoms(self) -> FrozenSet[str]:
        names = {self.conclusion}
        for premise in self.premises:
            names.add(premise.head)
            names.update(premise.discharge)
        return frozenset(names)

    def __str__(self):
        if self.is_fact:
            return self.conclusion
        body = ", ".join(
            f"({p})" if p.discharge else str(p) for p in self.premises
        )
        return f"{body} ⇒ {self.conclusion}"


PremiseLike = Union[RulePremise, str, Tuple[Iterable[str], str]]


def _as_premise(item: PremiseLike) -> RulePremise:
    if isinstance(item, RulePremise):
        discharge, head = item.discharge, item.head
    elif isinstance(item, str):
        discharge, head = (), item
    else:
        discharge, head = item
    names = tuple(sorted({check_atom_name(a) for a in discharge}))
    return RulePremise(names, check_atom_name(head))


def canonicalize_rule(premises: Iterable[PremiseLike], conclusion: str) -> AtomicRule:
    """Build a rule with sorted, de-duplicated premises and discharge sets.

    Args:
        premises: RulePremise objects, bare atom names, or (discharge, head) pairs.
        conclusion: The conclusion atom.

    Returns:
        The canonical rule; two rules are equal iff their canonical forms are.
    """
    canonical = tuple(sorted({_as_premise(p) for p in premises}))
    return AtomicRule(canonical, check_atom_name(conclusion))


def level_of(rule: AtomicRule) -> int:
    if not rule.premises:
        return 0
    if all(not p.discharge for p in rule.premises):
        return 1
    return 2


@dataclass(frozen=True)
class Base:
    """A finite set of atomic rules in canonical order."""
    rules: Tuple[AtomicRule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(sorted(set(self.rules))))

    @property
    def level(self) -> int:
        return max((level_of(r) for r in self.rules), default=0)

    def atoms(self) -> FrozenSet[str]:
        names = set()
        for rule in self.rules:
            names |= rule.atoms()
        return frozenset(names)

    def union(self, other: Union["Base", Iterable[AtomicRule]]) -> "Base":
        extra = other.rules if isinstance(other, Base) else tuple(other)
        return Base(self.rules + extra)

    def issubset(self, other: "Base") -> bool:
        return set(self.rules) <= set(other.rules)

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __contains__(self, rule):
        return rule in self.rules

    def __str__(self):
        return "{" + ", ".join(str(r) for r in self.rules) + "}"


EMPTY_BASE = Base()


@dataclass(frozen=True)
class BasisSpec:
    """Bounds inducing a finite basis: every base whose rules come from the
    rule universe, with at most `max_rules` rules when a cap is given.

    Attributes:
        vocab: Atom names rules may mention.
        level: 1 or 2.
        max_premises: Upper bound on premises per rule.
        max_discharge: Upper bound on atoms discharged per premise (0 at level 1).
        max_rules: Optional cap on rules per base; None means every subset
            of the universe is a base.
        fact_closed: When capped, count only non-fact rules toward the cap.
    """
    vocab: Tuple[str, ...]
    level: int
    max_premises: int
    max_discharge: int
    max_rules: Optional[int] = None
    fact_closed: bool = False

    def __post_init__(self):
        vocab = tuple(sorted({check_atom_name(a) for a in self.vocab}))
        object.__setattr__(self, "vocab", vocab)
        if self.level not in (1, 2):
            raise ConfigurationError(f"Basis level must be 1 or 2, got {self.level}")
        if self.max_premises < 0 or self.max_discharge < 0:
            raise ConfigurationError("Premise and discharge bounds must be non-negative")
        if self.max_rules is not None and self.max_rules < 1:
            raise ConfigurationError(f"max_rules must be at least 1, got {self.max_rules}")
        if self.level == 1:
            object.__setattr__(self, "max_discharge", 0)

    @property
    def is_capped(self) -> bool:
        return self.max_rules is not None


@lru_cache(maxsize=128)
def rule_universe(spec: BasisSpec) -> Tuple[AtomicRule, ...]:
    """All rules admitted by the bounds, in canonical order."""
    discharges = [
        subset
        for size in range(spec.max_discharge + 1)
        for subset in combinations(spec.vocab, size)
    ]
    premise_types = sorted(
        RulePremise(discharge, head) for discharge in discharges for head in spec.vocab
    )
    rules = set()
    for size in range(min(spec.max_premises, len(premise_types)) + 1):
        for premises in combinations(premise_types, size):
            for conclusion in spec.vocab:
                rules.add(AtomicRule(tuple(premises), conclusion))
    return tuple(sorted(rules))


@lru_cache(maxsize=128)
def rule_index(spec: BasisSpec) -> Dict[AtomicRule, int]:
    return {rule: i for i, rule in enumerate(rule_universe(spec))}


def counted_rules(spec: BasisSpec, rules: Iterable[AtomicRule]) -> int:
    """Number of rules that count toward the cap."""
    if spec.fact_closed:
        return sum(1 for r in rules if not r.is_fact)
    return sum(1 for _ in rules)


def in_basis(spec: BasisSpec, b: Base) -> bool:
    index = rule_index(spec)
    if any(rule not in index for rule in b):
        return False
    return not spec.is_capped or counted_rules(spec, b) <= spec.max_rules


def check_in_basis(spec: BasisSpec, b: Base) -> None:
    index = rule_index(spec)
    outside = [str(rule) for rule in b if rule not in index]
    if outside:
        raise BaseOutsideBasis(f"Rules outside the rule universe: {', '.join(outside)}")
    if spec.is_capped and counted_rules(spec, b) > spec.max_rules:
        raise BaseOutsideBasis(f"Base has more than {spec.max_rules} counted rules")


def basis_size(spec: BasisSpec) -> int:
    universe = rule_universe(spec)
    if not spec.is_capped:
        return 2 ** len(universe)
    if spec.fact_closed:
        facts = sum(1 for r in universe if r.is_fact)
        others = len(universe) - facts
        return 2 ** facts * sum(comb(others, k) for k in range(min(spec.max_rules, others) + 1))
    return sum(comb(len(universe), k) for k in range(min(spec.max_rules, len(universe)) + 1))


def extension_index_sets(spec: BasisSpec, present: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Universe indices of every extension of the base `present`, ordered by
    size and then lexicographically."""
    universe = rule_universe(spec)
    taken = set(present)
    missing = [i for i in range(len(universe)) if i not in taken]

    if not spec.is_capped:
        sizes = range(len(missing) + 1)
        for k in sizes:
            for extra in combinations(missing, k):
                yield tuple(sorted(taken.union(extra)))
        return

    budget = spec.max_rules - counted_rules(spec, (universe[i] for i in present))
    if budget < 0:
        return
    if not spec.fact_closed:
        for k in range(min(budget, len(missing)) + 1):
            for extra in combinations(missing, k):
                yield tuple(sorted(taken.union(extra)))
        return

    facts = [i for i in missing if universe[i].is_fact]
    others = [i for i in missing if not universe[i].is_fact]
    for k in range(len(facts) + min(budget, len(others)) + 1):
        level = []
        for j in range(min(k, budget, len(others)) + 1):
            if k - j > len(facts):
                continue
            for chosen in combinations(others, j):
                for fact_part in combinations(facts, k - j):
                    level.append(tuple(sorted(taken.union(chosen, fact_part))))
        yield from sorted(level)


def enumerate_extensions(spec: BasisSpec, b: Base) -> Iterator[Base]:
    """Every base of the basis that contains b, in deterministic order.

    Raises:
        BaseOutsideBasis: If b itself is not in the basis.
    """
    check_in_basis(spec, b)
    universe = rule_universe(spec)
    index = rule_index(spec)
    present = tuple(sorted(index[r] for r in b))
    for indices in extension_index_sets(spec, present):
        yield Base(tuple(universe[i] for i in indices))


def enumerate_basis(spec: BasisSpec) -> Iterator[Base]:
    return enumerate_extensions(spec, EMPTY_BASE)


BASE_GRAMMAR = r"""
start: statement*

?statement: "fact" ATOM "."                                 -> fact
    | "rule" premise ("," premise)* ("=>" | "⇒") ATOM "."    -> rule

premise: discharge? ATOM
discharge: "[" ATOM* "]"

ATOM: /_?[a-z][a-z0-9_]*/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""


class _BaseBuilder(Transformer):
    def discharge(self, items):
        return tuple(str(t) for t in items)

    def premise(self, items):
        if len(items) == 2:
            return items[0], str(items[1])
        return (), str(items[0])

    def fact(self, items):
        return canonicalize_rule((), str(items[0]))

    def rule(self, items):
        return canonicalize_rule(items[:-1], str(items[-1]))

    def start(self, items):
        return Base(tuple(items))


_base_parser = Lark(BASE_GRAMMAR, parser="lalr")
_base_builder = _BaseBuilder()


def parse_base(text: str) -> Base:
    """Parse .base text (`fact c.`, `rule p, [q] r => c.`, `#` comments).

    Raises:
        BaseSyntaxError: With position and expected tokens. Nested discharge
            brackets, which would express rules above level 2, are reported
            as such.
    """
    try:
        tree = _base_parser.parse(text)
    except UnexpectedInput as e:
        line, column = syntax_error_position(text, e)
        nested = (isinstance(e, UnexpectedToken) and e.token.value == "["
                  and "RSQB" in e.expected)
        if nested:
            raise BaseSyntaxError(
                "rules above level 2 are not supported", line, column
            ) from None
        expected = getattr(e, "expected", None) or getattr(e, "allowed", None) or ()
        raise BaseSyntaxError(
            "unexpected input", line, column, describe_terminals(_base_parser, expected)
        ) from None
    return _base_builder.transform(tree)


def render_rule(rule: AtomicRule) -> str:
    if rule.is_fact:
        return f"fact {rule.conclusion}."
    premises = ", ".join(str(p) for p in rule.premises)
    return f"rule {premises} => {rule.conclusion}."


def render_base(b: Base) -> str:
    """.base text for b, one statement per line in canonical order."""
    return "".join(render_rule(rule) + "\n" for rule in b)
