"""
Translation between bases and clausal formulas for baselab.
A fact c becomes the atom c, a rule becomes an intrinsic implication from
the conjunction of its premises, and a discharging premise [Σ] P becomes
(⋀Σ) → P. Conjunctions are nested to the right.
"""
from typing import List, Sequence

from atomic import AtomicRule, Base, RulePremise, canonicalize_rule
from errors import EmptyBase, FormulaNotClausal
from syntax import And, Atom, Formula, ImpI


def conjoin(parts: Sequence[Formula]) -> Formula:
    """Right-nested conjunction of a non-empty sequence."""
    if not parts:
        raise ValueError("Cannot conjoin an empty sequence")
    result = parts[-1]
    for part in reversed(parts[:-1]):
        result = And(part, result)
    return result


def conjuncts(f: Formula) -> List[Formula]:
    """Flatten nested conjunctions in any association."""
    if isinstance(f, And):
        return conjuncts(f.left) + conjuncts(f.right)
    return [f]


def _premise_to_formula(premise: RulePremise) -> Formula:
    if not premise.discharge:
        return Atom(premise.head)
    return ImpI(conjoin([Atom(a) for a in premise.discharge]), Atom(premise.head))


def rule_to_formula(rule: AtomicRule) -> Formula:
    if rule.is_fact:
        return Atom(rule.conclusion)
    antecedent = conjoin([_premise_to_formula(p) for p in rule.premises])
    return ImpI(antecedent, Atom(rule.conclusion))


def base_to_formula(b: Base) -> Formula:
    """Conjunction of the rule translations in canonical rule order.

    Raises:
        EmptyBase: The empty base has no counterpart.
    """
    if not b.rules:
        raise EmptyBase("The empty base has no formula translation")
    return conjoin([rule_to_formula(r) for r in b.rules])


def _atom_names(f: Formula, whole: Formula) -> List[str]:
    names = []
    for part in conjuncts(f):
        if not isinstance(part, Atom):
            raise FormulaNotClausal(whole)
        names.append(part.name)
    return names


def _formula_to_premise(f: Formula, whole: Formula):
    if isinstance(f, Atom):
        return (), f.name
    if isinstance(f, ImpI) and isinstance(f.right, Atom):
        return _atom_names(f.left, whole), f.right.name
    raise FormulaNotClausal(whole)


def _formula_to_rule(f: Formula) -> AtomicRule:
    if isinstance(f, Atom):
        return canonicalize_rule((), f.name)
    if isinstance(f, ImpI) and isinstance(f.right, Atom):
        premises = [_formula_to_premise(p, f) for p in conjuncts(f.left)]
        return canonicalize_rule(premises, f.right.name)
    raise FormulaNotClausal(f)


def formula_to_base(f: Formula) -> Base:
    """The base ⦅f⦆ of a clausal formula; left inverse of base_to_formula.

    Raises:
        FormulaNotClausal: Carrying the offending conjunct.
    """
    return Base(tuple(_formula_to_rule(part) for part in conjuncts(f)))


def is_clausal(f: Formula) -> bool:
    try:
        formula_to_base(f)
    except FormulaNotClausal:
        return False
    return True
