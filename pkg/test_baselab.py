#!/usr/bin/env python3
"""
Unit tests for baselab.
Tests syntax, bases, derivability, translation, support, oracles, reports
and the command-line interface.
"""
import contextlib
import io
import json
import os
import random
import tempfile
import unittest
from unittest import mock

from atomic import (
    EMPTY_BASE, Base, BasisSpec, RulePremise, basis_size,
    canonicalize_rule, check_in_basis, enumerate_basis, enumerate_extensions,
    in_basis, parse_base, render_base, rule_universe,
)
from cli import main
from config import (
    BasisClass, RunConfig, Strategy, fresh_atoms, get_basis_defaults,
    max_enum_from_env,
)
from derivability import (
    DerivabilityCache, Judgment, brute_closure, closure, derivable_set,
    derivation_trace, derives,
)
from errors import (
    AtomOutsideVocabulary, AugmentedBaseOutsideBasis, BaseOutsideBasis,
    BaseSyntaxError, ConfigurationError, EmptyBase, EnumerationLimitExceeded,
    FormulaNotClausal, FormulaSyntaxError, TooManyAtoms, UnmappableConnective,
    VocabularyTooLarge,
)
from events import Event, EventBus, EventType
from oracles import (
    FALSUM, SAnd, SAtom, SImp, SOr, classical_valid, compare, curated_corpus,
    intuitionistic_valid, kreisel_putnam_instance, load_corpus, map_extrinsic,
    oracle_for_level,
)
from reports import ReportWriter, schema_problems
from support import EntailmentQuery, SupportContext, compare_implications
from syntax import (
    BOT, ZERO, And, Atom, Formula, Fragment, ImpE, ImpI, Oplus, Or, Tensor,
    atoms_of, fragment_of, parse_formula, render_formula,
)
from translate import (
    base_to_formula, formula_to_base, is_clausal, rule_to_formula,
)
from visualization import ReportVisualizer

HERE = os.path.dirname(os.path.abspath(__file__))
BASES_DIR = os.path.join(HERE, "bases")

P, Q, R, C = Atom("p"), Atom("q"), Atom("r"), Atom("c")


BINARY_NODES = (And, Tensor, Or, Oplus, ImpI, ImpE)


def random_formula(rng: random.Random, depth: int) -> Formula:
    """Random tree over p, q, r, ⊥ and 0 with every binary connective."""
    if depth == 0 or rng.random() < 0.2:
        return rng.choice((P, Q, R, P, Q, R, BOT, ZERO))
    node = rng.choice(BINARY_NODES)
    return node(random_formula(rng, depth - 1), random_formula(rng, depth - 1))


def rule(premises, conclusion):
    return canonicalize_rule(premises, conclusion)


def b1_pq(**options) -> SupportContext:
    """B1 context over {p, q}: 8 rules, 256 bases."""
    return SupportContext.for_formulas([P, Q], fresh=0, **options)


class TestSyntax(unittest.TestCase):
    """Test formula parsing and rendering"""

    def test_conjunction_binds_tighter_than_implication(self):
        """Test & binds tighter than ->"""
        self.assertEqual(parse_formula("p & q -> r"), ImpI(And(P, Q), R))

    def test_peirce_over_extrinsic_implication(self):
        """Test Peirce's law parses right-associatively"""
        f = parse_formula("((p -o q) -o p) -o p")
        self.assertEqual(f, ImpE(ImpE(ImpE(P, Q), P), P))

    def test_extrinsic_excluded_middle(self):
        """Test parsing p + (p -o zero)"""
        self.assertEqual(parse_formula("p + (p -o zero)"), Oplus(P, ImpE(P, ZERO)))

    def test_unicode_aliases(self):
        """Test Unicode connectives parse like their ASCII forms"""
        self.assertEqual(parse_formula("p ⊗ q ⊸ q ⊕ ⊥"), parse_formula("p * q -o q + bot"))
        self.assertEqual(parse_formula("p ∧ q → r ∨ 0"), parse_formula("p & q -> r | zero"))

    def test_negation_shorthands(self):
        """Test !b, !i and !e expand to implications"""
        self.assertEqual(parse_formula("!b p"), ImpE(P, BOT))
        self.assertEqual(parse_formula("!i p"), ImpI(P, ZERO))
        self.assertEqual(parse_formula("!e p"), ImpE(P, ZERO))

    def test_binary_operators_associate_left(self):
        """Test disjunctions and conjunctions associate to the left"""
        self.assertEqual(parse_formula("p | q | r"), Or(Or(P, Q), R))
        self.assertEqual(parse_formula("p * q * r"), Tensor(Tensor(P, Q), R))

    def test_render(self):
        """Test rendering with minimal parentheses"""
        self.assertEqual(render_formula(And(P, Q)), "p & q")
        self.assertEqual(render_formula(ImpI(P, ImpI(Q, R))), "p -> q -> r")
        self.assertEqual(render_formula(Tensor(Or(P, Q), R)), "(p | q) * r")
        self.assertEqual(str(ImpE(ImpE(P, Q), P)), "(p -o q) -o p")
        self.assertEqual(render_formula(ImpE(ImpE(P, Q), P), unicode=True), "(p ⊸ q) ⊸ p")
        self.assertEqual(render_formula(Oplus(P, ZERO), unicode=True), "p ⊕ 0")

    def test_render_reparses(self):
        """Test rendered formulas parse back to the same tree"""
        texts = [
            "((p -o q) -o p) -o p", "p + (p -o zero)", "(p | q) * r",
            "p & (q | r)", "(p -> q) -> c", "p -o q -o r", "(p + q) + p -o p + (q + p)",
            "!b (p & q)",
        ]
        for text in texts:
            f = parse_formula(text)
            self.assertEqual(parse_formula(render_formula(f)), f)
            self.assertEqual(parse_formula(render_formula(f, unicode=True)), f)

    def test_random_trees_reparse(self):
        """Test parse(render(f)) == f over seeded random trees"""
        rng = random.Random(7)
        for _ in range(500):
            f = random_formula(rng, rng.randint(0, 5))
            self.assertEqual(parse_formula(render_formula(f)), f, render_formula(f))
            self.assertEqual(parse_formula(render_formula(f, unicode=True)), f)

    def test_reserved_prefix_rejected(self):
        """Test atoms with the fresh-atom prefix do not parse in formulas"""
        with self.assertRaises(FormulaSyntaxError):
            parse_formula("_f1 -o p")
        with self.assertRaises(FormulaSyntaxError):
            parse_formula("p & _q")

    def test_syntax_error_position(self):
        """Test syntax errors report line, column and expected tokens"""
        with self.assertRaises(FormulaSyntaxError) as cm:
            parse_formula("p & & q")
        self.assertEqual(cm.exception.position, (1, 5))
        self.assertIn("(", cm.exception.expected)

    def test_atoms_of(self):
        """Test collecting atoms"""
        self.assertEqual(atoms_of(BOT), frozenset())
        self.assertEqual(atoms_of(ImpE(P, Oplus(Q, P))), {"p", "q"})
        self.assertEqual(atoms_of(parse_formula("t1 + t2 + t3")), {"t1", "t2", "t3"})

    def test_fragments(self):
        """Test fragment classification"""
        self.assertEqual(fragment_of(ImpI(And(P, Q), R)), Fragment.CLAUSAL)
        self.assertEqual(fragment_of(ImpE(P, Oplus(Q, ZERO))), Fragment.EXTRINSIC)
        self.assertEqual(fragment_of(ImpE(P, Or(Q, R))), Fragment.HYBRID)
        self.assertEqual(fragment_of(Or(P, ImpI(P, Q))), Fragment.GENERAL)


class TestAtomic(unittest.TestCase):
    """Test rules, bases and bases-of-bases"""

    def test_canonical_rule(self):
        """Test premises are sorted and de-duplicated"""
        r = rule(["q", "p", "p"], "c")
        self.assertEqual(r.premises, (RulePremise((), "p"), RulePremise((), "q")))
        self.assertEqual(r, rule(["p", "q"], "c"))

    def test_levels(self):
        """Test rule levels"""
        self.assertEqual(rule([], "c").level, 0)
        self.assertEqual(rule(["p", "q"], "c").level, 1)
        self.assertEqual(rule([(["p"], "q")], "c").level, 2)
        self.assertEqual(Base((rule([], "c"), rule([(["p"], "q")], "c"))).level, 2)

    def test_parent_rule(self):
        """Test the instantiated parent rule"""
        r = rule([(["fa"], "old"), (["mo"], "old"), ([], "par")], "old")
        self.assertEqual(len(r.premises), 3)
        self.assertEqual(r.level, 2)
        self.assertEqual(str(r), "par, ([fa] old), ([mo] old) ⇒ old")

    def test_base_is_a_set(self):
        """Test bases ignore order and duplicates"""
        a, b = rule([], "p"), rule(["p"], "q")
        self.assertEqual(Base((a, b, a)), Base((b, a)))
        self.assertEqual(len(Base((a, b, a))), 2)

    def test_universe_sizes(self):
        """Test rule universe counts"""
        self.assertEqual(len(rule_universe(BasisSpec(("p", "q"), 1, 2, 0))), 8)
        self.assertEqual(len(rule_universe(BasisSpec(("p",), 1, 1, 0))), 2)
        self.assertEqual(len(rule_universe(BasisSpec(("p",), 2, 1, 1))), 3)
        self.assertEqual(len(rule_universe(BasisSpec(("p", "q"), 2, 1, 1))), 14)

    def test_level_one_forces_no_discharge(self):
        """Test level-1 specs ignore max_discharge"""
        spec = BasisSpec(("p",), 1, 1, 3)
        self.assertEqual(spec.max_discharge, 0)
        self.assertTrue(all(r.level <= 1 for r in rule_universe(spec)))

    def test_invalid_spec(self):
        """Test invalid bounds raise"""
        with self.assertRaises(ConfigurationError):
            BasisSpec(("p",), 3, 1, 1)
        with self.assertRaises(ConfigurationError):
            BasisSpec(("p",), 1, 1, 0, max_rules=0)

    def test_enumerate_small_basis(self):
        """Test enumeration order over a tiny capped basis"""
        spec = BasisSpec(("p",), 1, 1, 0, max_rules=2)
        fact, loop = rule([], "p"), rule(["p"], "p")
        self.assertEqual(list(enumerate_basis(spec)), [
            EMPTY_BASE, Base((fact,)), Base((loop,)), Base((fact, loop)),
        ])

    def test_top_of_lattice(self):
        """Test the full universe has no proper extension"""
        spec = BasisSpec(("p", "q"), 1, 2, 0, max_rules=8)
        full = Base(rule_universe(spec))
        self.assertEqual(list(enumerate_extensions(spec, full)), [full])

    def test_extensions_are_supersets_in_basis(self):
        """Test extensions equal the basis filtered to supersets of b"""
        specs = (
            BasisSpec(("p", "q"), 1, 2, 0),
            BasisSpec(("p", "q"), 1, 2, 0, max_rules=2),
            BasisSpec(("p", "q"), 2, 1, 1, max_rules=2, fact_closed=True),
        )
        for spec in specs:
            basis = list(enumerate_basis(spec))
            for b in basis:
                expected = {c for c in basis if b.issubset(c)}
                self.assertEqual(set(enumerate_extensions(spec, b)), expected)

    def test_extension_order_laws(self):
        """Test extension is reflexive and transitive"""
        spec = BasisSpec(("p", "q"), 2, 1, 1, max_rules=2, fact_closed=True)
        basis = list(enumerate_basis(spec))
        rng = random.Random(7)
        for b in rng.sample(basis, 12):
            above_b = set(enumerate_extensions(spec, b))
            self.assertIn(b, above_b)
            for c in above_b:
                self.assertIn(c, set(enumerate_extensions(spec, c)))
                self.assertLessEqual(set(enumerate_extensions(spec, c)), above_b)

    def test_basis_size_matches_enumeration(self):
        """Test basis_size against enumeration, capped and fact-closed"""
        capped = BasisSpec(("p", "q"), 1, 2, 0, max_rules=2)
        self.assertEqual(basis_size(capped), 1 + 8 + 28)
        self.assertEqual(len(list(enumerate_basis(capped))), basis_size(capped))

        closed = BasisSpec(("p", "q"), 1, 2, 0, max_rules=1, fact_closed=True)
        self.assertEqual(basis_size(closed), 4 * 7)
        self.assertEqual(len(list(enumerate_basis(closed))), basis_size(closed))

        unbounded = BasisSpec(("p",), 2, 1, 1)
        self.assertEqual(basis_size(unbounded), 8)
        self.assertEqual(len(list(enumerate_basis(unbounded))), 8)

    def test_basis_membership(self):
        """Test in_basis and check_in_basis"""
        spec = BasisSpec(("p", "q"), 1, 1, 0, max_rules=1)
        self.assertTrue(in_basis(spec, Base((rule([], "p"),))))
        self.assertFalse(in_basis(spec, Base((rule([], "p"), rule([], "q")))))
        self.assertFalse(in_basis(spec, Base((rule(["p", "q"], "p"),))))
        with self.assertRaises(BaseOutsideBasis):
            check_in_basis(spec, Base((rule(["p", "q"], "p"),)))

    def test_parse_socrates(self):
        """Test parsing the Socrates base"""
        b = parse_base("fact h_s. rule h_s => m_s.")
        self.assertEqual(b, Base((rule([], "h_s"), rule(["h_s"], "m_s"))))

    def test_parse_parent(self):
        """Test parsing a level-2 base with comments"""
        b = parse_base(
            "# parents\nrule [fa] old, [mo] old, par => old. rule fa => old.\n"
            "rule mo => old. fact par."
        )
        self.assertEqual(len(b), 4)
        self.assertEqual(b.level, 2)

    def test_render_is_canonical(self):
        """Test render(parse(t)) is the canonical form of t"""
        b = parse_base("rule h_s ⇒ m_s.   fact h_s.")
        self.assertEqual(render_base(b), "fact h_s.\nrule h_s => m_s.\n")
        self.assertEqual(parse_base(render_base(b)), b)

    def test_parse_errors(self):
        """Test malformed and level-3 bases are rejected"""
        with self.assertRaises(BaseSyntaxError):
            parse_base("fact p")
        with self.assertRaises(BaseSyntaxError) as cm:
            parse_base("rule [[p] q] r => c.")
        self.assertIn("level 2", str(cm.exception))


class TestDerivability(unittest.TestCase):
    """Test the atomic derivability judgment"""

    def setUp(self):
        self.socrates = parse_base("fact h_s. rule h_s => m_s.")
        self.parent = parse_base(
            "rule [fa] old, [mo] old, par => old. rule fa => old. rule mo => old. fact par."
        )

    def test_socrates_is_mortal(self):
        """Test a two-step derivation"""
        self.assertTrue(derives(self.socrates, (), "m_s"))

    def test_assumption_is_derivation(self):
        """Test assumptions are derivable in the empty base"""
        self.assertTrue(derives(EMPTY_BASE, {"p"}, "p"))
        self.assertFalse(derives(EMPTY_BASE, (), "p"))

    def test_discharging_premises(self):
        """Test premises derived under discharged assumptions"""
        self.assertTrue(derives(self.parent, (), "old"))

    def test_closure_examples(self):
        """Test closures with and without a discharge"""
        self.assertEqual(closure(Base((rule([], "p"),))), {"p"})
        self.assertEqual(closure(Base((rule([(["p"], "q")], "q"),))), frozenset())
        self.assertEqual(
            closure(Base((rule([(["p"], "q")], "q"), rule(["p"], "q")))), {"q"}
        )

    def test_derivable_set(self):
        """Test the derivable set restricted to a vocabulary"""
        b = Base((rule([], "p"), rule(["p"], "q")))
        self.assertEqual(derivable_set(b, (), ("p", "q", "r")), {"p", "q"})
        self.assertEqual(derivable_set(EMPTY_BASE, {"r"}, ("p", "q", "r")), {"r"})
        self.assertEqual(derivable_set(self.socrates, (), ("h_s", "m_s")), {"h_s", "m_s"})

    def test_brute_closure_agrees(self):
        """Test the brute-force oracle on the sample bases"""
        for b in (self.socrates, self.parent):
            self.assertEqual(brute_closure(b), closure(b))
        self.assertEqual(brute_closure(self.parent, {"fa"}), closure(self.parent, {"fa"}))

    def test_brute_closure_refuses_large_vocabulary(self):
        """Test the brute-force oracle limit"""
        vocab = [f"a{i}" for i in range(17)]
        with self.assertRaises(VocabularyTooLarge):
            brute_closure(EMPTY_BASE, (), vocab)

    def test_trace(self):
        """Test a witness derivation tree"""
        trace = derivation_trace(self.socrates, (), "m_s")
        self.assertEqual(trace.atom, "m_s")
        self.assertEqual(trace.rule, rule(["h_s"], "m_s"))
        self.assertEqual(trace.size(), 2)
        self.assertEqual(trace.children[0].rule, rule([], "h_s"))
        self.assertIsNone(derivation_trace(self.socrates, (), "p"))

    def test_trace_extends_context(self):
        """Test premises with discharges are derived in larger contexts"""
        b = Base((rule([(["p"], "q")], "c"), rule(["p"], "q")))
        trace = derivation_trace(b, (), "c")
        child = trace.children[0]
        self.assertEqual(child.context, ("p",))
        self.assertEqual(child.atom, "q")
        self.assertTrue(child.children[0].is_assumption)
        self.assertEqual(trace.size(), 3)

    def test_judgment(self):
        """Test judgments as values"""
        judgment = Judgment(self.socrates, (), "m_s")
        self.assertTrue(judgment.holds())
        self.assertEqual(str(judgment), "⊢ m_s")
        self.assertEqual(str(Judgment(EMPTY_BASE, ("q", "p"), "p")), "p, q ⊢ p")

    def test_cache(self):
        """Test the derivability cache counts hits"""
        cache = DerivabilityCache()
        first = cache.closure("s", self.socrates.rules)
        second = cache.closure("s", self.socrates.rules)
        self.assertEqual(first, second)
        self.assertEqual((cache.hits, cache.misses), (1, 1))
        cache.clear()
        self.assertEqual(len(cache), 0)

    def test_monotone_in_base_and_context(self):
        """Test adding a rule or an assumption never loses a derivable atom"""
        spec = BasisSpec(("p", "q"), 1, 2, 0)
        universe = rule_universe(spec)
        contexts = [frozenset(s) for s in ((), ("p",), ("q",), ("p", "q"))]
        for b in enumerate_basis(spec):
            for gamma in contexts:
                derived = closure(b, gamma)
                for extra in universe:
                    self.assertLessEqual(derived, closure(b.union([extra]), gamma))
                for atom in ("p", "q"):
                    self.assertLessEqual(derived, closure(b, gamma | {atom}))

    def test_closure_laws(self):
        """Test closure is extensive, monotone and idempotent"""
        small = list(enumerate_basis(BasisSpec(("p",), 2, 1, 1)))
        universe = rule_universe(BasisSpec(("p", "q"), 2, 1, 1))
        rng = random.Random(2024)
        sampled = [Base(tuple(r for r in universe if rng.random() < 0.3))
                   for _ in range(60)]
        contexts = [frozenset(s) for s in ((), ("p",), ("q",), ("p", "q"))]
        for b in small + sampled:
            for gamma in contexts:
                derived = closure(b, gamma)
                self.assertLessEqual(gamma, derived)
                self.assertEqual(closure(b, derived), derived)
                for wider in contexts:
                    if gamma <= wider:
                        self.assertLessEqual(derived, closure(b, wider))


class TestTranslate(unittest.TestCase):
    """Test the base/formula translation"""

    def test_rule_to_formula(self):
        """Test the three rule shapes"""
        self.assertEqual(rule_to_formula(rule([], "c")), C)
        self.assertEqual(rule_to_formula(rule(["p", "q"], "c")), ImpI(And(P, Q), C))
        self.assertEqual(rule_to_formula(rule([(["p"], "q")], "c")), ImpI(ImpI(P, Q), C))

    def test_base_to_formula(self):
        """Test bases become conjunctions in canonical order"""
        self.assertEqual(base_to_formula(Base((rule([], "p"),))), P)
        b = Base((rule(["p"], "q"), rule([], "p")))
        self.assertEqual(base_to_formula(b), And(P, ImpI(P, Q)))
        with self.assertRaises(EmptyBase):
            base_to_formula(EMPTY_BASE)

    def test_formula_to_base(self):
        """Test clausal formulas become bases"""
        self.assertEqual(formula_to_base(parse_formula("(p & q) -> c")),
                         Base((rule(["p", "q"], "c"),)))
        self.assertEqual(formula_to_base(parse_formula("p & (p -> q)")),
                         Base((rule([], "p"), rule(["p"], "q"))))
        with self.assertRaises(FormulaNotClausal):
            formula_to_base(parse_formula("p -o q"))

    def test_is_clausal(self):
        """Test the clausal fragment"""
        self.assertTrue(is_clausal(parse_formula("(p -> q) -> c")))
        self.assertFalse(is_clausal(parse_formula("((p -> q) -> r) -> s")))
        self.assertFalse(is_clausal(parse_formula("p | q")))


class TestConfig(unittest.TestCase):
    """Test presets and run configuration"""

    def test_presets(self):
        """Test basis presets"""
        self.assertEqual(get_basis_defaults(BasisClass.B1).max_discharge, 0)
        self.assertEqual(get_basis_defaults(BasisClass.B2).max_discharge, 1)
        self.assertIsNone(get_basis_defaults(BasisClass.B2).max_rules)
        self.assertEqual(BasisClass.B2.level, 2)

    def test_b1_forces_no_discharge(self):
        """Test b1 configs never discharge"""
        self.assertEqual(RunConfig(basis=BasisClass.B1, max_discharge=2).max_discharge, 0)

    def test_invalid_config(self):
        """Test invalid bounds raise"""
        with self.assertRaises(ConfigurationError):
            RunConfig(max_rules=0)
        with self.assertRaises(ConfigurationError):
            RunConfig(fresh=-1)
        with self.assertRaises(ConfigurationError):
            RunConfig(output="xml")

    def test_max_enum_from_env(self):
        """Test BASELAB_MAX_ENUM parsing"""
        self.assertEqual(max_enum_from_env({}), 2 ** 24)
        self.assertEqual(max_enum_from_env({"BASELAB_MAX_ENUM": "100"}), 100)
        with self.assertRaises(ConfigurationError):
            max_enum_from_env({"BASELAB_MAX_ENUM": "lots"})

    def test_fresh_atoms(self):
        """Test fresh atom names avoid taken ones"""
        self.assertEqual(fresh_atoms(2, {"_f1", "p"}), ("_f2", "_f3"))
        self.assertEqual(fresh_atoms(0, ()), ())

    def test_resolve_vocab(self):
        """Test automatic fresh atoms stay within the enumeration limit"""
        self.assertEqual(set(RunConfig().resolve_vocab({"p", "q"})), {"p", "q", "_f1"})
        b2 = RunConfig(basis=BasisClass.B2)
        self.assertEqual(set(b2.resolve_vocab({"p"})), {"p", "_f1"})
        self.assertEqual(set(b2.resolve_vocab({"p", "q"})), {"p", "q"})
        self.assertEqual(set(RunConfig(fresh=2).resolve_vocab({"p"})), {"p", "_f1", "_f2"})
        with self.assertRaises(ConfigurationError):
            RunConfig(vocab=("p",)).resolve_vocab({"p", "q"})


class TestEventSystem(unittest.TestCase):
    """Test event system"""

    def test_event_subscription(self):
        """Test event subscription and publishing"""
        bus = EventBus()
        received = []
        bus.subscribe(EventType.COUNTERMODEL_FOUND, received.append)
        bus.publish(Event(EventType.COUNTERMODEL_FOUND, {"formula": "p"}))
        self.assertEqual(len(received), 1)
        self.assertEqual(received[0].data["formula"], "p")

    def test_event_history(self):
        """Test event history tracking"""
        bus = EventBus()
        bus.emit(EventType.QUERY_FINISHED, query="supports")
        bus.emit(EventType.STRATEGY_SELECTED, strategy="lattice")
        self.assertEqual(len(bus.get_history()), 2)
        self.assertEqual(len(bus.get_history(EventType.QUERY_FINISHED)), 1)
        self.assertEqual(bus.counts(), {"query_finished": 1, "strategy_selected": 1})
        bus.clear_history()
        self.assertEqual(bus.get_history(), [])

    def test_unsubscribe(self):
        """Test unsubscribed callbacks stop receiving events"""
        bus = EventBus(keep_history=False)
        received = []
        bus.subscribe_all(received.append)
        bus.unsubscribe(EventType.QUERY_FINISHED, received.append)
        bus.emit(EventType.QUERY_FINISHED)
        bus.emit(EventType.FALLBACK_EVALUATION)
        self.assertEqual([e.event_type for e in received], [EventType.FALLBACK_EVALUATION])
        self.assertEqual(bus.get_history(), [])
        self.assertEqual(bus.counts()["query_finished"], 1)

    def test_context_publishes(self):
        """Test support contexts publish strategy and query events"""
        bus = EventBus()
        ctx = b1_pq(event_bus=bus)
        ctx.supports(EMPTY_BASE, P)
        self.assertEqual(bus.get_history(EventType.STRATEGY_SELECTED)[0].data["strategy"],
                         "lattice")
        self.assertTrue(bus.get_history(EventType.QUERY_FINISHED))


class TestSupport(unittest.TestCase):
    """Test the support relation"""

    def test_tensor_collapses_at_atoms(self):
        """Test p * q is supported exactly where p and q are"""
        ctx = b1_pq()
        both = Base((rule([], "p"), rule([], "q")))
        self.assertTrue(ctx.supports(both, Tensor(P, Q)))
        for b in ctx.bases():
            self.assertEqual(ctx.supports(b, Tensor(P, Q)),
                             ctx.supports(b, P) and ctx.supports(b, Q))

    def test_implication_to_bot_never_supported(self):
        """Test φ -> bot fails on every base"""
        ctx = b1_pq()
        f = parse_formula("p -> bot")
        self.assertFalse(any(ctx.supports(b, f) for b in ctx.bases()))

    def test_classical_laws_in_b1(self):
        """Test Peirce holds and p -o q fails over level-1 bases"""
        ctx = b1_pq()
        self.assertTrue(ctx.valid(parse_formula("((p -o q) -o p) -o p")))
        self.assertTrue(ctx.valid(parse_formula("p -o p")))
        self.assertFalse(ctx.valid(parse_formula("p -o q")))

    def test_intrinsic_disjunction_implies_extrinsic(self):
        """Test p | q is never supported without p + q"""
        ctx = b1_pq()
        for b in ctx.bases():
            if ctx.supports(b, Or(P, Q)):
                self.assertTrue(ctx.supports(b, Oplus(P, Q)))

    def test_zero_clause(self):
        """Test zero is supported exactly where every atom is derivable"""
        ctx = b1_pq()
        for b in ctx.bases():
            self.assertEqual(ctx.supports(b, ZERO),
                             derivable_set(b, (), ctx.spec.vocab) == set(ctx.spec.vocab))
            self.assertFalse(ctx.supports(b, BOT))

    def test_excluded_middle_fails_in_b2(self):
        """Test p + (p -o zero) has a countermodel over level-2 bases"""
        em = parse_formula("p + (p -o zero)")
        ctx = SupportContext.for_formulas([em], level=2, fresh=1, max_premises=1)
        self.assertFalse(ctx.valid(em))
        witness = ctx.countermodel(em)
        self.assertEqual(witness, EMPTY_BASE)
        self.assertFalse(ctx.supports(witness, em))

    def test_countermodels(self):
        """Test countermodel search"""
        ctx = b1_pq()
        self.assertEqual(ctx.countermodel(P), EMPTY_BASE)
        self.assertIsNone(ctx.countermodel(parse_formula("p -o p")))

    def test_entailment(self):
        """Test reflexivity and empty hypotheses"""
        ctx = b1_pq()
        self.assertTrue(ctx.entails(EMPTY_BASE, [P], P))
        self.assertFalse(ctx.entails(EMPTY_BASE, [], P))
        self.assertTrue(ctx.entails(Base((rule([], "p"),)), [], P))
        self.assertTrue(ctx.query(EntailmentQuery((And(P, Q),), P)))
        self.assertFalse(ctx.query(EntailmentQuery((Q,), P)))

    def test_lottery(self):
        """Test the three-ticket lottery under both strategies"""
        b = parse_base("rule t1 => sup. rule t2 => sup. rule t3 => sup.")
        tickets = parse_formula("t1 + t2 + t3")
        for strategy in (Strategy.RECURSIVE, Strategy.LATTICE):
            ctx = SupportContext.for_formulas(
                [tickets, Atom("sup")], fresh=0, max_premises=1, max_rules=4,
                strategy=strategy,
            )
            self.assertTrue(ctx.entails(b, [tickets], Atom("sup")))
            self.assertFalse(ctx.entails(EMPTY_BASE, [tickets], Atom("sup")))

    def test_augmented_base_outside_basis(self):
        """Test the (->) clause refuses to leave a capped basis"""
        f = parse_formula("q -> (p -o p)")
        b = Base((rule([], "p"),))
        for strategy in (Strategy.RECURSIVE, Strategy.LATTICE):
            ctx = SupportContext.for_formulas([P, Q], fresh=0, max_rules=1, strategy=strategy)
            with self.assertRaises(AugmentedBaseOutsideBasis):
                ctx.supports(b, f)

    def test_capped_augmentation_strategies_agree(self):
        """Test both strategies answer (->) queries that stay under the cap"""
        f = parse_formula("q -> (p -o p)")

        def outcome(ctx, b):
            try:
                return ctx.supports(b, f)
            except AugmentedBaseOutsideBasis:
                return "outside"

        bus = EventBus()
        recursive = SupportContext.for_formulas([P, Q], fresh=0, max_rules=1,
                                                strategy=Strategy.RECURSIVE)
        lattice = SupportContext.for_formulas([P, Q], fresh=0, max_rules=1,
                                              strategy=Strategy.LATTICE, event_bus=bus)
        self.assertTrue(lattice.supports(EMPTY_BASE, f))
        self.assertTrue(bus.get_history(EventType.FALLBACK_EVALUATION))
        bases = list(recursive.bases())
        self.assertEqual(len(bases), 9)
        for b in bases:
            self.assertEqual(outcome(recursive, b), outcome(lattice, b), str(b))
        self.assertEqual(outcome(lattice, Base((rule([], "q"),))), True)
        self.assertEqual(outcome(lattice, Base((rule([], "p"),))), "outside")

    def test_intrinsic_consequent_outside_universe(self):
        """Test intrinsic consequents are evaluated on the augmented rules"""
        f = parse_formula("(p & q -> q) -> q")
        for strategy in (Strategy.RECURSIVE, Strategy.LATTICE):
            bus = EventBus()
            ctx = SupportContext.for_formulas([f], fresh=0, max_premises=1,
                                              strategy=strategy, event_bus=bus)
            self.assertFalse(ctx.supports(EMPTY_BASE, f))
            self.assertTrue(ctx.supports(Base((rule([], "p"), rule([], "q"))), f))
            self.assertTrue(bus.get_history(EventType.FALLBACK_EVALUATION))

        extrinsic = parse_formula("(p & q -> q) -> (p -o q)")
        ctx = SupportContext.for_formulas([extrinsic], fresh=0, max_premises=1)
        with self.assertRaises(AugmentedBaseOutsideBasis):
            ctx.supports(EMPTY_BASE, extrinsic)

    def test_query_errors(self):
        """Test vocabulary, clausal and enumeration errors"""
        ctx = b1_pq()
        with self.assertRaises(AtomOutsideVocabulary):
            ctx.supports(EMPTY_BASE, R)
        with self.assertRaises(FormulaNotClausal):
            ctx.supports(EMPTY_BASE, parse_formula("(p -o q) -> p"))
        with self.assertRaises(EnumerationLimitExceeded):
            b1_pq(max_enum=100)
        with self.assertRaises(EnumerationLimitExceeded):
            SupportContext.for_formulas([P, Q, R, Atom("s")], fresh=0, max_rules=1,
                                        strategy=Strategy.LATTICE)

    def test_monotonicity(self):
        """Test no support is lost along extensions"""
        ctx = b1_pq()
        formulas = [parse_formula(t) for t in ("p", "p -o q", "p + q", "p & q")]
        report = ctx.check_monotonicity(formulas)
        self.assertTrue(report.ok)
        self.assertEqual(report.formulas_checked, 4)
        self.assertEqual(report.bases_checked, 4 * 256)

    def test_strategies_agree(self):
        """Test recursive and lattice strategies on every base"""
        recursive = b1_pq(strategy=Strategy.RECURSIVE)
        lattice = b1_pq(strategy=Strategy.LATTICE)
        texts = ["p -o q", "p + q", "p * q", "(p -o q) -o p", "p -> q",
                 "(p -> q) + (q -> p)", "zero -o p", "p + (p -o zero)", "p | (p -o q)"]
        for text in texts:
            f = parse_formula(text)
            for b in recursive.bases():
                self.assertEqual(recursive.supports(b, f), lattice.supports(b, f),
                                 f"{text} at {b}")

    def test_paranoid_validity(self):
        """Test paranoid validity agrees with the audited shortcut"""
        quick, paranoid = b1_pq(), b1_pq(paranoid=True)
        for text in ("p -o p", "p + (p -o zero)", "p -o q", "zero -o p"):
            f = parse_formula(text)
            self.assertEqual(quick.valid(f), paranoid.valid(f))

    def test_recursive_stats(self):
        """Test evaluation statistics are collected"""
        ctx = b1_pq(strategy=Strategy.RECURSIVE)
        ctx.valid(parse_formula("p -o p"))
        self.assertGreater(ctx.stats.bases_enumerated, 0)
        self.assertGreater(ctx.stats.wall_ms, 0)

    def test_compare_implications(self):
        """Test p -> q and p -o q agree over level-1 bases"""
        report = compare_implications(b1_pq(), P, Q)
        self.assertTrue(report.agree)
        self.assertEqual(report.bases_checked, 256)

    def test_random_bases_are_monotone(self):
        """Test support is preserved from random bases to random extensions"""
        rng = random.Random(7)
        ctx = b1_pq()
        universe = rule_universe(ctx.spec)
        formulas = [parse_formula(t) for t in ("p -o q", "p + q", "(p -o q) -o p", "p * q")]
        for _ in range(50):
            small = Base(tuple(r for r in universe if rng.random() < 0.3))
            large = small.union(r for r in universe if rng.random() < 0.3)
            for f in formulas:
                if ctx.supports(small, f):
                    self.assertTrue(ctx.supports(large, f))

    def test_truncated_audit_is_reported(self):
        """Test a per-base audit stopping at its limit says so"""
        bus = EventBus()
        ctx = b1_pq(strategy=Strategy.RECURSIVE, audit_limit=10, event_bus=bus)
        f = parse_formula("p -o p")
        self.assertTrue(ctx.valid(f))
        report = ctx.audit(f)
        self.assertTrue(report.truncated)
        self.assertEqual(report.bases_checked, 10)
        self.assertTrue(bus.get_history(EventType.AUDIT_TRUNCATED))

        full = b1_pq(strategy=Strategy.LATTICE, audit_limit=10)
        full.valid(f)
        self.assertFalse(full.audit(f).truncated)
        self.assertEqual(full.audit(f).bases_checked, 256)

    def test_fresh_atoms_stay_out_of_queries(self):
        """Test fresh atoms belong to the vocabulary but not to formulas"""
        ctx = SupportContext.for_formulas([P], fresh=1)
        self.assertEqual(ctx.fresh_vocab, ("_f1",))
        with self.assertRaises(AtomOutsideVocabulary):
            ctx.supports(EMPTY_BASE, Atom("_f1"))
        wider = ctx.widened()
        self.assertEqual(wider.fresh_vocab, ("_f1", "_f2"))
        self.assertEqual(set(wider.spec.vocab), {"p", "_f1", "_f2"})


class TestOracles(unittest.TestCase):
    """Test classical and intuitionistic oracles"""

    def test_mapping(self):
        """Test the extrinsic-to-standard mapping"""
        self.assertEqual(map_extrinsic(parse_formula("p -o q + zero")),
                         SImp(SAtom("p"), SOr(SAtom("q"), FALSUM)))
        self.assertEqual(map_extrinsic(Tensor(P, Q)), SAnd(SAtom("p"), SAtom("q")))
        self.assertEqual(str(map_extrinsic(parse_formula("p -o q + zero"))), "p ⊃ q ∨ ⊥")
        with self.assertRaises(UnmappableConnective):
            map_extrinsic(ImpI(P, Q))
        with self.assertRaises(UnmappableConnective):
            map_extrinsic(ImpE(P, BOT))

    def test_classical(self):
        """Test truth tables"""
        self.assertTrue(classical_valid(map_extrinsic(parse_formula("((p -o q) -o p) -o p"))))
        self.assertFalse(classical_valid(map_extrinsic(parse_formula("p -o q"))))
        self.assertTrue(classical_valid(map_extrinsic(parse_formula("!e !e p -o p"))))

    def test_truth_table_limit(self):
        """Test the truth-table atom limit"""
        f = SAtom("a0")
        for i in range(1, 21):
            f = SOr(f, SAtom(f"a{i}"))
        with self.assertRaises(TooManyAtoms):
            classical_valid(f)

    def test_intuitionistic(self):
        """Test the sequent calculus decision procedure"""
        valid = ["p -o p", "zero -o p", "p * q -o q * p", "(p -o q) -o (q -o zero) -o p -o zero",
                 "((p + (p -o zero)) -o zero) -o zero", "p + q -o q + p"]
        invalid = ["((p -o q) -o p) -o p", "((p -o zero) -o zero) -o p",
                   "p + (p -o zero)", "p -o q"]
        for text in valid:
            self.assertTrue(intuitionistic_valid(map_extrinsic(parse_formula(text))), text)
        for text in invalid:
            self.assertFalse(intuitionistic_valid(map_extrinsic(parse_formula(text))), text)

    def test_kreisel_putnam_mapped_form(self):
        """Test the mapped Kreisel-Putnam instance is not intuitionistic"""
        kp = kreisel_putnam_instance(P, Q, R)
        self.assertEqual(kp, parse_formula("(p -o q | r) -o (p -o q) | (p -o r)"))
        self.assertFalse(intuitionistic_valid(map_extrinsic(kp)))
        self.assertTrue(classical_valid(map_extrinsic(kp)))

    def test_oracle_for_level(self):
        """Test oracle selection by level"""
        self.assertEqual(oracle_for_level(1), "classical")
        self.assertEqual(oracle_for_level(2), "intuitionistic")

    def test_compare_in_b2(self):
        """Test comparison records over level-2 bases"""
        peirce = parse_formula("((p -o q) -o p) -o p")
        ctx = SupportContext.for_formulas([peirce], level=2, fresh=0, max_premises=1)
        record = compare(ctx, peirce)
        self.assertEqual((record.bes_valid, record.oracle_valid, record.agree),
                         (False, False, True))
        record = compare(ctx, parse_formula("p -o p"))
        self.assertEqual((record.bes_valid, record.oracle_valid), (True, True))

    def test_compare_widens_on_disagreement(self):
        """Test a disagreement over {p} is retried with a fresh atom"""
        em = parse_formula("p + (p -o zero)")
        ctx = SupportContext.for_formulas([em], level=2, fresh=0, max_premises=1)
        self.assertTrue(ctx.valid(em))
        record = compare(ctx, em)
        self.assertEqual((record.bes_valid, record.oracle_valid), (False, False))
        self.assertEqual(record.attempts, 2)
        self.assertEqual(set(record.vocab), {"p", "_f1"})

        stuck = compare(ctx, em, max_fresh=0)
        self.assertFalse(stuck.agree)
        self.assertEqual((stuck.attempts, stuck.vocab), (1, ("p",)))

    def test_corpus(self):
        """Test the curated corpus and corpus files"""
        corpus = curated_corpus()
        self.assertEqual(len(corpus), 10)
        self.assertTrue(all(len(atoms_of(f)) <= 2 for _, f in corpus))
        entries = load_corpus("# comment\npeirce: ((p -o q) -o p) -o p\n\np -o p  # identity\n")
        self.assertEqual([name for name, _ in entries], ["peirce", "line4"])
        with open(os.path.join(HERE, "corpus.txt"), "r", encoding="utf-8") as f:
            self.assertEqual(load_corpus(f.read()), corpus)


class TestReports(unittest.TestCase):
    """Test report serialization"""

    def setUp(self):
        self.writer = ReportWriter()
        self.base = parse_base("rule [fa] old, par => old. fact par.")

    def test_build_report(self):
        """Test reports match the shipped schema"""
        report = self.writer.build_report("valid", {"formula": "p -o p"}, {}, True)
        self.assertNotIn("witness", report)
        self.assertEqual(schema_problems(report), [])
        del report["stats"]
        self.assertIn("$.stats: missing", schema_problems(report))

    def test_base_serialization(self):
        """Test bases survive serialization"""
        data = self.writer.serialize_base(self.base)
        self.assertEqual(data["text"], render_base(self.base))
        self.assertEqual(self.writer.deserialize_base(data), self.base)

    def test_save_and_load(self):
        """Test saving and loading reports"""
        report = self.writer.build_report("countermodel", {}, {}, False,
                                          witness={"base": self.writer.serialize_base(self.base)})
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "out", "report.json")
            self.assertTrue(self.writer.save_report(report, path))
            self.assertEqual(self.writer.load_report(path), report)
            self.assertIsNone(self.writer.load_report(os.path.join(tmp, "missing.json")))


class TestVisualization(unittest.TestCase):
    """Test text rendering"""

    def test_comparison_table(self):
        """Test comparison tables summarize agreement"""
        ctx = b1_pq()
        records = [compare(ctx, parse_formula("p -o p")), compare(ctx, parse_formula("p -o q"))]
        table = ReportVisualizer().render_comparison(records, ["identity", "non_theorem"])
        self.assertIn("identity", table)
        self.assertTrue(table.endswith("2/2 agree"))

    def test_trace_tree(self):
        """Test derivation trees are drawn with branches"""
        trace = derivation_trace(parse_base("fact h_s. rule h_s => m_s."), (), "m_s")
        text = ReportVisualizer().render_trace(trace)
        self.assertTrue(text.startswith("⊢ m_s"))
        self.assertIn("└── ⊢ h_s", text)

    def test_monotonicity_summary(self):
        """Test monotonicity audit rendering"""
        report = b1_pq().check_monotonicity([P])
        text = ReportVisualizer().render_monotonicity(report)
        self.assertIn("violations:       0", text)


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stderr(err):
        code = main(list(argv), out=out)
    return code, out.getvalue(), err.getvalue()


class TestCLI(unittest.TestCase):
    """Test the command-line interface"""

    def base_path(self, name):
        return os.path.join(BASES_DIR, name)

    def test_derive(self):
        """Test derive exit codes"""
        self.assertEqual(run_cli("derive", self.base_path("socrates.base"), "m_s")[0], 0)
        self.assertEqual(run_cli("derive", self.base_path("parent.base"), "old")[0], 0)
        self.assertEqual(run_cli("derive", self.base_path("socrates.base"), "p")[0], 1)
        self.assertEqual(run_cli("derive", self.base_path("missing.base"), "p")[0], 2)
        with tempfile.TemporaryDirectory() as tmp:
            empty = os.path.join(tmp, "empty.base")
            broken = os.path.join(tmp, "broken.base")
            with open(empty, "w", encoding="utf-8") as f:
                f.write("# nothing here\n")
            with open(broken, "w", encoding="utf-8") as f:
                f.write("fact p\n")
            self.assertEqual(run_cli("derive", empty, "p")[0], 1)
            self.assertEqual(run_cli("derive", empty, "p", "--assume", "p")[0], 0)
            code, _, err = run_cli("derive", broken, "p")
            self.assertEqual(code, 2)
            self.assertIn("error:", err)

    def test_derive_trace_json(self):
        """Test derive reports a witness trace"""
        code, out, _ = run_cli("derive", self.base_path("socrates.base"), "m_s",
                               "--trace", "--json")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report["witness"]["trace"]["atom"], "m_s")
        self.assertEqual(schema_problems(report), [])

    def test_valid_b1(self):
        """Test Peirce is valid over level-1 bases"""
        self.assertEqual(run_cli("valid", "--basis", "b1", "((p -o q) -o p) -o p")[0], 0)

    def test_excluded_middle_b2(self):
        """Test excluded middle is invalid over level-2 bases"""
        self.assertEqual(run_cli("valid", "--basis", "b2", "p + (p -o zero)")[0], 1)
        code, out, _ = run_cli("countermodel", "--basis", "b2", "p + (p -o zero)")
        self.assertEqual(code, 1)
        self.assertIn("# empty base", out)
        self.assertEqual(run_cli("countermodel", "--basis", "b2", "p -o p")[0], 0)

    def test_lottery(self):
        """Test support with hypotheses delegates to entailment"""
        code, _, _ = run_cli("support", "--base", self.base_path("lottery.base"),
                             "--basis", "b2", "--max-rules", "4",
                             "--hyp", "t1+t2+t3", "sup")
        self.assertEqual(code, 0)

    def test_lottery_caps_bases_without_max_rules(self):
        """Test an unenumerable basis is capped one rule above the base"""
        argv = ("support", "--base", self.base_path("lottery.base"), "--basis", "b2",
                "--hyp", "t1+t2+t3", "sup")
        with self.assertLogs("cli", level="WARNING") as logs:
            code, _, _ = run_cli(*argv)
        self.assertEqual(code, 0)
        self.assertIn("capping bases at 4 rules", "\n".join(logs.output))

        code, out, _ = run_cli(*argv, "--json")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report["config"]["max_rules"], 4)
        self.assertIs(report["config"]["max_rules_fallback"], True)
        self.assertEqual(schema_problems(report), [])

    def test_support_with_base(self):
        """Test support at a given base"""
        self.assertEqual(run_cli("support", "--base", self.base_path("socrates.base"),
                                 "--fresh", "0", "m_s")[0], 0)
        self.assertEqual(run_cli("support", "--fresh", "0", "p")[0], 1)

    def test_json_report(self):
        """Test JSON reports are schema-valid and deterministic"""
        code, out, _ = run_cli("valid", "--json", "--fresh", "0", "p -o p")
        self.assertEqual(code, 0)
        first = json.loads(out)
        self.assertEqual(schema_problems(first), [])
        self.assertEqual(first["config"]["vocab"], ["p"])
        self.assertTrue(first["verdict"])
        second = json.loads(run_cli("valid", "--json", "--fresh", "0", "p -o p")[1])
        del first["stats"]["wall_ms"], second["stats"]["wall_ms"]
        self.assertEqual(first, second)

    def test_report_file(self):
        """Test --report saves the JSON report"""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "report.json")
            self.assertEqual(run_cli("valid", "--fresh", "0", "--report", path, "p -o q")[0], 1)
            report = ReportWriter().load_report(path)
            self.assertEqual(report["command"], "valid")
            self.assertFalse(report["verdict"])

    def test_translate(self):
        """Test translation in both directions"""
        code, out, _ = run_cli("translate", "to-formula", "rule [p] q => c.")
        self.assertEqual((code, out.strip()), (0, "(p -> q) -> c"))
        code, out, _ = run_cli("translate", "to-base", "(p & q) -> c")
        self.assertEqual((code, out.strip()), (0, "rule p, q => c."))
        self.assertEqual(run_cli("translate", "to-base", "p -o q")[0], 2)
        self.assertEqual(run_cli("translate", "to-formula", "# empty")[0], 2)

    def test_oracle(self):
        """Test the oracle command"""
        peirce = "((p -o q) -o p) -o p"
        self.assertEqual(run_cli("oracle", "--logic", "classical", peirce)[0], 0)
        self.assertEqual(run_cli("oracle", "--logic", "intuitionistic", peirce)[0], 1)
        self.assertEqual(run_cli("oracle", "p -> q")[0], 2)

    def test_compare(self):
        """Test compare over explicit formulas"""
        self.assertEqual(run_cli("compare", "--fresh", "0", "p -o p", "p -o q")[0], 0)
        code, _, err = run_cli("compare", "p -> q")
        self.assertEqual(code, 2)
        self.assertIn("intrinsic implication", err)

    def test_errors(self):
        """Test errors exit with status 2"""
        self.assertEqual(run_cli("valid", "p & & q")[0], 2)
        self.assertEqual(run_cli("valid", "--max-rules", "0", "p")[0], 2)
        self.assertEqual(run_cli("valid", "--vocab", "p", "p -o q")[0], 2)
        with mock.patch.dict(os.environ, {"BASELAB_MAX_ENUM": "10"}):
            self.assertEqual(run_cli("valid", "p -o q")[0], 2)


def run_tests():
    """Run all tests"""
    # Create test suite
    loader = unittest.TestLoader()
    suite = unittest.TestSuite()

    # Add all test classes
    suite.addTests(loader.loadTestsFromTestCase(TestSyntax))
    suite.addTests(loader.loadTestsFromTestCase(TestAtomic))
    suite.addTests(loader.loadTestsFromTestCase(TestDerivability))
    suite.addTests(loader.loadTestsFromTestCase(TestTranslate))
    suite.addTests(loader.loadTestsFromTestCase(TestConfig))
    suite.addTests(loader.loadTestsFromTestCase(TestEventSystem))
    suite.addTests(loader.loadTestsFromTestCase(TestSupport))
    suite.addTests(loader.loadTestsFromTestCase(TestOracles))
    suite.addTests(loader.loadTestsFromTestCase(TestReports))
    suite.addTests(loader.loadTestsFromTestCase(TestVisualization))
    suite.addTests(loader.loadTestsFromTestCase(TestCLI))

    # Run tests
    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    return result.wasSuccessful()


if __name__ == "__main__":
    import sys
    success = run_tests()
    sys.exit(0 if success else 1)
