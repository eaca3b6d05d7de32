"""
Formula syntax for baselab.
Immutable formula trees, a lark grammar for the surface syntax, rendering
with minimal parentheses and fragment classification.

Surface syntax (ASCII / Unicode, loosest to tightest binding):
    ->  →      intrinsic implication, right associative
    -o  ⊸      extrinsic implication, right associative
    |  ∨   +  ⊕      disjunctions, left associative
    &  ∧   *  ⊗      conjunctions, left associative
    !i φ  = φ → 0    !b φ = φ ⊸ ⊥    !e φ = φ ⊸ 0
    bot ⊥   zero 0   atoms [a-z][a-z0-9_]*

Atoms starting with `_` are reserved for fresh atoms and do not parse here.
"""
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterator, Set, Type

from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput

from errors import FormulaSyntaxError


@dataclass(frozen=True)
class Formula:
    """Base class of all formula nodes."""

    def __str__(self):
        return render_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Bot(Formula):
    """Intrinsic falsum: supported by no base."""


@dataclass(frozen=True)
class Zero(Formula):
    """Extrinsic falsum: supported where every atom is derivable."""


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class And(_Binary):
    pass


@dataclass(frozen=True)
class Tensor(_Binary):
    pass


@dataclass(frozen=True)
class Or(_Binary):
    pass


@dataclass(frozen=True)
class Oplus(_Binary):
    pass


@dataclass(frozen=True)
class ImpI(_Binary):
    """Intrinsic implication: supported on b iff ψ is supported on b ∪ ⦅φ⦆."""


@dataclass(frozen=True)
class ImpE(_Binary):
    """Extrinsic implication: every extension supporting φ supports ψ."""


BOT = Bot()
ZERO = Zero()

EXTRINSIC_CONNECTIVES: FrozenSet[Type[Formula]] = frozenset({ImpE, Tensor, Oplus})


class Fragment(Enum):
    """Syntactic fragments, from most to least specific."""
    CLAUSAL = "clausal"
    EXTRINSIC = "extrinsic"
    HYBRID = "hybrid"
    GENERAL = "general"


_FRAGMENT_NODES = {
    Fragment.EXTRINSIC: frozenset({Atom, ImpE, Tensor, Oplus, Zero}),
    Fragment.HYBRID: frozenset({Atom, ImpE, And, Or, Bot}),
}


FORMULA_GRAMMAR = r"""
?start: imp

?imp: sum
    | sum ("->" | "→") imp      -> impi
    | sum ("-o" | "⊸") imp      -> impe

?sum: prod
    | sum ("|" | "∨") prod      -> or_
    | sum ("+" | "⊕") prod      -> oplus

?prod: unary
    | prod ("&" | "∧") unary    -> and_
    | prod ("*" | "⊗") unary    -> tensor

?unary: primary
    | "!i" unary                -> neg_i
    | "!b" unary                -> neg_b
    | "!e" unary                -> neg_e

?primary: IDENT                 -> atom
    | ("bot" | "⊥")             -> bot
    | ("zero" | "0")            -> zero
    | "(" imp ")"

IDENT: /[a-z][a-z0-9_]*/

%import common.WS
%ignore WS
"""


class _FormulaBuilder(Transformer):
    def atom(self, items):
        return Atom(str(items[0]))

    def bot(self, _):
        return BOT

    def zero(self, _):
        return ZERO

    def impi(self, items):
        return ImpI(items[0], items[1])

    def impe(self, items):
        return ImpE(items[0], items[1])

    def or_(self, items):
        return Or(items[0], items[1])

    def oplus(self, items):
        return Oplus(items[0], items[1])

    def and_(self, items):
        return And(items[0], items[1])

    def tensor(self, items):
        return Tensor(items[0], items[1])

    def neg_i(self, items):
        return desugar("!i", items[0])

    def neg_b(self, items):
        return desugar("!b", items[0])

    def neg_e(self, items):
        return desugar("!e", items[0])


_parser = Lark(FORMULA_GRAMMAR, parser="lalr")
_builder = _FormulaBuilder()


def describe_terminals(parser: Lark, names) -> FrozenSet[str]:
    """Turn lark terminal names into the text a user would type."""
    shown: Set[str] = set()
    patterns = {t.name: t.pattern for t in parser.terminals}
    for name in names:
        pattern = patterns.get(name)
        if name == "$END":
            shown.add("end of input")
        elif pattern is None:
            shown.add(name.lower())
        elif pattern.type == "str":
            shown.add(pattern.value)
        else:
            shown.add(name.lower())
    return frozenset(shown)


def syntax_error_position(text: str, error: UnexpectedInput):
    """Line and column of a lark error, with end-of-input resolved."""
    line = getattr(error, "line", -1)
    column = getattr(error, "column", -1)
    if isinstance(error, UnexpectedEOF) or line is None or line < 1:
        lines = text.split("\n")
        return len(lines), len(lines[-1]) + 1
    return line, column


def parse_formula(text: str) -> Formula:
    """Parse a formula string.

    Args:
        text: Formula in ASCII or Unicode surface syntax.

    Returns:
        The formula tree.

    Raises:
        FormulaSyntaxError: With 1-based line/column and the expected tokens.
    """
    try:
        tree = _parser.parse(text)
    except UnexpectedInput as e:
        expected = getattr(e, "expected", None) or getattr(e, "allowed", None) or ()
        line, column = syntax_error_position(text, e)
        raise FormulaSyntaxError(
            "unexpected input", line, column, describe_terminals(_parser, expected)
        ) from None
    return _builder.transform(tree)


def desugar(op: str, f: Formula) -> Formula:
    """Expand a negation shorthand into the implication it abbreviates."""
    if op == "!i":
        return ImpI(f, ZERO)
    if op == "!b":
        return ImpE(f, BOT)
    if op == "!e":
        return ImpE(f, ZERO)
    raise ValueError(f"Unknown negation shorthand: {op}")


_SYMBOLS = {
    ImpI: ("→", "->"),
    ImpE: ("⊸", "-o"),
    Or: ("∨", "|"),
    Oplus: ("⊕", "+"),
    And: ("∧", "&"),
    Tensor: ("⊗", "*"),
}

_LEVELS = {ImpI: 1, ImpE: 1, Or: 2, Oplus: 2, And: 3, Tensor: 3}


def _level(f: Formula) -> int:
    return _LEVELS.get(type(f), 4)


def render_formula(f: Formula, unicode: bool = False) -> str:
    """Render a formula with the fewest parentheses that re-parse to it.

    ASCII by default; `unicode=True` gives the symbols used in text boxes.
    """
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Bot):
        return "⊥" if unicode else "bot"
    if isinstance(f, Zero):
        return "0" if unicode else "zero"
    if not isinstance(f, _Binary):
        raise TypeError(f"Not a formula: {f!r}")

    level = _level(f)
    symbol = _SYMBOLS[type(f)][0 if unicode else 1]
    left = render_formula(f.left, unicode)
    right = render_formula(f.right, unicode)
    if level == 1:
        # right associative
        if _level(f.left) <= 1:
            left = f"({left})"
    else:
        if _level(f.left) < level:
            left = f"({left})"
        if _level(f.right) <= level:
            right = f"({right})"
    return f"{left} {symbol} {right}"


def subformulas(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal, the formula itself first."""
    yield f
    if isinstance(f, _Binary):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def atoms_of(f: Formula) -> FrozenSet[str]:
    return frozenset(g.name for g in subformulas(f) if isinstance(g, Atom))


def node_types(f: Formula) -> FrozenSet[Type[Formula]]:
    return frozenset(type(g) for g in subformulas(f))


def is_intrinsic(f: Formula) -> bool:
    """True when no subformula quantifies over base extensions."""
    return not (node_types(f) & EXTRINSIC_CONNECTIVES)


def fragment_of(f: Formula) -> Fragment:
    """Classify a formula into the most specific fragment it belongs to."""
    from translate import is_clausal

    if is_clausal(f):
        return Fragment.CLAUSAL
    nodes = node_types(f)
    for fragment in (Fragment.EXTRINSIC, Fragment.HYBRID):
        if nodes <= _FRAGMENT_NODES[fragment]:
            return fragment
    return Fragment.GENERAL
