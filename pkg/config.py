"""Basis presets and run configuration for baselab."""

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Optional, Tuple

from atomic import BasisSpec, basis_size, rule_universe
from errors import ConfigurationError

MAX_ENUM_ENV = "BASELAB_MAX_ENUM"
DEFAULT_MAX_ENUM = 2 ** 24

# Fresh atoms are named _f1, _f2, …; formulas cannot mention them.
FRESH_PREFIX = "_"

# Bitmask tables over the powerset lattice are indexed by rule subsets.
LATTICE_MAX_RULES = 24


class BasisClass(Enum):
    """The two bases-of-bases: rules up to level 1 or up to level 2."""
    B1 = "b1"
    B2 = "b2"

    @property
    def level(self) -> int:
        return 1 if self is BasisClass.B1 else 2


class Strategy(Enum):
    """How support is evaluated over the basis."""
    RECURSIVE = "recursive"
    LATTICE = "lattice"
    AUTO = "auto"


@dataclass(frozen=True)
class BasisDefaults:
    """Default bounds for a basis class.

    Attributes:
        max_premises: Premises per rule.
        max_discharge: Atoms discharged per premise.
        max_rules: Cap on rules per base, None for the full powerset.
        fresh: Target number of fresh atoms added to the vocabulary.
    """
    max_premises: int
    max_discharge: int
    max_rules: Optional[int]
    fresh: int


BASIS_PRESETS: dict[BasisClass, BasisDefaults] = {
    BasisClass.B1: BasisDefaults(
        max_premises=2,
        max_discharge=0,
        max_rules=None,
        fresh=1,
    ),
    BasisClass.B2: BasisDefaults(
        max_premises=1,
        max_discharge=1,
        max_rules=None,
        fresh=1,
    ),
}


def get_basis_defaults(basis: BasisClass) -> BasisDefaults:
    """Get the default bounds for a basis class.

    Args:
        basis: The basis class.

    Returns:
        The BasisDefaults preset for that class.

    Raises:
        KeyError: If the basis class has no preset.
    """
    if basis not in BASIS_PRESETS:
        raise KeyError(f"No preset for basis {basis}")
    return BASIS_PRESETS[basis]


def max_enum_from_env(environ: Optional[Mapping[str, str]] = None) -> int:
    """Read the enumeration cap from BASELAB_MAX_ENUM."""
    environ = os.environ if environ is None else environ
    raw = environ.get(MAX_ENUM_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ENUM
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{MAX_ENUM_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigurationError(f"{MAX_ENUM_ENV} must be positive, got {value}")
    return value


def fresh_atoms(count: int, taken: Iterable[str]) -> Tuple[str, ...]:
    """`count` fresh atom names `_f1, _f2, …` avoiding every name in taken."""
    taken = set(taken)
    names = []
    i = 1
    while len(names) < count:
        name = f"{FRESH_PREFIX}f{i}"
        if name not in taken:
            names.append(name)
        i += 1
    return tuple(names)


def is_enumerable(spec: BasisSpec, max_enum: int) -> bool:
    """Whether some strategy can evaluate over this basis within max_enum."""
    if basis_size(spec) > max_enum:
        return False
    return spec.is_capped or len(rule_universe(spec)) <= LATTICE_MAX_RULES


@dataclass(frozen=True)
class RunConfig:
    """Everything a query needs besides its formulas and base."""
    basis: BasisClass = BasisClass.B1
    vocab: Optional[Tuple[str, ...]] = None
    fresh: Optional[int] = None
    max_premises: Optional[int] = None
    max_discharge: Optional[int] = None
    max_rules: Optional[int] = None
    fact_closed: bool = False
    strategy: Strategy = Strategy.AUTO
    output: str = "text"
    paranoid: bool = False
    max_enum: int = field(default=DEFAULT_MAX_ENUM)

    def __post_init__(self):
        defaults = get_basis_defaults(self.basis)
        if self.max_premises is None:
            object.__setattr__(self, "max_premises", defaults.max_premises)
        if self.basis is BasisClass.B1:
            object.__setattr__(self, "max_discharge", 0)
        elif self.max_discharge is None:
            object.__setattr__(self, "max_discharge", defaults.max_discharge)
        if self.max_rules is None:
            object.__setattr__(self, "max_rules", defaults.max_rules)

        if self.max_premises < 0 or self.max_discharge < 0:
            raise ConfigurationError("Premise and discharge bounds must be non-negative")
        if self.max_rules is not None and self.max_rules < 1:
            raise ConfigurationError(f"--max-rules must be at least 1, got {self.max_rules}")
        if self.fresh is not None and self.fresh < 0:
            raise ConfigurationError(f"--fresh must be non-negative, got {self.fresh}")
        if self.output not in ("text", "json"):
            raise ConfigurationError(f"Unknown output mode: {self.output}")
        if self.max_enum < 1:
            raise ConfigurationError("max_enum must be positive")

    @property
    def level(self) -> int:
        return self.basis.level

    def to_spec(self, vocab: Iterable[str]) -> BasisSpec:
        return BasisSpec(
            vocab=tuple(vocab),
            level=self.level,
            max_premises=self.max_premises,
            max_discharge=self.max_discharge,
            max_rules=self.max_rules,
            fact_closed=self.fact_closed,
        )

    def resolve_vocab(self, atoms: Iterable[str]) -> Tuple[str, ...]:
        """Vocabulary for a query mentioning `atoms`.

        An explicit vocab wins (and must cover the atoms). Otherwise the atoms
        are extended by `fresh` fresh atoms, or, when fresh is unset, by the
        preset number of fresh atoms if the basis stays enumerable and by
        none otherwise.
        """
        atoms = set(atoms)
        if self.vocab is not None:
            missing = atoms - set(self.vocab)
            if missing:
                raise ConfigurationError(
                    f"Vocabulary lacks atoms used by the query: {', '.join(sorted(missing))}"
                )
            return tuple(sorted(set(self.vocab)))

        if self.fresh is not None:
            return tuple(sorted(atoms)) + fresh_atoms(self.fresh, atoms)

        target = get_basis_defaults(self.basis).fresh
        for count in range(target, -1, -1):
            vocab = tuple(sorted(atoms)) + fresh_atoms(count, atoms)
            if count == 0 or is_enumerable(self.to_spec(vocab), self.max_enum):
                return vocab
        return tuple(sorted(atoms))
