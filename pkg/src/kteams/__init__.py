"""Dependency reasoning over semiring-annotated teams.

Evaluate, axiomatically derive, and semantically decide implication of
database and probabilistic dependencies (functional/inclusion dependencies,
marginal identities and distribution equivalences, independence atoms) over
teams weighted in one of five exact semirings.
"""

from .atoms import (
    CI,
    FD,
    IND,
    MDE,
    MI,
    Atom,
    AtomError,
    INDStar,
    ParseError,
    canonicalize,
    classify,
    mvd_notation,
    parse,
    print_atom,
)
from .semantics import satisfies, satisfies_all
from .semirings import (
    BOOLEAN,
    INF,
    NATURALS,
    NNRATIONALS,
    SEMIRINGS,
    TROPICAL,
    VITERBI,
    CapabilityError,
    Semiring,
    SemiringError,
    ValueTypingError,
    check_axioms,
    get_semiring,
)
from .teams import KTeam, TeamError, WeightBag, lift_boolean, team_from_tsv

__all__ = [
    "Atom", "AtomError", "ParseError", "FD", "IND", "INDStar", "MI", "MDE", "CI",
    "parse", "print_atom", "canonicalize", "classify", "mvd_notation",
    "satisfies", "satisfies_all",
    "Semiring", "SemiringError", "ValueTypingError", "CapabilityError",
    "BOOLEAN", "NATURALS", "NNRATIONALS", "TROPICAL", "VITERBI", "INF",
    "SEMIRINGS", "get_semiring", "check_axioms",
    "KTeam", "TeamError", "WeightBag", "lift_boolean", "team_from_tsv",
]

__version__ = "0.1.0"
