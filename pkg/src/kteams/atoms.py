"""Dependency atoms: data model, ASCII grammar, canonical forms.

Atom kinds and their surface syntax:

    x y -> z        functional dependency (FD); constancy written const(z)
    x <= y          weighted inclusion dependency (IND), sides same length
    x <* y          marginal distribution inclusion (IND*), lengths free
    x == y          marginal identity (MI), sides same length
    x =* y          marginal distribution equivalence (MDE)
    y _||_ z | x    conditional independence (CI); drop '| x' for plain
                    independence (IA)

All sides are whitespace-separated variable names. IND/MI/IND*/MDE sides and
CI parts must be repetition-free; CI parts must be pairwise disjoint.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class AtomError(Exception):
    """Malformed atom (shape invariant violated)."""


class ParseError(AtomError):
    """Syntax error, with position information."""


VarTuple = tuple[str, ...]


def _as_vars(xs: Sequence[str]) -> VarTuple:
    return tuple(xs)


def _require_repetition_free(xs: VarTuple, what: str) -> None:
    if len(set(xs)) != len(xs):
        raise AtomError(f"{what} must be repetition-free, got {list(xs)}")


@dataclass(frozen=True)
class FD:
    """=(lhs, rhs); a constancy atom when lhs is empty."""

    lhs: VarTuple
    rhs: VarTuple

    kind = "FD"

    @property
    def is_constancy(self) -> bool:
        return not self.lhs

    def variables(self) -> frozenset[str]:
        return frozenset(self.lhs) | frozenset(self.rhs)

    @property
    def unary(self) -> bool:
        # a unary constancy counts as a unary FD
        return len(self.rhs) == 1 and len(self.lhs) <= 1


@dataclass(frozen=True)
class IND:
    lhs: VarTuple
    rhs: VarTuple

    kind = "IND"

    def __post_init__(self):
        _require_repetition_free(self.lhs, "IND left side")
        _require_repetition_free(self.rhs, "IND right side")
        if len(self.lhs) != len(self.rhs):
            raise AtomError(
                f"IND sides must have equal length: {list(self.lhs)} vs {list(self.rhs)}"
            )

    def variables(self) -> frozenset[str]:
        return frozenset(self.lhs) | frozenset(self.rhs)

    @property
    def unary(self) -> bool:
        return len(self.lhs) == 1


@dataclass(frozen=True)
class MI:
    lhs: VarTuple
    rhs: VarTuple

    kind = "MI"

    __post_init__ = IND.__post_init__
    variables = IND.variables
    unary = IND.unary


@dataclass(frozen=True)
class INDStar:
    lhs: VarTuple
    rhs: VarTuple

    kind = "INDStar"

    def __post_init__(self):
        _require_repetition_free(self.lhs, "IND* left side")
        _require_repetition_free(self.rhs, "IND* right side")

    def variables(self) -> frozenset[str]:
        return frozenset(self.lhs) | frozenset(self.rhs)

    @property
    def unary(self) -> bool:
        return len(self.lhs) == 1 and len(self.rhs) == 1


@dataclass(frozen=True)
class MDE:
    lhs: VarTuple
    rhs: VarTuple

    kind = "MDE"

    __post_init__ = INDStar.__post_init__
    variables = INDStar.variables
    unary = INDStar.unary


@dataclass(frozen=True)
class CI:
    """left independent of right given cond; an IA when cond is empty."""

    cond: VarTuple
    left: VarTuple
    right: VarTuple

    kind = "CI"

    def __post_init__(self):
        _require_repetition_free(self.cond, "CI condition")
        _require_repetition_free(self.left, "CI left part")
        _require_repetition_free(self.right, "CI right part")
        c, l, r = set(self.cond), set(self.left), set(self.right)
        if c & l or c & r or l & r:
            raise AtomError("CI parts must be pairwise disjoint")

    @property
    def is_ia(self) -> bool:
        return not self.cond

    def variables(self) -> frozenset[str]:
        return frozenset(self.cond) | frozenset(self.left) | frozenset(self.right)

    @property
    def unary(self) -> bool:
        return len(self.cond) <= 1 and len(self.left) == 1 and len(self.right) == 1


Atom = FD | IND | MI | INDStar | MDE | CI


def variables_of(atoms: Iterable[Atom]) -> frozenset[str]:
    out: frozenset[str] = frozenset()
    for a in atoms:
        out |= a.variables()
    return out


# ---------------------------------------------------------------------------
# Canonical forms

def canonicalize(a: Atom) -> Atom:
    """Normalize an atom to its canonical representative.

    FD sides become sorted variable sets (satisfaction only reads the sets).
    IND/MI atoms are a set of coordinate pairs, so the pair sequence is
    sorted; IND*/MDE sides are independently permutable and get sorted.
    CI parts are sorted in place.
    """
    if isinstance(a, FD):
        return FD(tuple(sorted(set(a.lhs))), tuple(sorted(set(a.rhs))))
    if isinstance(a, (IND, MI)):
        pairs = sorted(set(zip(a.lhs, a.rhs)))
        lhs = tuple(p[0] for p in pairs)
        rhs = tuple(p[1] for p in pairs)
        return type(a)(lhs, rhs)
    if isinstance(a, (INDStar, MDE)):
        return type(a)(tuple(sorted(a.lhs)), tuple(sorted(a.rhs)))
    if isinstance(a, CI):
        return CI(tuple(sorted(a.cond)), tuple(sorted(a.left)), tuple(sorted(a.right)))
    raise AtomError(f"not an atom: {a!r}")


def is_trivial(a: Atom) -> bool:
    """True for atoms derivable from the empty set in their own system and
    satisfied by every team (reflexivity families, empty CI parts)."""
    a = canonicalize(a)
    if isinstance(a, FD):
        return set(a.rhs) <= set(a.lhs)
    if isinstance(a, (IND, MI, INDStar, MDE)):
        return a.lhs == a.rhs
    if isinstance(a, CI):
        return not a.left or not a.right
    return False


def mvd_notation(cond: Sequence[str], rhs: Sequence[str], schema: Sequence[str]) -> CI:
    """The saturated CI abbreviated by cond ->> rhs over the given schema."""
    d = list(dict.fromkeys(schema))
    missing = (set(cond) | set(rhs)) - set(d)
    if missing:
        raise AtomError(f"variables {sorted(missing)} outside schema")
    c = tuple(dict.fromkeys(cond))
    left = tuple(v for v in d if v in set(rhs) and v not in set(c))
    right = tuple(v for v in d if v not in set(rhs) and v not in set(c))
    return canonicalize(CI(tuple(sorted(c)), left, right))


# ---------------------------------------------------------------------------
# Classification

_LABEL_ORDER = [
    "FD", "UFD", "CA", "UCA", "IND", "UIND", "INDStar", "UINDStar",
    "MI", "UMI", "MDE", "UMDE", "IA", "CI", "SCI",
]

# child -> parent in the label lattice used to drop absorbed labels
_ABSORBED_BY = {
    "UFD": {"FD"},
    "CA": {"FD"},
    "UCA": {"UFD", "CA", "FD"},
    "UIND": {"IND"},
    "UINDStar": {"INDStar"},
    "UMI": {"MI"},
    "UMDE": {"MDE"},
    "IA": {"CI"},
    "SCI": {"CI"},
}


def atom_label(a: Atom, schema: Sequence[str] | None = None) -> str:
    """Class label of a single atom; SCI detection needs the schema."""
    if isinstance(a, FD):
        if a.is_constancy:
            # unary constancy atoms count as unary FDs
            return "UFD" if len(a.rhs) == 1 else "CA"
        return "UFD" if a.unary else "FD"
    if isinstance(a, CI):
        if schema is not None and a.variables() == frozenset(schema):
            return "SCI"
        return "IA" if a.is_ia else "CI"
    if a.unary:
        return "U" + a.kind
    return a.kind


def classify(atoms: Iterable[Atom], schema: Sequence[str] | None = None) -> str:
    """Smallest composite label covering every atom, e.g. 'FD+UMI+UMDE'."""
    labels = {atom_label(a, schema) for a in atoms}
    kept = {
        lab
        for lab in labels
        if not (_ABSORBED_BY.get(lab, frozenset()) & labels)
    }
    if not kept:
        return "EMPTY"
    return "+".join(lab for lab in _LABEL_ORDER if lab in kept)


# ---------------------------------------------------------------------------
# Parser / printer

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<op>_\|\|_|->|<=|<\*|==|=\*|\||\(|\))|(?P<const>const\()|"
    r"(?P<ident>[A-Za-z_][A-Za-z0-9_']*))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected input at column {pos + 1}: {rest[:10]!r}")
        if m.group("op"):
            tokens.append(("op", m.group("op"), pos))
        elif m.group("const"):
            tokens.append(("const", "const(", pos))
        else:
            tokens.append(("ident", m.group("ident"), pos))
        pos = m.end()
    return tokens


_BINARY_OPS = {"->": FD, "<=": IND, "<*": INDStar, "==": MI, "=*": MDE}


def parse(text: str) -> Atom:
    """Parse one atom; raises ParseError with a column on bad syntax and
    AtomError (naming the violated rule) on shape violations."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty atom")

    if tokens[0][0] == "const":
        names = [t for t in tokens[1:-1]]
        if not names or tokens[-1][1] != ")" or any(k != "ident" for k, _, _ in names):
            raise ParseError("expected const(<variables>)")
        return FD((), _as_vars([v for _, v, _ in names]))

    ops = [(i, t) for i, t in enumerate(tokens) if t[0] == "op" and t[1] != "|"]
    if len(ops) != 1:
        raise ParseError(
            f"expected exactly one dependency operator in {text!r}, found {len(ops)}"
        )
    i, (_, op, col) = ops[0]
    lhs = tokens[:i]
    rest = tokens[i + 1:]
    if any(k != "ident" for k, _, _ in lhs):
        raise ParseError(f"bad left side before column {col + 1}")

    if op == "_||_":
        bar = [j for j, t in enumerate(rest) if t[0] == "op" and t[1] == "|"]
        if len(bar) > 1:
            raise ParseError("at most one '|' condition allowed")
        if bar:
            right, cond = rest[: bar[0]], rest[bar[0] + 1:]
            if not cond:
                raise ParseError("empty condition after '|'")
        else:
            right, cond = rest, []
        for part in (right, cond):
            if any(k != "ident" for k, _, _ in part):
                raise ParseError("bad variable list in independence atom")
        if not lhs or not right:
            raise ParseError("independence atom needs variables on both sides")
        return CI(
            _as_vars([v for _, v, _ in cond]),
            _as_vars([v for _, v, _ in lhs]),
            _as_vars([v for _, v, _ in right]),
        )

    if any(k != "ident" for k, _, _ in rest):
        raise ParseError(f"bad right side after column {col + 1}")
    if not lhs or not rest:
        raise ParseError(f"operator {op!r} needs variables on both sides")
    return _BINARY_OPS[op](
        _as_vars([v for _, v, _ in lhs]), _as_vars([v for _, v, _ in rest])
    )


def print_atom(a: Atom) -> str:
    """Canonical text; parse(print_atom(a)) == canonicalize(a)."""
    a = canonicalize(a)
    if isinstance(a, FD):
        if a.is_constancy:
            return f"const({' '.join(a.rhs)})"
        return f"{' '.join(a.lhs)} -> {' '.join(a.rhs)}"
    if isinstance(a, IND):
        return f"{' '.join(a.lhs)} <= {' '.join(a.rhs)}"
    if isinstance(a, INDStar):
        return f"{' '.join(a.lhs)} <* {' '.join(a.rhs)}"
    if isinstance(a, MI):
        return f"{' '.join(a.lhs)} == {' '.join(a.rhs)}"
    if isinstance(a, MDE):
        return f"{' '.join(a.lhs)} =* {' '.join(a.rhs)}"
    if isinstance(a, CI):
        base = f"{' '.join(a.left)} _||_ {' '.join(a.right)}"
        return f"{base} | {' '.join(a.cond)}" if a.cond else base
    raise AtomError(f"not an atom: {a!r}")


def atom_sort_key(a: Atom) -> tuple:
    return (a.kind, print_atom(a))
