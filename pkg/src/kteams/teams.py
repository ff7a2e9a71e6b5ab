"""Weight-annotated teams: finite sets of assignments with semiring weights.

A team is stored as a tuple of distinct rows (value tuples aligned with the
schema) plus a parallel weight tuple. Multiplicity lives in the weight, never
in row repetition; ingesting a duplicate assignment is an error.
"""

from __future__ import annotations

from collections import Counter
from typing import Any, Iterable, Mapping, Optional, Sequence

from .semirings import BOOLEAN, NNRATIONALS, CapabilityError, Semiring


class TeamError(Exception):
    """Malformed team (duplicate rows, bad shapes, degenerate input)."""


class SchemaError(TeamError):
    """Variable set mismatch against the team schema."""


class ArityError(TeamError):
    """Tuple length mismatch."""


WEIGHT_COLUMN = "#weight"


def check_schema(variables: Sequence[str]) -> tuple[str, ...]:
    vs = tuple(variables)
    if not vs:
        raise SchemaError("schema must declare at least one variable")
    if len(set(vs)) != len(vs):
        raise SchemaError(f"duplicate variable in schema {vs}")
    return vs


class WeightBag:
    """Counted multiset of semiring values (the marginal multiset)."""

    __slots__ = ("counts",)

    def __init__(self, values: Iterable[Any] = ()):
        self.counts = Counter(values)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightBag) and self.counts == other.counts

    def __hash__(self):
        return hash(frozenset(self.counts.items()))

    def __len__(self) -> int:
        return sum(self.counts.values())

    def __contains__(self, v: Any) -> bool:
        return self.counts[v] > 0

    def includes(self, other: "WeightBag") -> bool:
        """Counted multiset inclusion: other <= self."""
        return all(self.counts[v] >= m for v, m in other.counts.items())

    def items(self):
        return self.counts.items()

    def __repr__(self) -> str:
        inner = ", ".join(
            repr(v) for v, m in sorted(self.counts.items(), key=lambda kv: repr(kv[0]))
            for _ in range(m)
        )
        return "{{" + inner + "}}"


class KTeam:
    """A K-team: distinct assignments over a schema, each with a weight."""

    __slots__ = ("schema", "semiring", "rows", "weights", "_pos", "_proj", "_marg")

    def __init__(
        self,
        schema: Sequence[str],
        semiring: Semiring,
        rows: Sequence[tuple],
        weights: Sequence[Any],
        *,
        validate: bool = True,
        _shared_proj: Optional[dict] = None,
    ):
        self.schema = check_schema(schema)
        self.semiring = semiring
        self.rows = tuple(tuple(r) for r in rows)
        self.weights = tuple(weights)
        self._pos = {v: i for i, v in enumerate(self.schema)}
        self._proj: dict = _shared_proj if _shared_proj is not None else {}
        self._marg: dict = {}
        if validate:
            if len(self.rows) != len(self.weights):
                raise TeamError("rows and weights length mismatch")
            n = len(self.schema)
            for r in self.rows:
                if len(r) != n:
                    raise ArityError(f"row {r} does not match schema arity {n}")
            if len(set(self.rows)) != len(self.rows):
                raise TeamError("duplicate assignment; fold multiplicity into weights")
            for w in self.weights:
                semiring.check(w)

    @classmethod
    def from_pairs(
        cls,
        schema: Sequence[str],
        semiring: Semiring,
        pairs: Iterable[tuple[Mapping[str, Any] | Sequence[Any], Any]],
    ) -> "KTeam":
        schema = check_schema(schema)
        rows, weights = [], []
        for assignment, w in pairs:
            if isinstance(assignment, Mapping):
                if set(assignment) != set(schema):
                    raise SchemaError(
                        f"assignment domain {sorted(assignment)} != schema {list(schema)}"
                    )
                rows.append(tuple(assignment[v] for v in schema))
            else:
                rows.append(tuple(assignment))
            weights.append(w)
        return cls(schema, semiring, rows, weights)

    # -- basic queries ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.rows)

    def positions(self, variables: Sequence[str]) -> tuple[int, ...]:
        try:
            return tuple(self._pos[v] for v in variables)
        except KeyError as exc:
            raise SchemaError(f"variable {exc.args[0]!r} not in schema") from None

    def assignment(self, row: tuple) -> dict[str, Any]:
        return dict(zip(self.schema, row))

    def support(self) -> tuple[tuple, ...]:
        """Rows with nonzero weight, as value tuples in schema order."""
        zero = self.semiring.zero
        return tuple(r for r, w in zip(self.rows, self.weights) if w != zero)

    def weight_of(self, row: Sequence[Any]) -> Any:
        row = tuple(row)
        for r, w in zip(self.rows, self.weights):
            if r == row:
                return w
        return self.semiring.zero

    def total_weight(self) -> Any:
        return self.semiring.sum(self.weights)

    # -- marginals -----------------------------------------------------------

    def _groups(self, pos: tuple[int, ...]) -> dict[tuple, tuple[int, ...]]:
        """Row indices grouped by projection onto the given positions."""
        got = self._proj.get(pos)
        if got is None:
            acc: dict[tuple, list[int]] = {}
            for i, r in enumerate(self.rows):
                acc.setdefault(tuple(r[p] for p in pos), []).append(i)
            got = {k: tuple(v) for k, v in acc.items()}
            self._proj[pos] = got
        return got

    def marginals(self, variables: Sequence[str]) -> dict[tuple, Any]:
        """All nonzero-or-zero marginal weights keyed by projected value tuple."""
        pos = self.positions(variables)
        got = self._marg.get(pos)
        if got is None:
            K = self.semiring
            w = self.weights
            got = {}
            for proj, idxs in self._groups(pos).items():
                acc = K.zero
                for i in idxs:
                    acc = K.plus(acc, w[i])
                got[proj] = acc
            self._marg[pos] = got
        return got

    def marginal(self, variables: Sequence[str], values: Sequence[Any]) -> Any:
        if len(variables) != len(values):
            raise ArityError(
                f"{len(variables)} variables against {len(values)} values"
            )
        return self.marginals(variables).get(tuple(values), self.semiring.zero)

    def value_set(self, variables: Sequence[str]) -> set[tuple]:
        zero = self.semiring.zero
        return {a for a, w in self.marginals(variables).items() if w != zero}

    def marginal_multiset(self, variables: Sequence[str]) -> WeightBag:
        zero = self.semiring.zero
        return WeightBag(w for w in self.marginals(variables).values() if w != zero)

    def values_used(self) -> set:
        return {v for r in self.rows for v in r}

    # -- transforms ----------------------------------------------------------

    def normalize(self) -> "KTeam":
        """Scale weights to total 1; only meaningful over the rationals."""
        if self.semiring is not NNRATIONALS:
            raise CapabilityError("normalize requires the nnrational semiring")
        total = self.total_weight()
        if total == 0:
            raise TeamError("cannot normalize a team of total weight zero")
        return KTeam(
            self.schema,
            self.semiring,
            self.rows,
            tuple(self.semiring.divide(w, total) for w in self.weights),
            validate=False,
        )

    def to_tsv(self) -> str:
        header = "\t".join(self.schema + (WEIGHT_COLUMN,))
        lines = [header]
        for r, w in zip(self.rows, self.weights):
            lines.append(
                "\t".join([str(v) for v in r] + [self.semiring.format_literal(w)])
            )
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return (
            f"KTeam({'×'.join(self.schema)} over {self.semiring.id}, "
            f"{len(self.rows)} rows)"
        )


def _parse_value(token: str):
    if token and (token.isdigit() or (token[0] == "-" and token[1:].isdigit())):
        return int(token)
    return token


def team_from_tsv(text: str, semiring: Semiring) -> KTeam:
    """Parse the tab-separated team format: header of variables plus a
    literal '#weight' column, one row per assignment."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("//")]
    if not lines:
        raise TeamError("empty team file")
    header = lines[0].split("\t")
    if header and header[-1] == WEIGHT_COLUMN:
        variables = header[:-1]
    else:
        raise TeamError(f"last header column must be {WEIGHT_COLUMN!r}")
    schema = check_schema(variables)
    rows, weights = [], []
    for ln in lines[1:]:
        cells = ln.split("\t")
        if len(cells) != len(schema) + 1:
            raise ArityError(f"row {ln!r} has {len(cells)} cells, want {len(schema) + 1}")
        rows.append(tuple(_parse_value(c) for c in cells[:-1]))
        weights.append(semiring.parse_literal(cells[-1]))
    return KTeam(schema, semiring, rows, weights)


def lift_boolean(team: KTeam, k: Any, K: Semiring) -> KTeam:
    """Replace every supported row's weight with the constant k in K.

    The lift preserves support exactly. Callers relying on idempotence of k
    (constant-weight witnesses) must pick k with k + k = k.
    """
    if team.semiring is not BOOLEAN:
        raise CapabilityError("lift_boolean expects a boolean team")
    K.check(k)
    if k == K.zero:
        raise TeamError("lift constant must be nonzero")
    rows = team.support()
    return KTeam(team.schema, K, rows, tuple(k for _ in rows))
