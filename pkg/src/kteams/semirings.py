"""Exact arithmetic for the five concrete semirings used by the engine.

Carriers are represented exactly: Boolean bits and naturals as Python ints,
non-negative rationals and the Viterbi unit interval as `fractions.Fraction`,
and the tropical carrier as rationals extended with a distinguished infinity.
No floats anywhere; evaluating marginal identities and independence atoms
depends on exact equality of sums and products.

Each instance carries a record of capability flags (cancellativity,
idempotence, orderedness, ...) that gates which decision procedures apply.
The flags are declared per instance and re-verified exhaustively over a small
sample pool by `check_axioms`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Iterable, Optional


class SemiringError(Exception):
    """Base class for semiring-level failures."""


class ValueTypingError(SemiringError):
    """A value does not belong to the carrier it is used with."""


class CapabilityError(SemiringError):
    """An operation requires a capability flag the instance lacks."""


class _Infinity:
    """Additive identity of the tropical semiring (min, +)."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_infinity_instance, ())


INF = _Infinity()


def _infinity_instance() -> _Infinity:
    return INF


@dataclass(frozen=True)
class Capabilities:
    positive: bool
    commutative_mul: bool
    additively_cancellative: bool
    multiplicatively_cancellative: bool
    idempotent: bool
    totally_zero_min_ordered: bool
    has_idempotent_nonzero: bool
    has_absorbing_pair: bool


class Semiring:
    """One concrete semiring instance: carrier checks, ops, order, literals."""

    id: str
    flags: Capabilities
    zero: Any
    one: Any
    sample_pool: tuple
    # Nonzero pair (a, b) with a + b = a, when one exists in the carrier.
    absorbing_pair: Optional[tuple] = None
    # Nonzero a with a + a = a, when one exists (used for Boolean lifts).
    idempotent_nonzero: Any = None

    def contains(self, a: Any) -> bool:
        raise NotImplementedError

    def check(self, a: Any) -> Any:
        if not self.contains(a):
            raise ValueTypingError(f"{a!r} is not a {self.id} value")
        return a

    def plus(self, a: Any, b: Any) -> Any:
        """Addition without carrier validation (hot path)."""
        raise NotImplementedError

    def times(self, a: Any, b: Any) -> Any:
        """Multiplication without carrier validation (hot path)."""
        raise NotImplementedError

    def le(self, a: Any, b: Any) -> bool:
        """Order test without carrier validation (hot path)."""
        raise NotImplementedError

    def add(self, a: Any, b: Any) -> Any:
        return self.plus(self.check(a), self.check(b))

    def mul(self, a: Any, b: Any) -> Any:
        return self.times(self.check(a), self.check(b))

    def leq(self, a: Any, b: Any) -> bool:
        if not self.flags.totally_zero_min_ordered:
            raise CapabilityError(f"{self.id} carries no total zero-min order")
        return self.le(self.check(a), self.check(b))

    def lt(self, a: Any, b: Any) -> bool:
        return self.leq(a, b) and a != b

    def sum(self, values: Iterable[Any]) -> Any:
        acc = self.zero
        for v in values:
            acc = self.plus(acc, self.check(v))
        return acc

    def is_zero(self, a: Any) -> bool:
        return a == self.zero

    def divide(self, a: Any, b: Any) -> Any:
        raise CapabilityError(f"{self.id} has no division")

    def parse_literal(self, text: str) -> Any:
        raise NotImplementedError

    def format_literal(self, a: Any) -> str:
        return str(a)

    def __repr__(self) -> str:
        return f"<semiring {self.id}>"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueTypingError(f"bad rational literal {text!r}") from exc


class Boolean(Semiring):
    id = "boolean"
    flags = Capabilities(
        positive=True,
        commutative_mul=True,
        additively_cancellative=False,
        multiplicatively_cancellative=True,
        idempotent=True,
        totally_zero_min_ordered=True,
        has_idempotent_nonzero=True,
        has_absorbing_pair=True,
    )
    zero = 0
    one = 1
    sample_pool = (0, 1)
    absorbing_pair = (1, 1)
    idempotent_nonzero = 1

    def contains(self, a):
        return a is not INF and a in (0, 1) and not isinstance(a, Fraction)

    def plus(self, a, b):
        return a | b

    def times(self, a, b):
        return a & b

    def le(self, a, b):
        return a <= b

    def parse_literal(self, text):
        if text == "0":
            return 0
        if text == "1":
            return 1
        raise ValueTypingError(f"bad boolean literal {text!r}")


class Naturals(Semiring):
    id = "natural"
    flags = Capabilities(
        positive=True,
        commutative_mul=True,
        additively_cancellative=True,
        multiplicatively_cancellative=True,
        idempotent=False,
        totally_zero_min_ordered=True,
        has_idempotent_nonzero=False,
        has_absorbing_pair=False,
    )
    zero = 0
    one = 1
    sample_pool = (0, 1, 2, 3, 5)

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and a >= 0

    def plus(self, a, b):
        return a + b

    def times(self, a, b):
        return a * b

    def le(self, a, b):
        return a <= b

    def parse_literal(self, text):
        if not text.isdigit():
            raise ValueTypingError(f"bad natural literal {text!r}")
        return int(text)


class NonNegRationals(Semiring):
    id = "nnrational"
    flags = Capabilities(
        positive=True,
        commutative_mul=True,
        additively_cancellative=True,
        multiplicatively_cancellative=True,
        idempotent=False,
        totally_zero_min_ordered=True,
        has_idempotent_nonzero=False,
        has_absorbing_pair=False,
    )
    zero = Fraction(0)
    one = Fraction(1)
    sample_pool = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(3))

    def contains(self, a):
        return isinstance(a, (int, Fraction)) and not isinstance(a, bool) and a >= 0

    def plus(self, a, b):
        return a + b

    def times(self, a, b):
        return a * b

    def le(self, a, b):
        return a <= b

    def divide(self, a, b):
        if b == 0:
            raise ValueTypingError("division by zero")
        return Fraction(a) / Fraction(b)

    def parse_literal(self, text):
        v = _parse_fraction(text)
        if v < 0:
            raise ValueTypingError(f"negative weight {text!r}")
        return v


class Tropical(Semiring):
    """Rationals with infinity under (min, +).

    The carrier order used for inclusion atoms is the dual of the usual order
    of the extended reals: infinity (the additive identity) is minimal, and
    smaller reals sit higher. This is the unique total zero-min order that is
    monotone under min and +.
    """

    id = "tropical"
    flags = Capabilities(
        positive=True,
        commutative_mul=True,
        additively_cancellative=False,
        multiplicatively_cancellative=True,
        idempotent=True,
        totally_zero_min_ordered=True,
        has_idempotent_nonzero=True,
        has_absorbing_pair=True,
    )
    zero = INF
    one = Fraction(0)
    sample_pool = (INF, Fraction(0), Fraction(1), Fraction(2), Fraction(5))
    absorbing_pair = (Fraction(0), Fraction(1))
    idempotent_nonzero = Fraction(0)

    def contains(self, a):
        return a is INF or (isinstance(a, (int, Fraction)) and not isinstance(a, bool))

    def plus(self, a, b):
        if a is INF:
            return b
        if b is INF:
            return a
        return a if a <= b else b

    def times(self, a, b):
        if a is INF or b is INF:
            return INF
        return a + b

    def le(self, a, b):
        # dual of the extended-real order: INF at the bottom
        if a is INF:
            return True
        if b is INF:
            return False
        return b <= a

    def parse_literal(self, text):
        if text == "inf":
            return INF
        return _parse_fraction(text)


class Viterbi(Semiring):
    id = "viterbi"
    flags = Capabilities(
        positive=True,
        commutative_mul=True,
        additively_cancellative=False,
        multiplicatively_cancellative=True,
        idempotent=True,
        totally_zero_min_ordered=True,
        has_idempotent_nonzero=True,
        has_absorbing_pair=True,
    )
    zero = Fraction(0)
    one = Fraction(1)
    sample_pool = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1))
    absorbing_pair = (Fraction(1), Fraction(1, 2))
    idempotent_nonzero = Fraction(1)

    def contains(self, a):
        return isinstance(a, (int, Fraction)) and not isinstance(a, bool) and 0 <= a <= 1

    def plus(self, a, b):
        return a if a >= b else b

    def times(self, a, b):
        return a * b

    def le(self, a, b):
        return a <= b

    def parse_literal(self, text):
        v = _parse_fraction(text)
        if not 0 <= v <= 1:
            raise ValueTypingError(f"viterbi weight {text!r} outside [0, 1]")
        return v


BOOLEAN = Boolean()
NATURALS = Naturals()
NNRATIONALS = NonNegRationals()
TROPICAL = Tropical()
VITERBI = Viterbi()

SEMIRINGS: dict[str, Semiring] = {
    s.id: s for s in (BOOLEAN, NATURALS, NNRATIONALS, TROPICAL, VITERBI)
}


def get_semiring(name: str) -> Semiring:
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise ValueTypingError(
            f"unknown semiring {name!r}; choose from {sorted(SEMIRINGS)}"
        ) from None


# ---------------------------------------------------------------------------
# Law checking over the sample pool


@dataclass(frozen=True)
class LawCheck:
    name: str
    holds: bool
    declared: Optional[bool]  # None for unconditional laws
    witness: Optional[tuple]

    @property
    def consistent(self) -> bool:
        if self.declared is None:
            return self.holds
        return self.holds == self.declared


@dataclass
class LawReport:
    semiring: str
    entries: list[LawCheck]

    @property
    def ok(self) -> bool:
        return all(e.consistent for e in self.entries)

    def entry(self, name: str) -> LawCheck:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def failures(self) -> list[LawCheck]:
        return [e for e in self.entries if not e.consistent]


def _forall(pool, arity, pred):
    """Exhaustive check; returns (holds, witness)."""
    for combo in product(pool, repeat=arity):
        if not pred(*combo):
            return False, combo
    return True, None


def _exists(pool, arity, pred):
    for combo in product(pool, repeat=arity):
        if pred(*combo):
            return True, combo
    return False, None


def check_axioms(K: Semiring) -> LawReport:
    """Exhaustively test the semiring laws and every declared capability flag
    over the instance's sample pool. Failures carry a witness tuple."""
    pool = K.sample_pool
    if not pool:
        raise SemiringError("empty sample pool")
    add, mul, le = K.plus, K.times, K.le
    zero, one = K.zero, K.one
    entries: list[LawCheck] = []

    def law(name, arity, pred, declared=None):
        holds, witness = _forall(pool, arity, pred)
        entries.append(LawCheck(name, holds, declared, witness))

    def existence(name, arity, pred, declared):
        holds, witness = _exists(pool, arity, pred)
        entries.append(LawCheck(name, holds, declared, witness))

    law("add-associative", 3, lambda a, b, c: add(add(a, b), c) == add(a, add(b, c)))
    law("add-commutative", 2, lambda a, b: add(a, b) == add(b, a))
    law("add-identity", 1, lambda a: add(a, zero) == a)
    law("mul-associative", 3, lambda a, b, c: mul(mul(a, b), c) == mul(a, mul(b, c)))
    law("mul-identity", 1, lambda a: mul(a, one) == a and mul(one, a) == a)
    law(
        "distributive",
        3,
        lambda a, b, c: mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        and mul(add(a, b), c) == add(mul(a, c), mul(b, c)),
    )
    law("annihilation", 1, lambda a: mul(zero, a) == zero and mul(a, zero) == zero)

    law(
        "positive",
        2,
        lambda a, b: (add(a, b) != zero or (a == zero and b == zero))
        and (mul(a, b) != zero or a == zero or b == zero),
        declared=K.flags.positive,
    )
    law(
        "commutative-mul",
        2,
        lambda a, b: mul(a, b) == mul(b, a),
        declared=K.flags.commutative_mul,
    )
    law(
        "additively-cancellative",
        3,
        lambda a, b, c: add(a, b) != add(a, c) or b == c,
        declared=K.flags.additively_cancellative,
    )
    law(
        "multiplicatively-cancellative",
        3,
        lambda a, b, c: a == zero
        or ((mul(a, b) != mul(a, c) or b == c) and (mul(b, a) != mul(c, a) or b == c)),
        declared=K.flags.multiplicatively_cancellative,
    )
    law(
        "idempotent",
        1,
        lambda a: add(a, a) == a,
        declared=K.flags.idempotent,
    )

    # total zero-min order, monotone under both operations
    order_ok = (
        _forall(pool, 1, lambda a: le(a, a))[0]
        and _forall(pool, 2, lambda a, b: le(a, b) or le(b, a))[0]
        and _forall(pool, 2, lambda a, b: not (le(a, b) and le(b, a)) or a == b)[0]
        and _forall(pool, 3, lambda a, b, c: not (le(a, b) and le(b, c)) or le(a, c))[0]
    )
    zero_min_ok, zmw = _forall(
        pool, 1, lambda a: le(zero, a) and (not le(a, zero) or a == zero)
    )
    mono_ok, mw = _forall(
        pool,
        3,
        lambda a, b, c: not le(a, b)
        or (
            le(add(a, c), add(b, c))
            and le(mul(a, c), mul(b, c))
            and le(mul(c, a), mul(c, b))
        ),
    )
    entries.append(
        LawCheck(
            "totally-zero-min-ordered",
            order_ok and zero_min_ok and mono_ok,
            K.flags.totally_zero_min_ordered,
            zmw or mw,
        )
    )

    existence(
        "has-idempotent-nonzero",
        1,
        lambda a: a != zero and add(a, a) == a,
        declared=K.flags.has_idempotent_nonzero,
    )
    existence(
        "has-absorbing-pair",
        2,
        lambda a, b: a != zero and b != zero and add(a, b) == a,
        declared=K.flags.has_absorbing_pair,
    )

    if K.flags.additively_cancellative:
        # strict monotonicity of addition, needed by the marginal-sum argument
        law(
            "strict-add-monotonicity",
            4,
            lambda a, b, c, d: not (le(a, b) and a != b and le(c, d))
            or (le(add(a, c), add(b, d)) and add(a, c) != add(b, d)),
        )

    return LawReport(K.id, entries)
