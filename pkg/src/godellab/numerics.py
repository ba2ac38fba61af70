"""Exact natural-number helpers and certified magnitudes.

Everything here is integer arithmetic; no floating point is used. Values
that are too large to materialize (codes of numerals of codes blow up
after two steps) are described by a Magnitude, which is either an exact
natural or a certified lower bound of the form 2**exponent.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

# ---------------------------------------------------------------------------
# Primes: deterministic trial division with a shared cache. Desk-scale
# indices only; lookups are idempotent so the cache needs no coordination.

_PRIMES: list[int] = [2, 3, 5, 7, 11, 13]


def _extend_primes() -> None:
    candidate = _PRIMES[-1] + 2
    while True:
        is_p = True
        for p in _PRIMES:
            if p * p > candidate:
                break
            if candidate % p == 0:
                is_p = False
                break
        if is_p:
            _PRIMES.append(candidate)
            return
        candidate += 2


def nth_prime(n: int) -> int:
    """The n-th prime, 1-indexed: nth_prime(1) == 2."""
    if n < 1:
        raise ValueError("prime index must be >= 1")
    while len(_PRIMES) < n:
        _extend_primes()
    return _PRIMES[n - 1]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 1
    while True:
        p = nth_prime(i)
        if p * p > n:
            return True
        if n % p == 0:
            return n == p
        i += 1


def prime_index(p: int) -> int:
    """1-indexed position of p in the primes; raises if p is not prime."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    i = 1
    while nth_prime(i) != p:
        i += 1
    return i


# ---------------------------------------------------------------------------
# Certified magnitudes


class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Magnitude:
    """Either an exact natural or the certified fact "value >= 2**low2".

    Exactly one of the two fields is set. Lower-bound exponents are exact
    naturals themselves; when an exponent cannot be materialized the
    caller must weaken it first (see saturating_pow2).
    """

    exact_value: int | None = None
    low2: int | None = None

    def __post_init__(self) -> None:
        if (self.exact_value is None) == (self.low2 is None):
            raise ValueError("exactly one of exact_value/low2 must be set")
        field = self.exact_value if self.exact_value is not None else self.low2
        if field is not None and field < 0:
            raise ValueError("magnitude fields must be nonnegative")

    @classmethod
    def exact(cls, value: int) -> "Magnitude":
        return cls(exact_value=value)

    @classmethod
    def lower_bound(cls, exponent: int) -> "Magnitude":
        return cls(low2=exponent)

    @property
    def is_exact(self) -> bool:
        return self.exact_value is not None

    def min_value(self) -> int:
        """A materialized value the true quantity is known to reach.

        Only call when the bound itself is small enough to hold in memory.
        """
        if self.exact_value is not None:
            return self.exact_value
        assert self.low2 is not None
        return 1 << self.low2

    def exceeds(self, n: int) -> bool:
        """Certified "true value > n"; False means "not provable", not <=."""
        if self.exact_value is not None:
            return self.exact_value > n
        assert self.low2 is not None
        return pow2_exceeds(self.low2, n)

    def to_json_dict(self) -> dict[str, str]:
        if self.exact_value is not None:
            return {"exact": str(self.exact_value)}
        return {"lowerBoundLog2": str(self.low2)}


def pow2_exceeds(exponent: int, n: int) -> bool:
    """Whether 2**exponent > n, without materializing the power."""
    if n < 0:
        return True
    return exponent >= n.bit_length()


def compare_certified(a: Magnitude, b: Magnitude) -> Ordering:
    """Order two magnitudes only as far as their representations prove.

    A lower bound never yields an upper bound on its true value, so two
    lower bounds are incomparable and a definite answer against an exact
    value is possible only in the Greater/Less direction.
    """
    if a.is_exact and b.is_exact:
        assert a.exact_value is not None and b.exact_value is not None
        if a.exact_value < b.exact_value:
            return Ordering.LESS
        if a.exact_value > b.exact_value:
            return Ordering.GREATER
        return Ordering.EQUAL
    if not a.is_exact and b.is_exact:
        assert a.low2 is not None and b.exact_value is not None
        if pow2_exceeds(a.low2, b.exact_value):
            return Ordering.GREATER
        return Ordering.UNKNOWN
    if a.is_exact and not b.is_exact:
        assert a.exact_value is not None and b.low2 is not None
        if pow2_exceeds(b.low2, a.exact_value):
            return Ordering.LESS
        return Ordering.UNKNOWN
    return Ordering.UNKNOWN


# Exponents up to this bit count may be materialized as 2**e; beyond it
# saturating_pow2 falls back to the weaker but always-sound bound 2*e
# (valid since 2**e >= 2*e for every natural e).
POW2_MATERIALIZE_LIMIT = 1 << 20


def saturating_pow2(exponent: int) -> int:
    """A materializable natural m with 2**exponent >= m, as tight as is safe."""
    if exponent <= POW2_MATERIALIZE_LIMIT:
        return 1 << exponent
    return 2 * exponent


def compare_floor_requirements(a: Magnitude, b: Magnitude) -> Ordering:
    """Order the REQUIREMENTS two magnitudes state (exact v counts as v,
    a lower bound counts as 2**e). Unlike compare_certified this is total:
    requirements are known numbers even when true values are not.
    """
    ra = (0, a.exact_value) if a.is_exact else (1, a.low2)
    rb = (0, b.exact_value) if b.is_exact else (1, b.low2)
    if ra[0] == rb[0]:
        va, vb = ra[1], rb[1]
        assert va is not None and vb is not None
        return _cmp_int(va, vb)
    if ra[0] == 1:  # a is 2**ea vs exact vb
        assert a.low2 is not None and b.exact_value is not None
        if pow2_exceeds(a.low2, b.exact_value):
            return Ordering.GREATER
        if (1 << min(a.low2, b.exact_value.bit_length() + 1)) == b.exact_value:
            return Ordering.EQUAL
        return Ordering.LESS
    flipped = compare_floor_requirements(b, a)
    if flipped == Ordering.GREATER:
        return Ordering.LESS
    if flipped == Ordering.LESS:
        return Ordering.GREATER
    return flipped


def _cmp_int(x: int, y: int) -> Ordering:
    if x < y:
        return Ordering.LESS
    if x > y:
        return Ordering.GREATER
    return Ordering.EQUAL
