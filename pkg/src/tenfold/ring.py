"""Exact scalars, Bezout identities, p-adic valuations and localizations.

Scalars are :class:`fractions.Fraction` values; they are kept in lowest terms
with a positive denominator, so equality is structural.  Integers are the
denominator-one subset.
"""

from __future__ import annotations

import math
import random
import re
from fractions import Fraction
from typing import Protocol

from .errors import DomainError, FactorizationRangeError, InvalidPrimeError, ParseError

Scalar = Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 1 << 64
_PROBABILISTIC_ROUNDS = 64
TRIAL_DIVISION_BOUND = 10**6
MAX_DECIMAL_EXPONENT = 4300
_EXPONENT = re.compile(r"[eE]\s*([+-]?\d+)")


def parse_scalar(text) -> Fraction:
    """Parse ``"a/b"``, a finite decimal such as ``"0.1"`` or an integer.

    JSON integers are accepted as well; floats and booleans are not, since
    they cannot be represented exactly.
    """
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ParseError(f"expected a string or integer scalar, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    match = _EXPONENT.search(text)
    if match and abs(int(match.group(1))) > MAX_DECIMAL_EXPONENT:
        raise ParseError(f"decimal exponent too large in {text!r}")
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"cannot parse scalar {text!r}") from exc
    return value


def format_scalar(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_integer(x) -> int:
    """Return ``x`` as an int, raising :class:`DomainError` if it is not integral."""
    if isinstance(x, bool):
        raise DomainError(f"boolean is not an integer entry: {x!r}")
    if isinstance(x, int):
        return x
    x = Fraction(x)
    if x.denominator != 1:
        raise DomainError(f"non-integral entry {x}")
    return x.numerator


def bezout_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return ``(g, u, v)`` with ``u*a + v*b == g == gcd(|a|, |b|)``."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    if old_r == 0:
        return 0, 0, 0
    return old_r, old_u, old_v


def _miller_rabin(n: int, bases) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic below 2**64, 64-round Miller-Rabin above (seeded, so repeatable)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _DETERMINISTIC_LIMIT:
        return _miller_rabin(n, _SMALL_PRIMES)
    rng = random.Random(n)
    return _miller_rabin(n, (rng.randrange(2, n - 1) for _ in range(_PROBABILISTIC_ROUNDS)))


class Prime(int):
    """A validated rational prime."""

    def __new__(cls, value) -> "Prime":
        if isinstance(value, Prime):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidPrimeError(f"prime must be an integer, got {value!r}")
        if not is_prime(value):
            raise InvalidPrimeError(f"{value} is not prime")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ord_p(f, p) -> int | float:
    """p-adic valuation of a rational: the exponent ``a`` in ``f = (r1/r2) * p**a``.

    Returns ``math.inf`` for zero.
    """
    p = Prime(p)
    f = Fraction(f)
    if f == 0:
        return math.inf
    return _int_valuation(abs(f.numerator), p) - _int_valuation(f.denominator, p)


def in_localization(f, p) -> bool:
    """Membership of ``f`` in the localization of Z at ``p``."""
    return ord_p(f, p) >= 0


def _pollard_brent(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a nonzero integer, as ``{prime: exponent}``.

    Trial division runs up to 10**6; the remaining cofactor must be below
    2**64 or :class:`FactorizationRangeError` is raised.
    """
    n = abs(as_integer(n))
    if n == 0:
        raise DomainError("cannot factor zero")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d, step = 5, 2
    while d * d <= n and d <= TRIAL_DIVISION_BOUND:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += step
        step = 6 - step
    if n > 1:
        if n >= _DETERMINISTIC_LIMIT:
            raise FactorizationRangeError(
                f"cofactor {n} exceeds 2**64 after trial division up to {TRIAL_DIVISION_BOUND}"
            )
        _split(n, factors)
    return dict(sorted(factors.items()))


class BezoutRing(Protocol):
    """Operations the Smith elimination needs from its coefficient ring."""

    def bezout(self, a, b) -> tuple: ...

    def divides(self, a, b) -> bool: ...

    def exact_div(self, a, b): ...

    def normalize(self, a) -> tuple:
        """Return ``(unit, associate)`` with ``associate == unit * a`` canonical."""
        ...

    def size(self, a) -> int:
        """Euclidean-style magnitude used for pivot selection."""
        ...

    def factor(self, a) -> dict: ...


class IntegerRing:
    """The integers as a Bezout ring; canonical associates are nonnegative."""

    zero = 0
    one = 1

    def bezout(self, a: int, b: int) -> tuple[int, int, int]:
        return bezout_gcd(a, b)

    def divides(self, a: int, b: int) -> bool:
        if a == 0:
            return b == 0
        return b % a == 0

    def exact_div(self, a: int, b: int) -> int:
        q, r = divmod(a, b)
        if r:
            raise DomainError(f"{b} does not divide {a}")
        return q

    def normalize(self, a: int) -> tuple[int, int]:
        return (-1, -a) if a < 0 else (1, a)

    def size(self, a: int) -> int:
        return abs(a)

    def factor(self, a: int) -> dict[int, int]:
        return factorize(a)

    def __repr__(self) -> str:
        return "ZZ"


ZZ = IntegerRing()
