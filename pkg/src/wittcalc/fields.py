"""Base fields and square-class arithmetic.

Supported base fields are Q, R, C and F_p for odd primes p.  All
arithmetic is exact: rationals are `fractions.Fraction`, and square
classes are canonicalized to integers

* over Q:   the square-free integer with the sign of the entry,
* over R:   +1 or -1,
* over C:   1,
* over F_p: 1 or the smallest positive non-residue.

Characteristic 2 is rejected everywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidEntry

# Trial division handles everything this package produces in practice;
# the rho fallback keeps large accidental cofactors from hanging us.
_TRIAL_BOUND = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (the fixed bases cover n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Brent's variant with deterministic restarts; n must be odd, composite.
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = _gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1, as a sorted tuple of (prime, exponent)."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    while d * d <= n and d <= _TRIAL_BOUND:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _pollard_rho(m)
        stack.append(f)
        stack.append(m // f)
    return tuple(sorted(out.items()))


def squarefree_part(a: int | Fraction) -> int:
    """Square-class representative of a nonzero rational: a square-free
    integer with the same sign, congruent to a modulo nonzero squares."""
    a = Fraction(a)
    if a == 0:
        raise InvalidEntry("zero has no square class")
    n = abs(a.numerator * a.denominator)
    r = 1
    for p, e in factorize(n):
        if e % 2:
            r *= p
    return r if a > 0 else -r


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} for an odd prime p."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


@lru_cache(maxsize=None)
def smallest_nonresidue(p: int) -> int:
    n = 2
    while legendre(n, p) != -1:
        n += 1
    return n


@dataclass(frozen=True)
class FieldSpec:
    """One of the supported base fields: Q, R, C, or F_p with p an odd prime."""

    kind: str
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("Q", "R", "C", "Fp"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "Fp":
            if self.p is None or self.p == 2 or not is_prime(self.p):
                raise InvalidEntry(
                    "finite base fields must have odd prime order "
                    "(characteristic 2 is rejected)"
                )
        elif self.p is not None:
            raise ValueError(f"field {self.kind} takes no prime parameter")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Fp" else 0

    def canonical_entry(self, a: int | Fraction) -> int:
        """Canonical square-class representative of a nonzero entry."""
        if self.kind == "Q":
            return squarefree_part(Fraction(a))
        if self.kind == "R":
            a = Fraction(a)
            if a == 0:
                raise InvalidEntry("zero has no square class")
            return 1 if a > 0 else -1
        if self.kind == "C":
            if Fraction(a) == 0:
                raise InvalidEntry("zero has no square class")
            return 1
        p = self.p
        assert p is not None
        a = Fraction(a)
        num, den = a.numerator % p, a.denominator % p
        if num == 0 or den == 0:
            raise InvalidEntry(f"entry {a} is not a unit mod {p}")
        r = num * pow(den, p - 2, p) % p
        return 1 if legendre(r, p) == 1 else smallest_nonresidue(p)

    def negate_entry(self, a: int) -> int:
        """Canonical representative of -a (a already canonical)."""
        if self.kind == "C":
            return 1
        return self.canonical_entry(-a)

    def __str__(self) -> str:
        return f"F{self.p}" if self.kind == "Fp" else self.kind


Q = FieldSpec("Q")
R = FieldSpec("R")
C = FieldSpec("C")


def Fp(p: int) -> FieldSpec:
    return FieldSpec("Fp", p)
