"""Exact integer arithmetic used throughout the recognizer.

Everything here works on Python ints, so values are arbitrary precision.
Factoring is only ever applied to small auxiliary numbers (indices,
``r - 1`` for word-sized primes, degrees); pipeline inputs are handled with
gcd-based splitting instead.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence

__all__ = [
    "PrimePower", "IntPoly", "PRIMALITY_ROUNDS", "ROOT_WINDOW",
    "gcd", "lcm", "lcm_all", "nu_part", "nu_coprime_part", "two_part",
    "odd_part", "valuation", "sieve_primes", "is_prime",
    "prime_power_decompose", "integer_nth_root", "small_factorize",
    "divisors", "mult_order", "cyclotomic_eval", "zsigmondy_exception",
    "greatest_primitive_divisor", "solve_poly_prime_power",
]

# rounds of the strong-pseudoprime test for n beyond the deterministic range
PRIMALITY_ROUNDS = 64
# half-width of the integer window searched around the approximate root
ROOT_WINDOW = 4

# Miller-Rabin with these bases is exact for n < 3.3e24
_DET_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DET_LIMIT = 3317044064679887385961981


@dataclass(frozen=True, order=True)
class PrimePower:
    p: int
    k: int

    @property
    def value(self) -> int:
        return self.p ** self.k


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    @classmethod
    def binomial(cls, n: int, const: int) -> "IntPoly":
        """x**n + const"""
        c = [0] * (n + 1)
        c[0] += const
        c[n] += 1
        return cls(tuple(c))


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def lcm_all(values: Iterable[int]) -> int:
    acc = 1
    for v in values:
        acc = lcm(acc, v)
    return acc


def nu_part(r: int, nu: Iterable[int]) -> int:
    """Largest divisor of r whose primes all divide some element of nu.

    Works by repeated gcd division, so r is never factored.
    """
    r = abs(r)
    rest = r
    for n in nu:
        g = gcd(rest, n)
        while g > 1:
            rest //= g
            g = gcd(rest, g)
    return r // rest


def nu_coprime_part(r: int, nu: Iterable[int]) -> int:
    return abs(r) // nu_part(r, nu)


def valuation(n: int, p: int) -> int:
    n = abs(n)
    if n == 0:
        raise ValueError("valuation of zero")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def two_part(n: int) -> int:
    n = abs(n)
    return n & -n


def odd_part(n: int) -> int:
    n = abs(n)
    return n // (n & -n)


def sieve_primes(limit: int) -> list:
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, rounds: int | None = None) -> bool:
    """Deterministic below 3.3e24, strong-pseudoprime test with fixed
    pseudo-random bases above (``PRIMALITY_ROUNDS`` of them)."""
    if n < 2:
        return False
    for p in _DET_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _DET_LIMIT:
        return all(_strong_probable_prime(n, a, d, s) for a in _DET_BASES)
    rounds = PRIMALITY_ROUNDS if rounds is None else rounds
    rng = random.Random(n)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        if not _strong_probable_prime(n, a, d, s):
            return False
    return True


def integer_nth_root(A: int, n: int) -> int:
    """floor(A ** (1/n)) computed exactly."""
    if A < 0 or n < 1:
        raise ValueError("need A >= 0 and n >= 1")
    if A < 2 or n == 1:
        return A
    if n == 2:
        return isqrt(A)
    # start above the root, then Newton steps decrease monotonically
    x = 1 << -(-A.bit_length() // n)
    while True:
        y = ((n - 1) * x + A // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    while x ** n > A:
        x -= 1
    while (x + 1) ** n <= A:
        x += 1
    return x


def prime_power_decompose(q: int) -> PrimePower | None:
    if q < 2:
        return None
    for k in range(q.bit_length(), 0, -1):
        r = integer_nth_root(q, k)
        if r >= 2 and r ** k == q:
            # k is maximal, so r is not itself a perfect power
            return PrimePower(r, k) if is_prime(r) else None
    return None


@lru_cache(maxsize=4096)
def small_factorize(n: int) -> tuple:
    """Trial division; only for word-sized auxiliary quantities."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def divisors(n: int) -> list:
    divs = [1]
    for p, k in small_factorize(n):
        divs = [d * p ** e for d in divs for e in range(k + 1)]
    return sorted(divs)


def mult_order(a: int, r: int) -> int:
    """Multiplicative order of a modulo r (r word-sized)."""
    if r < 2:
        raise ValueError("modulus must be >= 2")
    a %= r
    if gcd(a, r) != 1:
        raise ValueError("not a unit")
    if is_prime(r):
        e = r - 1
        for p, _ in small_factorize(r - 1):
            while e % p == 0 and pow(a, e // p, r) == 1:
                e //= p
        return e
    e, x = 1, a
    while x != 1:
        x = x * a % r
        e += 1
    return e


@lru_cache(maxsize=8192)
def cyclotomic_eval(i: int, a: int) -> int:
    """Value of the i-th cyclotomic polynomial at a, from a**i - 1 = prod Phi_d(a)."""
    if i < 1:
        raise ValueError("index must be positive")
    value = a ** i - 1
    for d in divisors(i)[:-1]:
        value //= cyclotomic_eval(d, a)
    return value


def zsigmondy_exception(a: int, i: int) -> bool:
    """True exactly when a**i - 1 has no primitive prime divisor."""
    if a == 2 and i in (1, 6):
        return True
    if a == -2 and i == 3:
        return True
    if i == 2:
        # a = 2**l - 1 (l >= 2) or a = -2**l - 1 (l >= 0)
        b = a + 1 if a > 0 else -(a + 1)
        return b >= 1 and b & (b - 1) == 0 and (a < 0 or b >= 4)
    return False


def _positive_gpd(b: int, j: int) -> int:
    if j == 1:
        return b - 1
    if j == 2:
        return odd_part(b + 1)
    value = cyclotomic_eval(j, b)
    r = small_factorize(j)[-1][0]
    while value % r == 0:
        value //= r
    return value


def greatest_primitive_divisor(a: int, i: int) -> int:
    """Phi*_i(a): the part of a**i - 1 made of primitive prime divisors.

    The prime 2 is only ever primitive for i = 1.
    """
    if abs(a) < 2 or i < 1:
        raise ValueError("need |a| > 1 and i >= 1")
    if i == 1:
        return abs(a - 1)
    if a > 0:
        return odd_part(_positive_gpd(a, i))
    if i % 2:
        j = 2 * i
    elif i % 4 == 2:
        j = i // 2
    else:
        j = i
    return odd_part(_positive_gpd(-a, j))


def solve_poly_prime_power(f: IntPoly, c_num: int, c_den: int, B: int,
                           window: int | None = None) -> list:
    """All prime powers q with (c_num / c_den) * f(q) == B.

    f is assumed to have its complex roots on the unit circle, so the root
    lies within a few units of the real d-th root of B / (c * lead).
    """
    if f.degree < 1 or c_num < 1 or c_den < 1 or B < 1:
        return []
    window = ROOT_WINDOW if window is None else window
    target = B * c_den
    if target % c_num:
        return []
    value = target // c_num
    lead = f.leading
    if lead < 1:
        return []
    x0 = integer_nth_root(value // lead, f.degree)
    out = []
    for q in range(max(2, x0 - window), x0 + window + 1):
        if f(q) == value:
            pp = prime_power_decompose(q)
            if pp is not None:
                out.append(pp)
    return out
