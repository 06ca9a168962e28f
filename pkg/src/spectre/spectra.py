"""Minimal spectra, membership tests and distinguishing elements.

Covers the alternating groups (support-sum criterion), the lcm-form test
used for classical groups, the zeta sets of the classical families, and a
registry of per-type spectrum generators.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Callable, Iterable

from .arith import (IntPoly, is_prime, lcm, lcm_all, prime_power_decompose, sieve_primes,
                    small_factorize, divisors)

__all__ = [
    "MinSpec", "GroupName", "minimal_spectrum", "omega_contains",
    "alt_cost", "alt_contains", "alt_spectrum_elements", "alt_minimal_spectrum",
    "alt_distinguisher", "alt_prime_graph", "classical_lcm_form_check",
    "classical_membership", "zeta_set", "zeta_forms", "spec_dist_element", "SpectrumRegistry",
    "default_registry", "psl2_nu", "CLASSICAL_FAMILIES", "TableDomainError",
    "NoGenerator", "lie_rank",
]

CLASSICAL_FAMILIES = ("L", "U", "S", "O_odd", "O_plus", "O_minus")


class TableDomainError(ValueError):
    pass


class NoGenerator(KeyError):
    pass


class MinSpec(tuple):
    """Sorted divisibility antichain of positive integers."""

    def __new__(cls, values: Iterable[int] = ()):
        return super().__new__(cls, _antichain(values))

    def __repr__(self):
        return "MinSpec(%s)" % list(self)

    @property
    def max(self) -> int:
        return self[-1] if self else 0


def _antichain(values) -> list:
    vals = sorted({int(v) for v in values}, reverse=True)
    if vals and vals[-1] < 1:
        raise ValueError("spectrum elements must be positive")
    keep = []
    for v in vals:
        if not any(k % v == 0 for k in keep):
            keep.append(v)
    keep.reverse()
    return keep


def minimal_spectrum(M: Iterable[int]) -> MinSpec:
    return MinSpec(M)


def omega_contains(mu: Iterable[int], d: int) -> bool:
    return any(a % d == 0 for a in mu)


@dataclass(frozen=True, order=True)
class GroupName:
    """CFSG name: alternating degree, classical family/rank/field, or sporadic."""

    kind: str
    family: str = ""
    n: int = 0
    q: int = 0

    @classmethod
    def alternating(cls, n: int) -> "GroupName":
        if n < 5:
            raise ValueError("alternating groups need degree >= 5")
        return cls("alternating", "A", n)

    @classmethod
    def classical(cls, family: str, n: int, q: int) -> "GroupName":
        if family not in CLASSICAL_FAMILIES:
            raise ValueError("unknown family %r" % family)
        if n < 2 or prime_power_decompose(q) is None:
            raise ValueError("bad classical parameters")
        return cls("classical", family, n, q)

    @classmethod
    def sporadic(cls, name: str) -> "GroupName":
        return cls("sporadic", name)

    def __str__(self):
        if self.kind == "alternating":
            return "A%d" % self.n
        if self.kind == "sporadic":
            return self.family
        if self.kind == "classical":
            f, n, q = self.family, self.n, self.q
            if f in ("L", "U"):
                return "%s%d(%d)" % (f, n, q)
            if f == "S":
                return "S%d(%d)" % (2 * n, q)
            if f == "O_odd":
                return "O%d(%d)" % (2 * n + 1, q)
            return "O%s%d(%d)" % ("+" if f == "O_plus" else "-", 2 * n, q)
        return "%s(%d,%d)" % (self.family, self.n, self.q)

    def to_json(self) -> dict:
        if self.kind == "sporadic":
            return {"kind": "sporadic", "family": self.family}
        return {"kind": self.kind, "family": self.family, "n": str(self.n), "q": str(self.q)}

    @classmethod
    def from_json(cls, d: dict) -> "GroupName":
        return cls(d["kind"], d["family"], int(d.get("n", 0)), int(d.get("q", 0)))


def lie_rank(family: str, n: int) -> int:
    if family in ("L", "U"):
        return n - 1 if family == "L" else n // 2
    return n


# -- alternating groups -------------------------------------------------------

def alt_cost(a: int, primes=None):
    """Least degree of a symmetric-group element of order a that is even,
    or None when a has a prime factor outside ``primes``."""
    if a == 1:
        return 0
    rest = a
    total = 0
    for p in primes if primes is not None else sieve_primes(a):
        if rest == 1:
            break
        if rest % p == 0:
            pk = 1
            while rest % p == 0:
                rest //= p
                pk *= p
            total += pk
    if rest != 1:
        return None
    return total + (2 if a % 2 == 0 else 0)


def alt_contains(a: int, n: int, primes=None) -> bool:
    """Membership of a in the spectrum of A_n."""
    if a == 1:
        return True
    if primes is None:
        primes = sieve_primes(n)
    cost = alt_cost(a, primes)
    return cost is not None and cost <= n


def alt_spectrum_elements(n: int):
    """Every a with alt_contains(a, n), built from coprime prime powers."""
    primes = sieve_primes(n)
    out = set()

    def rec(i, value, used):
        out.add(value)
        for j in range(i, len(primes)):
            p = primes[j]
            pk = p
            while used + pk <= n:
                v = value * pk
                extra = 2 if v % 2 == 0 else 0
                if used + pk + extra <= n:
                    rec(j + 1, v, used + pk)
                pk *= p

    rec(0, 1, 0)
    return out


def alt_minimal_spectrum(n: int) -> MinSpec:
    return MinSpec(alt_spectrum_elements(n))


_ALT_BASE = {3: 3, 4: 2, 5: 5, 6: 4, 7: 7}


def _peel(rem, bound, primes, width):
    """Coprime factors of total cost exactly rem, primes below bound."""
    if rem == 0:
        return []
    if rem in _ALT_BASE:
        b = _ALT_BASE[rem]
        if all(p < bound for p, _ in small_factorize(b)):
            return [b]
    tried = 0
    for p in reversed(primes):
        if p >= bound or p > rem:
            continue
        if 2 * p <= rem:
            break
        if p < 3:
            break
        sub = _peel(rem - p, p, primes, width)
        if sub is not None:
            return [p] + sub
        tried += 1
        if tried >= width:
            break
    return None


def _search_cost(target, primes):
    # coprime prime powers with exact total cost target, largest parts first
    odd = [p for p in primes if p > 2]

    def rec(rem, idx):
        if rem == 0:
            return []
        for j in range(idx, -1, -1):
            p = odd[j]
            pk = p
            while pk <= rem:
                sub = rec(rem - pk, j - 1)
                if sub is not None:
                    return [pk] + sub
                pk *= p
        return None

    res = rec(target, len(odd) - 1)
    if res is not None:
        return res
    # even element: a power of two costs 2**k + 2
    k = 1
    while 2 ** k + 2 <= target:
        res = rec(target - 2 ** k - 2, len(odd) - 1)
        if res is not None:
            return [2 ** k] + res
        k += 1
    return None


def alt_distinguisher(n: int) -> int:
    """An element of omega(A_{n+1}) not in omega(A_n).

    Greedy prime peeling with backtracking, then a direct search; the answer
    is always re-checked with alt_contains before it is returned.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    target = n + 1
    primes = sieve_primes(target)
    candidates = []
    if target in _ALT_BASE:
        candidates.append([_ALT_BASE[target]])
    elif is_prime(target):
        candidates.append([target])
    peeled = _peel(target, target + 1, primes, 3)
    if peeled is not None:
        candidates.append(peeled)
    for parts in candidates:
        a = 1
        for x in parts:
            a *= x
        if alt_contains(a, target, primes) and not alt_contains(a, n, primes):
            return a
    parts = _search_cost(target, primes)
    if parts is None:
        raise RuntimeError("no distinguishing element for n=%d" % n)
    a = 1
    for x in parts:
        a *= x
    assert alt_contains(a, target, primes) and not alt_contains(a, n, primes)
    return a


def alt_prime_graph(n: int):
    from .graph import Graph
    primes = sieve_primes(n)
    return Graph.from_predicate(primes, lambda p, r: alt_contains(p * r, n, primes))


# -- classical groups ---------------------------------------------------------

def _p_strip(A, p):
    m = 0
    while A % p == 0:
        A //= p
        m += 1
    return m, A


def _mu_terms(terms):
    """terms: list of (exponent, value, sign); keep value-maximal, smallest exponent."""
    best = {}
    for x, v, s in terms:
        if v == 1:
            continue
        if v not in best or x < best[v][0]:
            best[v] = (x, v, s)
    vals = sorted(best.values(), key=lambda t: -t[1])
    keep = []
    for t in vals:
        if not any(k[1] % t[1] == 0 for k in keep):
            keep.append(t)
    return keep


def classical_lcm_form_check(A: int, p: int, q: int, n: int, case: int,
                             epsilon: int = 1, parity: str | None = None) -> bool:
    """Is A = p^m [lcm of (eps q)^x - 1 terms] (case 1) or
    p^m [lcm of q^x -/+ 1 terms] (case 2) within the exponent budget?

    Case 1 budget: floor(p^(m-1)) + sum x_i <= n.
    Case 2 budget: floor(p^(m-1)) + 2 sum x_i <= n; ``parity`` optionally fixes
    the parity of the number of '+1' terms.
    """
    if A < 1:
        return False
    if A == 1:
        return n >= 0 and parity != "odd"
    m, B = _p_strip(A, p)
    budget = n - (p ** (m - 1) if m else 0)
    if budget < 0:
        return False
    if case == 1:
        return _case1(B, q, budget, epsilon)
    if case == 2:
        return _case2(B, q, budget // 2, parity)
    raise ValueError("case must be 1 or 2")


def _case1(B, q, budget, epsilon):
    if B == 1:
        return True
    a = epsilon * q
    S = []
    for x in range(1, budget + 1):
        v = abs(a ** x - 1)
        if B % v == 0:
            S.append((x, v, 0))
    if lcm_all(t[1] for t in S) != B:
        return False
    # for q = 2, eps = -1 both x = 1, 2 give 3; it is taken as (-q) - 1
    return sum(t[0] for t in _mu_terms(S)) <= budget


def _case2_options(B, q, half):
    """Candidate presentations of B: mu(S), alone or with one even q^e - 1."""
    S = []
    evens = []
    for x in range(1, half + 1):
        minus, plus = q ** x - 1, q ** x + 1
        if B % minus == 0:
            if x % 2:
                S.append((x, minus, 0))
            else:
                evens.append((x, minus, 0))
        if B % plus == 0:
            S.append((x, plus, 1))
    if lcm_all(t[1] for t in S + evens) != B:
        return []
    base = _mu_terms(S)
    options = []
    if lcm_all(t[1] for t in base) == B:
        options.append(base)
    for e in evens:
        cand = _mu_terms(base + [e])
        if lcm_all(t[1] for t in cand) == B:
            options.append(cand)
    return sorted(options, key=lambda ts: sum(t[0] for t in ts))


def _case2(B, q, half, parity):
    if B == 1:
        return parity != "odd"
    options = [r for r in _case2_options(B, q, half) if sum(t[0] for t in r) <= half]
    if not options:
        return False
    if parity is None:
        return True
    want = 0 if parity == "even" else 1
    smallest_plus = next((y for y in range(1, half + 1) if B % (q ** y + 1) == 0), None)
    for rep in options:
        total = sum(t[0] for t in rep)
        if sum(t[2] for t in rep) % 2 == want:
            return True
        # merge a pair q^x - 1, q^x + 1 into q^2x - 1
        minus_exps = {t[0] for t in rep if t[2] == 0}
        for t in rep:
            if t[2] == 1 and t[0] in minus_exps and B % (q ** (2 * t[0]) - 1) == 0:
                return True
        # or add the smallest q^y + 1 dividing B
        if smallest_plus is not None and total + smallest_plus <= half:
            return True
    return False


def _profile(family: str, n: int, q: int):
    """(case, epsilon, budget, multipliers) for membership screening."""
    if family == "L":
        d = gcd(n, q - 1)
        return 1, 1, n, sorted({a * b for a in divisors(d) for b in (1, q - 1)})
    if family == "U":
        d = gcd(n, q + 1)
        return 1, -1, n, sorted({a * b for a in divisors(d) for b in (1, q + 1)})
    mults = [1] if q % 2 == 0 else [1, 2, 4]
    # case 2 budgets are the dimension of the natural module
    if family == "O_odd":
        return 2, 1, 2 * n + 1, mults
    return 2, 1, 2 * n, mults


def classical_membership(A: int, family: str, n: int, q: int) -> bool:
    """Necessary condition for A to be a maximal element order of the group.

    Each maximal order is an lcm-form number divided by a small central or
    toral factor, so A is accepted when A times one of those factors has the
    lcm form for the family's budget.
    """
    pp = prime_power_decompose(q)
    if pp is None:
        raise TableDomainError("q must be a prime power")
    case, eps, budget, mults = _profile(family, n, q)
    return any(classical_lcm_form_check(A * d, pp.p, q, budget, case, eps) for d in mults)


def zeta_set(family: str, n: int, q: int) -> list:
    """Elements of mu(G) with a prime non-adjacent to the characteristic."""
    if family not in CLASSICAL_FAMILIES or n < 2 or prime_power_decompose(q) is None:
        raise TableDomainError("table domain: %r %r %r" % (family, n, q))
    t = gcd(2, q - 1)
    if family == "L":
        d = gcd(n, q - 1)
        vals = [(q ** n - 1) // ((q - 1) * d), (q ** (n - 1) - 1) // d]
    elif family == "U":
        d = gcd(n, q + 1)
        vals = [(q ** n - (-1) ** n) // ((q + 1) * d),
                (q ** (n - 1) - (-1) ** (n - 1)) // d]
    elif family in ("S", "O_odd"):
        if n % 2 == 0:
            vals = [(q ** n + 1) // t]
        else:
            vals = [(q ** n - 1) // t, (q ** n + 1) // t]
    elif family == "O_plus":
        if n % 2 == 0:
            vals = [(q ** (n - 1) - 1) // t, (q ** (n - 1) + 1) // t]
        else:
            d = gcd(4, q ** n - 1)
            vals = [(q ** (n - 1) + 1) * (q + 1) // d, (q ** n - 1) // d]
    else:
        if n % 2 == 0:
            vals = [(q ** n + 1) // gcd(2, q + 1), lcm(q ** (n - 1) + 1, q - 1),
                    lcm(q ** (n - 1) - 1, q + 1)]
        else:
            d = gcd(4, q ** n + 1)
            vals = [(q ** n + 1) // d, (q ** (n - 1) + 1) * (q - 1) // d]
    return sorted(set(vals))


def _geom(n: int, sign: int = 1) -> IntPoly:
    """(x^n - sign^n) / (x - sign)"""
    return IntPoly(tuple(sign ** (n - 1 - i) for i in range(n)))


def zeta_forms(family: str, n: int, q: int) -> list:
    """The zeta set as (c_num, c_den, f) with each element equal to c * f(q).

    f is a product of cyclotomic factors, so solve_poly_prime_power can
    invert every entry; c carries the gcd with q that the table divides by.
    """
    if family not in CLASSICAL_FAMILIES or n < 2 or prime_power_decompose(q) is None:
        raise TableDomainError("table domain: %r %r %r" % (family, n, q))
    B = IntPoly.binomial
    t = gcd(2, q - 1)
    if family == "L":
        d = gcd(n, q - 1)
        return [(1, d, _geom(n)), (1, d, B(n - 1, -1))]
    if family == "U":
        d = gcd(n, q + 1)
        return [(1, d, _geom(n, -1)), (1, d, B(n - 1, (-1) ** n))]
    if family in ("S", "O_odd"):
        if n % 2 == 0:
            return [(1, t, B(n, 1))]
        return [(1, t, B(n, -1)), (1, t, B(n, 1))]
    if family == "O_plus":
        if n % 2 == 0:
            return [(1, t, B(n - 1, -1)), (1, t, B(n - 1, 1))]
        d = gcd(4, q ** n - 1)
        return [(1, d, B(n - 1, 1) * IntPoly((1, 1))), (1, d, B(n, -1))]
    if n % 2 == 0:
        return [(1, gcd(2, q + 1), B(n, 1)), (1, t, B(n - 1, 1) * IntPoly((-1, 1))),
                (1, t, B(n - 1, -1) * IntPoly((1, 1)))]
    d = gcd(4, q ** n + 1)
    return [(1, d, B(n, 1)), (1, d, B(n - 1, 1) * IntPoly((-1, 1)))]


def spec_dist_element(kind: str, n: int, q: int) -> int:
    pp = prime_power_decompose(q)
    if pp is None:
        raise ValueError("q must be a prime power")
    if kind == "sympl_vs_odd_orth":
        if pp.p == 2:
            raise ValueError("symplectic/orthogonal distinguisher needs odd p")
        return pp.p * (q ** (n - 1) + 1)
    if kind == "dplus_vs_rest":
        if n <= 5:
            raise ValueError("needs n > 5")
        x = q ** (n + 1) - 1
        return x // gcd(4, x)
    raise ValueError("unknown kind %r" % kind)


# -- generator registry -------------------------------------------------------

def psl2_nu(q: int) -> list:
    pp = prime_power_decompose(q)
    if pp is None or q < 4:
        raise ValueError("PSL_2 needs a prime power q >= 4")
    d = gcd(2, q - 1)
    return [pp.p, (q - 1) // d, (q + 1) // d]


@dataclass
class SpectrumRegistry:
    """(family, n) -> generator q -> nu(G); fixtures are keyed by (family, n, q).

    Fill at start-up, then treat as read-only.
    """

    generators: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    fixtures: dict = field(default_factory=dict)
    sporadic: dict = field(default_factory=dict)

    def register_generator(self, family: str, n: int, fn: Callable[[int], list],
                           bound: int | None = None) -> None:
        self.generators[(family, n)] = fn
        if bound is not None:
            self.bounds[(family, n)] = bound

    def register_fixture(self, family: str, n: int, q: int, mu: Iterable[int]) -> None:
        self.fixtures[(family, n, q)] = MinSpec(mu)

    def size_bound(self, family: str, n: int) -> int:
        return self.bounds.get((family, n), 60 * max(1, lie_rank(family, n)))

    def generate_nu(self, family: str, n: int, q: int) -> list:
        if (family, n, q) in self.fixtures:
            return list(self.fixtures[(family, n, q)])
        fn = self.generators.get((family, n))
        if fn is None:
            raise NoGenerator("no generator for %s n=%d" % (family, n))
        return fn(q)

    def analytic_types(self, rank: int) -> list:
        return sorted(k for k in self.generators if lie_rank(*k) == rank)

    def fixtures_of_rank(self, rank: int) -> list:
        return sorted(k for k in self.fixtures if lie_rank(k[0], k[1]) == rank)

    def load_data_dir(self, path) -> None:
        path = Path(path)
        for f in sorted((path / "classical_mu").glob("*.json")):
            d = json.loads(f.read_text())
            self.register_fixture(d["family"], int(d["n"]), int(d["q"]),
                                  (int(x) for x in d["mu"]))
        spor = path / "sporadic_spectra.json"
        if spor.exists():
            for entry in json.loads(spor.read_text()):
                self.sporadic[entry["name"]] = MinSpec(int(x) for x in entry["mu"])


def data_dir(override=None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get("SPECTRE_DATA_DIR")
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


def default_registry(data_path=None) -> SpectrumRegistry:
    reg = SpectrumRegistry()
    reg.register_generator("L", 2, psl2_nu, bound=3)
    d = data_dir(data_path)
    if d.exists():
        reg.load_data_dir(d)
    return reg
