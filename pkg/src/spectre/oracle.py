"""Brute-force ground truth.

Nothing in here imports the code it is used to check: element orders come
from partitions and explicit matrices, primitive divisors from their
definition, split and coclique answers from exhaustive search.  These are
exponential and only meant for desk-scale inputs.
"""

from __future__ import annotations

from itertools import product
from math import gcd

__all__ = [
    "partitions", "alt_mu_oracle", "sym_mu_oracle", "psl2_mu_oracle",
    "primitive_divisor_oracle", "split_oracle", "coclique_oracle",
    "atoms_oracle", "lcm_form_oracle", "GF",
]


def partitions(n, largest=None):
    """Partitions of n as non-increasing tuples, each exactly once."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _lcm(a, b):
    return a // gcd(a, b) * b


def _maximal(values):
    vals = sorted(set(values), reverse=True)
    keep = []
    for v in vals:
        if not any(k % v == 0 for k in keep):
            keep.append(v)
    return sorted(keep)


def _orders(n, even_only):
    out = set()
    for part in partitions(n):
        if even_only and sum(x - 1 for x in part) % 2:
            continue
        o = 1
        for x in part:
            o = _lcm(o, x)
        out.add(o)
    return out


def alt_mu_oracle(n):
    if n < 2:
        raise ValueError("degree must be >= 2")
    if n > 60:
        raise ValueError("partition oracle is limited to n <= 60")
    return _maximal(_orders(n, True))


def sym_mu_oracle(n):
    if n < 1 or n > 60:
        raise ValueError("partition oracle is limited to 1 <= n <= 60")
    return _maximal(_orders(n, False))


# irreducible polynomials (lowest coefficient first, monic) for GF(p^k), p^k <= 32
_IRREDUCIBLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (3, 0, 1),
}


class GF:
    """GF(p^k) with elements encoded as base-p digit integers."""

    def __init__(self, p, k=1):
        self.p, self.k, self.q = p, k, p ** k
        if k > 1:
            self.modulus = _IRREDUCIBLE[(p, k)]
        q = self.q
        self.add = [[self._add(a, b) for b in range(q)] for a in range(q)]
        self.mul = [[self._mul(a, b) for b in range(q)] for a in range(q)]
        self.neg = [self._sub(0, a) for a in range(q)]

    def _digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def _encode(self, ds):
        return sum(d * self.p ** i for i, d in enumerate(ds))

    def _add(self, a, b):
        return self._encode([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _sub(self, a, b):
        return self._encode([(x - y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _mul(self, a, b):
        p, k = self.p, self.k
        x, y = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % p
        if k > 1:
            m = self.modulus
            for deg in range(2 * k - 2, k - 1, -1):
                c = prod[deg]
                if c:
                    for i in range(k + 1):
                        prod[deg - k + i] = (prod[deg - k + i] - c * m[i]) % p
        return self._encode(prod[:k])


_FIELD_PARAMS = {q: pk for pk in
                 [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1),
                  (23, 1), (29, 1), (31, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2),
                  (3, 3), (5, 2)]
                 for q in [pk[0] ** pk[1]]}


def psl2_mu_oracle(q):
    """Minimal spectrum of PSL_2(q) by enumerating SL_2(q) explicitly."""
    if q not in _FIELD_PARAMS:
        raise ValueError("matrix oracle needs a prime power q <= 32")
    F = GF(*_FIELD_PARAMS[q])
    add, mul, neg = F.add, F.mul, F.neg
    one = 1
    minus_one = neg[one]

    def mm(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (add[mul[a][e]][mul[b][g]], add[mul[a][f]][mul[b][h]],
                add[mul[c][e]][mul[d][g]], add[mul[c][f]][mul[d][h]])

    ident = (one, 0, 0, one)
    central = {ident, (minus_one, 0, 0, minus_one)}
    orders = set()
    for a, b, c, d in product(range(q), repeat=4):
        if add[mul[a][d]][neg[mul[b][c]]] != one:
            continue
        g = (a, b, c, d)
        x, k = g, 1
        while x not in central:
            x = mm(x, g)
            k += 1
        orders.add(k)
    return _maximal(orders)


def primitive_divisor_oracle(a, i):
    """Part of a**i - 1 made of primes dividing no a**j - 1 with j < i.

    The prime 2 only counts as primitive for i = 1.
    """
    if abs(a) < 2 or i < 1:
        raise ValueError("need |a| > 1, i >= 1")
    x = abs(a ** i - 1)
    for j in range(1, i):
        y = abs(a ** j - 1)
        g = gcd(x, y)
        while g > 1:
            x //= g
            g = gcd(x, g)
    if i >= 2:
        while x % 2 == 0:
            x //= 2
    return x


def _bitmasks(G):
    vs = list(G.vertices)
    idx = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for v in vs:
        for w in G.neighbors(v):
            adj[idx[v]] |= 1 << idx[w]
    return len(vs), adj


def split_oracle(G):
    """Exhaustive: is there a clique K whose complement is independent?

    Every clique of G is visited (including the empty one), so this is the
    full search over admissible K, just without the non-clique subsets.
    """
    n, adj = _bitmasks(G)
    if n > 12:
        raise ValueError("exhaustive split check limited to 12 vertices")
    full = (1 << n) - 1

    def independent(mask):
        m = mask
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if adj[i] & mask:
                return False
            m ^= low
        return True

    def rec(K, cand):
        if independent(full & ~K):
            return True
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            if rec(K | low, cand & adj[i]):
                return True
        return False

    return rec(0, full)


def coclique_oracle(G):
    """Size of a largest independent set, by exhaustive branching."""
    n, adj = _bitmasks(G)
    if n > 12:
        raise ValueError("exhaustive coclique search limited to 12 vertices")

    def rec(cand):
        if not cand:
            return 0
        low = cand & -cand
        i = low.bit_length() - 1
        take = 1 + rec(cand & ~low & ~adj[i])
        skip = rec(cand & ~low)
        return max(take, skip)

    return rec((1 << n) - 1)


def atoms_oracle(mu):
    from .atomic import atomic_divisors_bruteforce
    return atomic_divisors_bruteforce(mu)


def lcm_form_oracle(A, p, q, n, case, epsilon=1, parity=None):
    """Exhaustive search over exponent tuples for the lcm forms.

    case 1: A = p^m [(eps q)^n_1 - 1, ...], floor(p^(m-1)) + sum n_i <= n
    case 2: A = p^m [q^n_1 - 1, ..., q^n_k + 1], floor(p^(m-1)) + 2 sum <= n,
    optionally with the number of '+1' terms of given parity ('even'/'odd').
    """
    m = 0
    B = A
    while B % p == 0:
        B //= p
        m += 1
    head = p ** (m - 1) if m >= 1 else 0
    budget = n - head
    if budget < 0:
        return False
    if case == 1:
        terms = []
        for x in range(1, budget + 1):
            t = abs((epsilon * q) ** x - 1)
            terms.append((x, t))
        return _tuple_search(B, terms, budget, None)
    half = budget // 2
    terms = []
    for x in range(1, half + 1):
        terms.append((x, q ** x - 1, 0))
        terms.append((x, q ** x + 1, 1))
        if parity is not None:
            # exponents need not be distinct; a second copy flips the parity
            terms.append((x, q ** x + 1, 1))
    return _tuple_search(B, terms, half, parity)


def _tuple_search(B, terms, budget, parity):
    want = None if parity is None else (0 if parity == "even" else 1)

    def rec(idx, cost, acc, plus):
        if acc == B and (want is None or plus % 2 == want):
            return True
        for j in range(idx, len(terms)):
            term = terms[j]
            x, t = term[0], term[1]
            if cost + x > budget or t == 0 or B % t:
                continue
            if rec(j + 1, cost + x, _lcm(acc, t), plus + (term[2] if len(term) > 2 else 0)):
                return True
        return False

    if B == 1 and want in (None, 0):
        return True
    return rec(0, 0, 1, 0)
