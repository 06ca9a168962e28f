#!/usr/bin/env python3
"""Generate classical_mu fixtures for the symplectic groups S_2n(q).

Maximal element orders of PSp_2n(q) are built from its structure:

* semisimple elements live in maximal tori prod C(q^n_i - e_i) with
  sum n_i = n; for odd q the image in PSp halves the torus exponent exactly
  when all the 2-parts of q^n_i - e_i agree;
* an element with unipotent part of order p^k needs one Jordan block of
  size p^(k-1) + 1 (odd p) or 2^(k-1) + 2 (p = 2, k >= 2; size 2 for k = 1),
  the complement carrying a torus of a smaller symplectic group.

``--verify`` samples random products of symplectic transvections over a
prime field and checks every sampled order lies in the generated spectrum
and every generated maximal order is hit.

Usage:  gen_symplectic_fixtures.py OUTDIR n:q [n:q ...] [--verify]
"""

import json
import random
import sys
from math import gcd
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from spectre.arith import lcm_all, prime_power_decompose, valuation  # noqa: E402
from spectre.spectra import MinSpec  # noqa: E402


def signed_partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in signed_partitions(n - first, first):
            for sign in (1, -1):
                yield ((first, sign),) + rest


def torus_exponents(n, q, halve):
    out = set()
    for part in signed_partitions(n):
        vals = [q ** x - s for x, s in part]
        L = lcm_all(vals)
        if halve and vals and len({valuation(v, 2) for v in vals}) == 1:
            L //= 2
        out.add(L)
    if n == 0:
        out.add(1)
    return out


def symplectic_mu(n, q):
    p = prime_power_decompose(q).p
    orders = set(torus_exponents(n, q, halve=(p != 2)))
    k = 1
    while True:
        if p == 2:
            block = 2 if k == 1 else 2 ** (k - 1) + 2
        else:
            block = p ** (k - 1) + 1
        if block > 2 * n:
            break
        rest = n - block // 2
        orders |= {p ** k * L for L in torus_exponents(rest, q, halve=False)}
        k += 1
    return MinSpec(orders)


def _order_mod_center(g, p, dim):
    import numpy as np
    ident = np.eye(dim, dtype=np.int64)
    x, k = g.copy(), 1
    while not (np.array_equal(x, ident) or np.array_equal(x, (-ident) % p)):
        x = x @ g % p
        k += 1
    return k


def verify(n, p, samples=20000, seed=1):
    import numpy as np
    dim = 2 * n
    J = np.zeros((dim, dim), dtype=np.int64)
    J[:n, n:] = np.eye(n, dtype=np.int64)
    J[n:, :n] = -np.eye(n, dtype=np.int64)
    rng = random.Random(seed)

    def transvection():
        v = np.array([rng.randrange(p) for _ in range(dim)], dtype=np.int64)
        c = rng.randrange(1, p)
        # x -> x + c <x, v> v, as a matrix acting on column vectors
        return (np.eye(dim, dtype=np.int64) + c * np.outer(v, v @ J.T)) % p

    mu = symplectic_mu(n, p)
    seen = set()
    g = np.eye(dim, dtype=np.int64)
    for _ in range(samples):
        for _ in range(3):
            g = g @ transvection() % p
        seen.add(_order_mod_center(g, p, dim))
    outside = [o for o in seen if not any(m % o == 0 for m in mu)]
    missed = [m for m in mu if m not in seen]
    return outside, missed


def main(argv):
    out = Path(argv[0])
    out.mkdir(parents=True, exist_ok=True)
    check = "--verify" in argv
    for spec in [a for a in argv[1:] if ":" in a]:
        n, q = (int(x) for x in spec.split(":"))
        if check:
            outside, missed = verify(n, q)
            print("S%d(%d): outside=%s missed=%s" % (2 * n, q, outside, missed))
            continue
        mu = symplectic_mu(n, q)
        path = out / ("S_%d_%d.json" % (n, q))
        path.write_text(json.dumps({"family": "S", "n": n, "q": q,
                                    "mu": [str(x) for x in mu]}, indent=1) + "\n")
        print(path, len(mu))


if __name__ == "__main__":
    main(sys.argv[1:])
