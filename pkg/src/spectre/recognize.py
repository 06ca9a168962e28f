"""Recognition of a finite simple group from a set of element orders.

The branches run in a fixed order: sporadic table, alternating groups,
Lie type of bounded rank, classical groups of large rank.  The first
branch that confirms a group wins.  Every step appends a ``Decision`` to
the trail so a verdict (including Empty) can be audited afterwards.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from pathlib import Path

from . import arith
from .arith import (IntPoly, greatest_primitive_divisor, is_prime, nu_part,
                    prime_power_decompose, sieve_primes, solve_poly_prime_power)
from .atomic import TooMany, build_ad_graph, prime_graph_restricted, size_cap_C
from .spectra import (CLASSICAL_FAMILIES, GroupName, MinSpec, NoGenerator,
                      SpectrumRegistry, TableDomainError, alt_contains,
                      alt_distinguisher, alt_minimal_spectrum, alt_prime_graph,
                      classical_membership, data_dir, default_registry,
                      omega_contains, spec_dist_element, zeta_set)
from .splitgraph import (max_coclique_split, ranks_from_coclique,
                         split_partition, theta_star_4)

__all__ = [
    "Decision", "RecognitionOutcome", "RecognizeConfig", "M1Entry", "M1Table",
    "RATIO_TABLE", "EXCEPTIONAL_RATIOS", "TWIN_PAIRS", "recognize",
    "recognize_alternating", "recognize_bounded_rank", "classify_large_rank",
    "identify_type_and_field", "Context", "make_context",
]

# (primary, twin) for the only isospectral pairs of simple groups
TWIN_PAIRS = (
    (GroupName("classical", "S", 3, 2), GroupName("classical", "O_plus", 4, 2)),
    (GroupName("classical", "O_odd", 3, 3), GroupName("classical", "O_plus", 4, 3)),
)


def _s(x) -> str:
    return str(x)


@dataclass(frozen=True)
class Decision:
    branch: str
    step: str
    verdict: str
    values: tuple = ()
    tag: str = ""

    def to_json(self) -> dict:
        return {"branch": self.branch, "step": self.step, "verdict": self.verdict,
                "values": {k: v for k, v in self.values}, "tag": self.tag}

    @classmethod
    def from_json(cls, d: dict) -> "Decision":
        vals = d.get("values", {})
        return cls(d["branch"], d["step"], d["verdict"],
                   tuple((k, vals[k]) for k in vals), d.get("tag", ""))


def _dec(branch, step, verdict, tag="", **values) -> Decision:
    norm = []
    for k, v in values.items():
        if isinstance(v, (list, tuple, set, frozenset)):
            v = [_s(x) for x in (sorted(v) if isinstance(v, (set, frozenset)) else v)]
        else:
            v = _s(v)
        norm.append((k, v))
    return Decision(branch, step, verdict, tuple(norm), tag)


@dataclass(frozen=True)
class RecognitionOutcome:
    result: GroupName | None
    twin: GroupName | None = None
    trail: tuple = ()

    @property
    def is_empty(self) -> bool:
        return self.result is None

    def to_json(self) -> dict:
        return {
            "result": None if self.result is None else self.result.to_json(),
            "twin": None if self.twin is None else self.twin.to_json(),
            "trail": [d.to_json() for d in self.trail],
        }

    @classmethod
    def from_json(cls, d: dict) -> "RecognitionOutcome":
        res = d.get("result")
        tw = d.get("twin")
        return cls(None if res is None else GroupName.from_json(res),
                   None if tw is None else GroupName.from_json(tw),
                   tuple(Decision.from_json(x) for x in d.get("trail", [])))


@dataclass(frozen=True)
class RecognizeConfig:
    data_dir: str | None = None
    cap: int | None = None
    rounds: int | None = None
    max_rank: int = 12
    threads: int = 1


# -- tables -------------------------------------------------------------------

@dataclass(frozen=True)
class M1Entry:
    """Largest element order c * f(q) of one type, odd characteristic."""

    family: str
    n: int
    c: Fraction
    f: IntPoly


class M1Table:
    def __init__(self, entries=()):
        self.entries = tuple(entries)
        for e in self.entries:
            if e.f.leading != 1:
                raise ValueError("m1 polynomial must be monic: %r" % (e,))
            for q in (3, 5, 7, 9, 25, 27):
                v = e.c * e.f(q)
                if v.denominator != 1:
                    raise ValueError("c*f(q) not integral at q=%d for %r" % (q, e))

    @classmethod
    def load(cls, path) -> "M1Table":
        path = Path(path)
        if not path.exists():
            return cls()
        rows = json.loads(path.read_text())
        return cls(M1Entry(r["family"], int(r["n"]),
                           Fraction(int(r["c_num"]), int(r["c_den"])),
                           IntPoly(tuple(int(x) for x in r["poly"])))
                   for r in rows)

    def for_type(self, family, n) -> list:
        return [e for e in self.entries if (e.family, e.n) == (family, n)]

    def odd_candidates(self, family, n, B) -> list:
        out = set()
        for e in self.for_type(family, n):
            for pp in solve_poly_prime_power(e.f, e.c.numerator, e.c.denominator, B):
                if pp.p != 2:
                    out.add(pp.value)
        return sorted(out)


# rows: family, rank parity (None = any), (m1, m2) as functions of n
RATIO_TABLE = (
    ("L", None, lambda n: (n - 1, n)),
    ("U", 0, lambda n: (n, 2 * n - 2)),
    ("U", 1, lambda n: (2 * n, n - 1)),
    ("S", 1, lambda n: (n, 2 * n)),
    ("O_odd", 1, lambda n: (n, 2 * n)),
    ("O_plus", 0, lambda n: (n - 1, 2 * n - 2)),
    ("O_plus", 1, lambda n: (n, 2 * n - 2)),
    ("O_minus", 1, lambda n: (2 * n - 2, 2 * n)),
)

# coincidences f1(n) = f2(m) between different ratio functions
EXCEPTIONAL_RATIOS = (
    ("(x-1)/x", "1/2", 2, None),
    ("(x-1)/x", "x/(2x-2)", 3, 4),
    ("(x-1)/x", "(x-1)/(2x)", 1, 1),
)


@dataclass
class Context:
    registry: SpectrumRegistry
    m1: M1Table
    config: RecognizeConfig


@lru_cache(maxsize=8)
def _context_for(path: str, config: RecognizeConfig) -> Context:
    return Context(default_registry(path), M1Table.load(Path(path) / "m1_table.json"), config)


def make_context(config: RecognizeConfig | None = None) -> Context:
    config = config or RecognizeConfig()
    return _context_for(str(data_dir(config.data_dir)), config)


# -- alternating --------------------------------------------------------------

def _alt_bound(M: int) -> int:
    return max(810, math.ceil((math.log(2 * M) / 0.99) ** 2))


def recognize_alternating(mu, trail=None):
    """Alternating group with this spectrum, or None."""
    trail = [] if trail is None else trail
    mu = MinSpec(mu)
    B = "alternating"
    A = _alt_bound(mu.max)
    tau = []
    for r in sieve_primes(A):
        if not omega_contains(mu, r):
            break
        tau.append(r)
    if not tau:
        trail.append(_dec(B, "tau", "reject", reason="2 does not divide any element", A=A))
        return None
    t = tau[-1]
    P = prod(tau)
    for a in mu:
        if nu_part(a, (P,)) != a:
            trail.append(_dec(B, "tau", "reject", reason="element has a prime outside tau",
                              A=A, t=t, element=a))
            return None
    n = t
    # alt_distinguisher(n) lies in omega(A_{n+1}) but not omega(A_n)
    while n + 1 < 2 * t and omega_contains(mu, alt_distinguisher(n)):
        n += 1
    if n < 5:
        trail.append(_dec(B, "degree", "reject", reason="degree below 5", t=t, n=n))
        return None
    trail.append(_dec(B, "degree", "candidate", A=A, t=t, n=n))
    if prime_graph_restricted(mu, tau) != alt_prime_graph(n):
        trail.append(_dec(B, "prime_graph", "reject", n=n))
        return None
    if tau == [2, 3, 5, 7] and 7 <= n <= 10:
        if alt_minimal_spectrum(n) != mu:
            trail.append(_dec(B, "small_pi", "reject", reason="mu differs from mu(A_n)", n=n))
            return None
        trail.append(_dec(B, "small_pi", "accept", n=n))
    for a in mu:
        if not alt_contains(a, n, tau):
            trail.append(_dec(B, "inclusion", "reject", n=n, element=a))
            return None
    trail.append(_dec(B, "inclusion", "accept", n=n))
    return GroupName.alternating(n)


# -- bounded rank -------------------------------------------------------------

def _types_of_rank(reg: SpectrumRegistry, k: int) -> list:
    out = {(f, n) for f, n in reg.analytic_types(k)}
    out |= {(f, n) for f, n, _ in reg.fixtures_of_rank(k)}
    return sorted(out)


def _candidate_fields(ctx: Context, family, n, M) -> list:
    reg = ctx.registry
    qs = set(ctx.m1.odd_candidates(family, n, M))
    if (family, n) in reg.generators:
        e = 1
        while 2 ** e <= 2 * M - 1:
            qs.add(2 ** e)
            e += 1
    qs |= {q for f, m, q in reg.fixtures if (f, m) == (family, n)}
    return sorted(qs)


def recognize_bounded_rank(mu, k: int, ctx: Context | None = None, trail=None):
    trail = [] if trail is None else trail
    ctx = ctx or make_context()
    mu = MinSpec(mu)
    reg = ctx.registry
    br = "bounded_rank"
    jobs = []
    for family, n in _types_of_rank(reg, k):
        bound = reg.size_bound(family, n)
        if len(mu) > bound:
            trail.append(_dec(br, "size", "reject", family=family, n=n, size=len(mu), bound=bound))
            continue
        for q in _candidate_fields(ctx, family, n, mu.max):
            jobs.append((family, n, q))

    def check(job):
        try:
            nu = reg.generate_nu(*job)
        except (ValueError, NoGenerator):
            return False
        return MinSpec(nu) == mu

    if ctx.config.threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(ctx.config.threads) as ex:
            hits = list(ex.map(check, jobs))
    else:
        hits = [check(j) for j in jobs]
    for job, hit in zip(jobs, hits):
        if hit:
            trail.append(_dec(br, "compare", "accept", rank=k, family=job[0], n=job[1], q=job[2]))
            return GroupName.classical(*job)
    trail.append(_dec(br, "compare", "reject", rank=k, candidates=len(jobs)))
    return None


# -- large rank ---------------------------------------------------------------

def _primitive_index(s: int, p: int) -> int:
    """Largest i with a prime of s having multiplicative order i modulo p."""
    best = 0
    for i in range(1, 2 * s.bit_length() + 5):
        if gcd(s, greatest_primitive_divisor(p, i)) > 1:
            best = i
    return best


def _solve_zeta(p, family, n, poly, B, S):
    c_den = 1 if p == 2 else 2
    out = []
    for pp in solve_poly_prime_power(poly, 1, c_den, B):
        if pp.p == p and zeta_set(family, n, pp.value) == S:
            out.append(pp.value)
    return out


def identify_type_and_field(p: int, t: int, S) -> list:
    """Classical groups of characteristic p with coclique number t and zeta set S."""
    S = sorted(set(S))
    if not S or len(S) > 3 or any(s % p == 0 for s in S):
        return []
    out = []
    if len(S) == 1:
        for n in ranks_from_coclique(t, "S"):
            if n % 2 or n < 2:
                continue
            for q in _solve_zeta(p, "S", n, IntPoly.binomial(n, 1), S[0], S):
                out.append(GroupName.classical("S", n, q))
                if p != 2:
                    out.append(GroupName.classical("O_odd", n, q))
        return out
    if len(S) == 3:
        for n in ranks_from_coclique(t, "O_minus"):
            if n % 2 or n < 2:
                continue
            poly = IntPoly.binomial(n - 1, -1) * IntPoly((1, 1))
            for q in _solve_zeta(p, "O_minus", n, poly, S[-1], S):
                out.append(GroupName.classical("O_minus", n, q))
        return out
    m = sorted((_primitive_index(S[0], p), _primitive_index(S[1], p)))
    if m[0] == 0 or m[0] == m[1]:
        return []
    for family, parity, fn in RATIO_TABLE:
        for n in ranks_from_coclique(t, family):
            if n < 2 or (parity is not None and n % 2 != parity):
                continue
            lo, hi = sorted(fn(n))
            if lo < 1 or m[0] * hi != m[1] * lo or m[1] % hi:
                continue
            q = p ** (m[1] // hi)
            if family == "O_odd" and p == 2:
                continue
            try:
                if zeta_set(family, n, q) == S:
                    out.append(GroupName.classical(family, n, q))
            except TableDomainError:
                continue
    return sorted(set(out))


def _resolve(cands, mu, trail) -> list:
    br = "large_rank"
    plus = [g for g in cands if g.family == "O_plus"]
    if plus and len(cands) > 1:
        rest = [g for g in cands if g.family != "O_plus"]
        n, q = rest[0].n, rest[0].q
        if n > 5:
            x = spec_dist_element("dplus_vs_rest", n, q)
            inside = omega_contains(mu, x)
            trail.append(_dec(br, "twins", "dplus", element=x, present=inside))
            cands = plus if inside else rest
    fams = {g.family for g in cands}
    if {"S", "O_odd"} <= fams and cands[0].q % 2 == 0:
        # same group in characteristic 2; report the symplectic name
        cands = [c for c in cands if c.family != "O_odd"]
    elif {"S", "O_odd"} <= fams:
        g = next(c for c in cands if c.family == "S")
        x = spec_dist_element("sympl_vs_odd_orth", g.n, g.q)
        inside = omega_contains(mu, x)
        trail.append(_dec(br, "twins", "sympl_vs_odd_orth", element=x, present=inside))
        cands = [c for c in cands if c.family == ("S" if inside else "O_odd")]
    return cands


def classify_large_rank(mu, ctx: Context | None = None, trail=None) -> list:
    """Candidate classical groups of large rank; [] means Empty."""
    trail = [] if trail is None else trail
    ctx = ctx or make_context()
    mu = MinSpec(mu)
    br = "large_rank"
    if mu.max < 2:
        trail.append(_dec(br, "stage1", "reject", reason="trivial input"))
        return []
    cap = ctx.config.cap or size_cap_C(mu.max)
    adg = build_ad_graph(mu, cap)
    if isinstance(adg, TooMany):
        trail.append(_dec(br, "stage1", "reject", reason="too many atoms",
                          cap=cap, count=adg.count, element_index=adg.stage))
        return []
    trail.append(_dec(br, "stage1", "ok", cap=cap, atoms=len(adg.vertices)))
    P = split_partition(adg.graph)
    if P is None:
        trail.append(_dec(br, "stage2", "reject", reason="AD-graph is not split"))
        return []
    t = len(max_coclique_split(adg.graph, P))
    if t < 5:
        trail.append(_dec(br, "stage3", "reject", reason="coclique too small", t=t))
        return []
    trail.append(_dec(br, "stage3", "ok", t=t))
    count, _ = theta_star_4(mu, adg)
    if count >= 3:
        chars = [2]
    else:
        chars = [v for v in adg.vertices if v % 2 and is_prime(v)]
    trail.append(_dec(br, "stage4", "ok", theta4=count, characteristics=chars))
    for p in chars:
        patom = adg.atoms.atom_of(p)
        if patom is None:
            continue
        far = [v for v in adg.vertices if v != patom and not adg.adjacent(v, patom)]
        zeta = [a for a in mu if any(a % v == 0 for v in far)]
        if not zeta or any(a % p == 0 for a in zeta):
            trail.append(_dec(br, "stage5", "skip", p=p, zeta=zeta))
            continue
        trail.append(_dec(br, "stage5", "ok", p=p, zeta=zeta))
        cands = identify_type_and_field(p, t, zeta)
        trail.append(_dec(br, "stage6", "ok" if cands else "skip", p=p,
                          candidates=[str(g) for g in cands]))
        if not cands:
            continue
        cands = _resolve(cands, mu, trail)
        for g in cands:
            bad = next((a for a in mu if not classical_membership(a, g.family, g.n, g.q)), None)
            if bad is None:
                trail.append(_dec(br, "stage8", "accept", group=str(g)))
                return [g]
            trail.append(_dec(br, "stage8", "reject", group=str(g), element=bad))
    trail.append(_dec(br, "stage6", "reject", reason="no classical group fits"))
    return []


# -- orchestration ------------------------------------------------------------

def _with_twin(g: GroupName):
    for a, b in TWIN_PAIRS:
        if g in (a, b):
            return a, b
    return g, None


def recognize(M, config: RecognizeConfig | None = None) -> RecognitionOutcome:
    M = [int(x) for x in M]
    if not M or min(M) < 1:
        raise ValueError("input must be a nonempty list of positive integers")
    config = config or RecognizeConfig()
    if config.rounds is not None:
        arith.PRIMALITY_ROUNDS = config.rounds
    ctx = make_context(config)
    trail = []
    mu = MinSpec(M)
    trail.append(_dec("reduce", "mu", "ok", size_in=len(M), size_mu=len(mu), max=mu.max))

    def done(g):
        g, twin = _with_twin(g)
        return RecognitionOutcome(g, twin, tuple(trail))

    for name in sorted(ctx.registry.sporadic):
        if ctx.registry.sporadic[name] == mu:
            trail.append(_dec("sporadic", "compare", "accept", name=name))
            return done(GroupName.sporadic(name))
    trail.append(_dec("sporadic", "compare", "reject"))

    g = recognize_alternating(mu, trail)
    if g is not None:
        return done(g)
    for k in range(1, config.max_rank + 1):
        g = recognize_bounded_rank(mu, k, ctx, trail)
        if g is not None:
            return done(g)
    found = classify_large_rank(mu, ctx, trail)
    if found:
        return done(found[0])
    trail.append(_dec("final", "verdict", "empty", reason="every branch rejected"))
    return RecognitionOutcome(None, None, tuple(trail))
