import random
from math import gcd

import pytest

from spectre.arith import (
    IntPoly, PrimePower, cyclotomic_eval, divisors, greatest_primitive_divisor,
    integer_nth_root, is_prime, lcm, lcm_all, mult_order, nu_coprime_part, nu_part,
    prime_power_decompose, sieve_primes, solve_poly_prime_power, valuation,
    zsigmondy_exception,
)
from spectre.oracle import primitive_divisor_oracle


def test_gcd_lcm_examples():
    assert gcd(2 ** 6 - 1, 2 ** 9 - 1) == 7
    assert gcd(3 ** 2 + 1, 3 ** 3 - 1) == 2
    assert lcm(4, 6) == 12
    assert lcm_all([4, 6, 10]) == 60
    assert lcm_all([]) == 1


def test_nu_parts():
    assert nu_part(360, {6}) == 72
    assert nu_part(97, {97}) == 97
    assert nu_coprime_part(35, {5}) == 7
    assert nu_part(35, set()) == 1
    assert nu_part(2 ** 70 * 3 ** 5 * 7, [12]) == 2 ** 70 * 3 ** 5


def test_sieve():
    assert sieve_primes(10) == [2, 3, 5, 7]
    assert sieve_primes(2) == [2]
    assert sieve_primes(1) == []
    ps = sieve_primes(30)
    assert len(ps) == 10 and ps[-1] == 29


def test_primality_and_prime_powers():
    assert prime_power_decompose(8) == PrimePower(2, 3)
    assert prime_power_decompose(12) is None
    assert prime_power_decompose(243) == PrimePower(3, 5)
    assert prime_power_decompose(1) is None
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(2 ** 61 + 1)
    assert is_prime(2 ** 127 - 1)
    assert not is_prime(1) and not is_prime(0)
    # strong pseudoprime to the first few bases
    assert not is_prime(3215031751)


def test_integer_nth_root():
    assert integer_nth_root(27, 3) == 3
    assert integer_nth_root(26, 3) == 2
    assert integer_nth_root(10 ** 18, 2) == 10 ** 9
    big = 3 ** 200
    assert integer_nth_root(big, 100) == 9
    assert integer_nth_root(big - 1, 100) == 8


def test_mult_order():
    assert mult_order(2, 7) == 3
    assert mult_order(1, 11) == 1
    assert mult_order(3, 5) == 4
    with pytest.raises(ValueError, match="not a unit"):
        mult_order(6, 3)


def test_cyclotomic():
    assert cyclotomic_eval(6, 2) == 3
    assert cyclotomic_eval(1, 9) == 8
    assert cyclotomic_eval(4, 2) == 5
    for a in (2, 3, 10):
        for i in range(1, 25):
            assert a ** i - 1 == _prod(cyclotomic_eval(d, a) for d in divisors(i))


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def test_zsigmondy_and_primitive_divisors():
    assert greatest_primitive_divisor(2, 6) == 1
    assert greatest_primitive_divisor(2, 4) == 5
    assert greatest_primitive_divisor(2, 1) == 1
    assert zsigmondy_exception(2, 6)
    assert not zsigmondy_exception(2, 4)
    assert zsigmondy_exception(7, 2)
    assert zsigmondy_exception(-2, 3)
    assert zsigmondy_exception(-3, 2)


@pytest.mark.parametrize("a", [a for a in range(-12, 13) if abs(a) > 1])
def test_primitive_divisor_matches_oracle(a):
    for i in range(1, 21):
        assert greatest_primitive_divisor(a, i) == primitive_divisor_oracle(a, i), (a, i)


def test_valuation():
    assert valuation(48, 2) == 4
    assert valuation(7, 2) == 0


def test_solver_examples():
    x1 = IntPoly((1, 1))
    assert solve_poly_prime_power(x1, 1, 1, 10) == [PrimePower(3, 2)]
    f = IntPoly((1, 1, 1))
    assert solve_poly_prime_power(f, 1, 1, 57) == [PrimePower(7, 1)]
    assert solve_poly_prime_power(f, 1, 1, 58) == []


def test_solver_random_round_trip():
    rng = random.Random(7)
    for _ in range(300):
        deg = rng.randint(1, 8)
        coeffs = [rng.choice((-1, 0, 1)) for _ in range(deg)] + [1]
        f = IntPoly(tuple(coeffs))
        p = rng.choice([2, 3, 5, 7, 11, 13, 101, 65537])
        q = p ** rng.randint(1, max(1, 64 // p.bit_length()))
        c_den = rng.choice((1, 2))
        B = f(q)
        if B <= 0 or B % c_den:
            continue
        sols = solve_poly_prime_power(f, 1, c_den, B // c_den)
        assert q in [s.value for s in sols]
        for s in sols:
            assert f(s.value) == B
