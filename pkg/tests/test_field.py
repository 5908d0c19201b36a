import math
import random

import pytest

from sgdecomp.errors import CompositeP, FieldTooLarge, NotAPrimePower
from sgdecomp.field import (
    DLOG_UNDEFINED,
    base_p_digits,
    divisors,
    factor_prime_power,
    is_prime,
    lucas_binom_nonzero,
    make_field,
    make_field_q,
    prime_factors,
    prime_powers,
)

from oracles import naive_add, naive_mul, naive_pow

PRIMES_BELOW_100 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                    53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


def test_is_prime_below_100():
    assert [m for m in range(100) if is_prime(m)] == PRIMES_BELOW_100


def test_prime_factors():
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(1) == []
    assert prime_factors(97) == [97]
    for m in range(2, 300):
        fs = prime_factors(m)
        assert all(is_prime(f) and m % f == 0 for f in fs)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]
    for m in range(1, 200):
        ds = divisors(m)
        assert ds == sorted(x for x in range(1, m + 1) if m % x == 0)
    with pytest.raises(ValueError):
        divisors(0)


def test_factor_prime_power():
    assert factor_prime_power(13) == (13, 1)
    assert factor_prime_power(121) == (11, 2)
    assert factor_prime_power(1024) == (2, 10)
    for bad in (1, 0, 6, 12, 100):
        with pytest.raises(NotAPrimePower):
            factor_prime_power(bad)


def test_prime_powers_to_50():
    got = prime_powers(50)
    assert [q for q, _, _ in got] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19,
                                      23, 25, 27, 29, 31, 32, 37, 41, 43, 47,
                                      49]
    assert all(p**n == q for q, p, n in got)


def test_base_p_digits_roundtrip():
    for p in (2, 3, 7, 13):
        for m in range(0, 500):
            exp = base_p_digits(m, p)
            assert exp.value == m
            assert not exp.digits[-1:] == (0,) or m == 0
    exp = base_p_digits(6, 7)
    assert exp.digits == (6,)
    assert exp.digit(0) == 6
    assert exp.digit(5) == 0  # past the top is zero


def test_lucas_matches_integer_binomial():
    # exact residues, exhaustive small grid
    for p in (2, 3, 5, 7, 13):
        for t in range(0, 120):
            for b in range(0, t + 1):
                want = math.comb(t, b) % p
                ok, res = lucas_binom_nonzero(t, b, p)
                assert ok == (want != 0)
                assert res == want
    assert lucas_binom_nonzero(3, 5, 7) == (False, 0)


def test_lucas_rejects_composite_modulus():
    with pytest.raises(CompositeP):
        lucas_binom_nonzero(10, 4, 6)


def test_prime_field_arithmetic():
    ctx = make_field_q(13)
    for x in range(13):
        for y in range(13):
            assert ctx.add(x, y) == (x + y) % 13
            assert ctx.mul(x, y) == (x * y) % 13
        assert ctx.neg(x) == (-x) % 13
        if x:
            assert ctx.mul(x, ctx.inv(x)) == 1


@pytest.mark.parametrize("q", [4, 8, 9, 27, 49, 121])
def test_extension_arithmetic_matches_convolution(q):
    ctx = make_field_q(q)
    p, n = ctx.p, ctx.n
    mod_low = list(ctx.modulus[:n])  # low coefficients of the monic modulus
    rng = random.Random(q)
    elems = range(q) if q <= 49 else [rng.randrange(q) for _ in range(40)]
    for x in elems:
        for y in elems:
            assert ctx.add(x, y) == naive_add(x, y, p, n)
            assert ctx.mul(x, y) == naive_mul(x, y, p, n, mod_low)
    for x in list(elems)[:10]:
        assert ctx.pow(x, 5) == naive_pow(x, 5, p, n, mod_low)


def test_modulus_is_lex_smallest_known_cases():
    # hand-derived: all lex-earlier monic candidates are reducible
    assert make_field(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert make_field(2, 3).modulus == (1, 0, 1, 1)  # x^3 + x^2 + 1
    assert make_field(3, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert make_field(11, 2).modulus == (1, 0, 1)  # x^2 + 1, -1 not a square
    assert make_field(13, 1).modulus == (0, 1)


def test_generator_is_smallest_primitive():
    for q in (13, 25, 49, 27):
        ctx = make_field_q(q)
        order = q - 1
        seen = {ctx.generator}
        acc = ctx.generator
        for _ in range(order - 1):
            acc = ctx.mul(acc, ctx.generator)
            seen.add(acc)
        assert len(seen) == order  # primitive
        for cand in range(1, ctx.generator):
            powers = {cand}
            acc = cand
            for _ in range(order - 1):
                acc = ctx.mul(acc, cand)
                powers.add(acc)
            assert len(powers) < order  # nothing smaller is primitive


def test_dlog_exp_tables():
    for q in (13, 49, 121):
        ctx = make_field_q(q)
        assert ctx.dlog[0] == DLOG_UNDEFINED
        for x in range(1, q):
            assert ctx.exp[ctx.dlog[x]] == x
        assert sorted(ctx.exp) == list(range(1, q))


def test_translate_bits_matches_elementwise():
    for q in (13, 8, 27, 49):
        ctx = make_field_q(q)
        rng = random.Random(q * 7)
        for _ in range(25):
            bits = rng.randrange(1 << q)
            for t in range(q):
                want = 0
                for x in range(q):
                    if (bits >> x) & 1:
                        want |= 1 << ctx.add(x, t)
                assert ctx.translate_bits(bits, t) == want


def test_field_construction_guards():
    with pytest.raises(CompositeP):
        make_field(6, 1)
    with pytest.raises(FieldTooLarge):
        make_field(2, 21)
    with pytest.raises(ValueError):
        make_field(7, 0)


def test_make_field_is_cached():
    assert make_field(13, 1) is make_field_q(13)
