"""Exhaustive decomposition search against independent brute force."""

import pytest

from sgdecomp.errors import DegenerateD, FieldTooLargeForExhaustive, NotADivisor
from sgdecomp.field import divisors, make_field_q
from sgdecomp.search import (
    DEFAULT_PRUNES,
    EXISTS,
    NONE_EXHAUSTIVE,
    UNKNOWN,
    SearchTask,
    canonical_binary_key,
    canonical_ternary_key,
    search_binary,
    search_ternary,
    verify_witness,
)

from oracles import (
    brute_binary_solutions,
    brute_ternary_solutions,
    orbit_count,
    sumset_mask,
)


def bits_tuple(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def valid_ds(q):
    return [d for d in divisors(q - 1) if 2 <= d < q - 1]


def test_verify_witness():
    ctx = make_field_q(49)
    assert verify_witness(ctx, ((1, 2, 4), (1, 2, 4)), 8)
    assert not verify_witness(ctx, ((1, 2, 4), (1, 2, 5)), 8)
    assert not verify_witness(ctx, ((1,), (0, 1, 2, 3, 4, 5)), 8)  # size floor
    assert verify_witness(ctx, ((1,), (0, 1, 2, 3, 4, 5)), 8, min_part_size=1)
    # sums outside the subgroup
    assert not verify_witness(ctx, ((0, 1), (1, 2, 4)), 8)


def test_canonical_key_symmetry_invariance():
    ctx = make_field_q(49)
    d = 8
    a = (1, 2, 4)
    base = canonical_binary_key(ctx, d, a, a)
    s = [x for x in range(1, 49) if ctx.pow(x, (49 - 1) // d) == 1]
    assert canonical_binary_key(ctx, d, a, a) == base  # deterministic
    # part swap
    assert canonical_binary_key(ctx, d, (1, 2, 4), (2, 1, 4)) == base
    # dilation by every subgroup element
    for lam in s:
        da = tuple(ctx.mul(lam, x) for x in a)
        assert canonical_binary_key(ctx, d, da, da) == base
    # translation: (A + t, B - t)
    for t in range(1, 49):
        at = tuple(ctx.add(x, t) for x in a)
        bt = tuple(ctx.add(x, ctx.neg(t)) for x in a)
        assert canonical_binary_key(ctx, d, at, bt) == base


def test_canonical_key_separates_distinct_orbits():
    ctx = make_field_q(13)
    # S_2 = squares; {0,1} + {1, 4} and {0, 1} + {1, 10} differ as orbits
    k1 = canonical_binary_key(ctx, 2, (0, 1), (1, 4))
    k2 = canonical_binary_key(ctx, 2, (0, 1), (1, 10))
    assert k1 != k2


def oracle_binary(ctx, d):
    s = [x for x in range(1, ctx.q) if ctx.pow(x, (ctx.q - 1) // d) == 1]
    sols = brute_binary_solutions(ctx.q, s, ctx.add, ctx.neg)
    keys = {canonical_binary_key(ctx, d, bits_tuple(a), bits_tuple(b))
            for a, b in sols}
    orbits = orbit_count(sols, ctx.q, s, ctx.add, ctx.neg, ctx.mul)
    return sols, keys, orbits


@pytest.mark.parametrize("q", [7, 9, 11, 13, 16, 17, 19, 23, 25, 27])
def test_binary_search_matches_brute_force(q):
    ctx = make_field_q(q)
    for d in valid_ds(q):
        res = search_binary(SearchTask(q=q, d=d))
        assert res.complete
        sols, keys, orbits = oracle_binary(ctx, d)
        package_keys = {w.canonical_key for w in res.witnesses}
        assert package_keys == keys, (q, d)
        assert len(res.witnesses) == orbits, (q, d)
        assert res.kind == (EXISTS if sols else NONE_EXHAUSTIVE)
        for w in res.witnesses:
            assert verify_witness(ctx, w.parts, d)


@pytest.mark.parametrize("q", [13, 16])
def test_ternary_search_matches_brute_force(q):
    ctx = make_field_q(q)
    for d in valid_ds(q):
        res = search_ternary(SearchTask(q=q, d=d, arity=3))
        assert res.complete
        s = [x for x in range(1, q) if ctx.pow(x, (q - 1) // d) == 1]
        sols = brute_ternary_solutions(q, s, ctx.add, ctx.neg)
        keys = {canonical_ternary_key(ctx, d, tuple(map(bits_tuple, sol)))
                for sol in sols}
        package_keys = {w.canonical_key for w in res.witnesses}
        assert package_keys == keys, (q, d)
        assert len(res.witnesses) == orbit_count(
            sols, q, s, ctx.add, ctx.neg, ctx.mul), (q, d)
        for w in res.witnesses:
            assert verify_witness(ctx, w.parts, d)


def test_frozen_small_field_results():
    res = search_binary(SearchTask(q=13, d=3))
    assert res.kind == EXISTS and res.complete
    assert len(res.witnesses) == 1
    assert search_binary(SearchTask(q=13, d=2)).kind == NONE_EXHAUSTIVE
    assert search_binary(SearchTask(q=49, d=8)).kind == EXISTS


def test_budget_degrades_honestly():
    res = search_binary(SearchTask(q=121, d=2, budget=200))
    assert not res.complete
    assert res.kind in (UNKNOWN, EXISTS)
    assert res.kind != NONE_EXHAUSTIVE
    # a field with witnesses, starved: never a completeness claim
    res = search_binary(SearchTask(q=49, d=8, budget=5))
    assert not res.complete
    assert res.kind in (UNKNOWN, EXISTS)


def test_prunes_do_not_change_answers():
    for q, d in [(13, 3), (13, 2), (25, 4), (49, 8), (16, 3)]:
        full = search_binary(SearchTask(q=q, d=d))
        bare = search_binary(SearchTask(q=q, d=d, prune_flags=frozenset()))
        assert bare.complete
        assert {w.canonical_key for w in full.witnesses} == \
               {w.canonical_key for w in bare.witnesses}
        assert full.kind == bare.kind
    assert DEFAULT_PRUNES  # the default set is nonempty


def test_prune_counters_recorded():
    res = search_binary(SearchTask(q=13, d=2))
    assert res.nodes >= 0
    assert any(v > 0 for v in res.prune_counts.values())


def test_size_caps():
    with pytest.raises(FieldTooLargeForExhaustive):
        search_binary(SearchTask(q=8192, d=3))
    with pytest.raises(FieldTooLargeForExhaustive):
        search_ternary(SearchTask(q=121, d=2, arity=3))


def test_task_guards():
    with pytest.raises(DegenerateD):
        search_binary(SearchTask(q=13, d=1))
    with pytest.raises(DegenerateD):
        search_binary(SearchTask(q=13, d=12))
    with pytest.raises(NotADivisor):
        search_binary(SearchTask(q=13, d=5))


def test_min_part_size_one_allows_translates():
    res = search_binary(SearchTask(q=13, d=3, min_part_size=1))
    assert res.kind == EXISTS
    ctx = make_field_q(13)
    for w in res.witnesses:
        assert verify_witness(ctx, w.parts, 3, min_part_size=1)


def test_oracle_self_check():
    # the brute enumerator and the library agree on a hand-checked case
    ctx = make_field_q(13)
    s = [1, 5, 8, 12]
    sols = brute_binary_solutions(13, s, ctx.add, ctx.neg)
    for a_bits, b_bits in sols:
        assert sumset_mask(a_bits, b_bits, ctx.add) == sum(1 << x for x in s)
    assert sols  # S_3 does decompose
