"""Explicit decomposition families and subfield chains."""

import pytest

from sgdecomp.classifier import classify_pair
from sgdecomp.constructions import (
    A_PLUS_A,
    TERNARY,
    build_A_plus_A,
    build_ternary,
    subfield_S_d,
    subfield_self_sum,
    subfield_ternary,
)
from sgdecomp.errors import NotAProperDivisor, PTooSmall
from sgdecomp.field import make_field
from sgdecomp.search import SearchTask, canonical_binary_key, search_binary

from oracles import naive_add


def brute_sumset(ctx, parts):
    acc = {0}
    for part in parts:
        acc = {ctx.add(x, y) for x in acc for y in part.indices()}
    return acc


@pytest.mark.parametrize("p", [7, 11, 13])
@pytest.mark.parametrize("n", [1, 2])
def test_self_sum_family(p, n):
    con = build_A_plus_A(p, n)
    (a, a2) = con.parts
    assert a.bits == a2.bits
    assert a.card == ((p + 1) // 2) ** n - 1
    assert 0 not in a.indices()
    assert con.d == 1
    assert brute_sumset(con.ctx, con.parts) == set(range(1, p**n))


def test_self_sum_pattern_p7():
    con = build_A_plus_A(7, 1)
    assert sorted(con.parts[0].indices()) == [1, 2, 4]


def test_self_sum_independent_arithmetic():
    # recompute A + A with digit-convolution addition only
    con = build_A_plus_A(7, 2)
    elems = sorted(con.parts[0].indices())
    sums = {naive_add(x, y, 7, 2) for x in elems for y in elems}
    assert sums == set(range(1, 49))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
@pytest.mark.parametrize("n", [1, 2])
def test_ternary_family(p, n):
    con = build_ternary(p, n)
    a, b, c = con.parts
    assert a.bits == b.bits
    assert all(part.card >= 2 for part in con.parts)
    assert brute_sumset(con.ctx, con.parts) == set(range(1, p**n))
    assert con.as_dict()["family"] == TERNARY


def test_ternary_patterns():
    assert sorted(build_ternary(5, 1).parts[2].indices()) == [1, 2]
    assert sorted(build_ternary(7, 1).parts[2].indices()) == [1, 2, 4]
    assert sorted(build_ternary(7, 1).parts[0].indices()) == [0, 1]


def test_p_too_small_guards():
    with pytest.raises(PTooSmall):
        build_A_plus_A(5, 1)
    with pytest.raises(PTooSmall):
        build_A_plus_A(3, 2)
    with pytest.raises(PTooSmall):
        build_ternary(3, 1)
    with pytest.raises(PTooSmall):
        subfield_self_sum(5, 2, 1)
    with pytest.raises(PTooSmall):
        subfield_ternary(3, 2, 1)


def test_subfield_identification_f49():
    sub = subfield_S_d(7, 2, 1)
    assert sub.d == 8
    assert sorted(sub.spec.members.indices()) == [1, 2, 3, 4, 5, 6]
    assert sorted(sub.subfield.indices()) == [0, 1, 2, 3, 4, 5, 6]
    assert sub.basis == (1,)


def test_subfield_identification_f_2_4():
    # k = 2 inside n = 4: the fixed field of double Frobenius has p^2 elements
    sub = subfield_S_d(2, 4, 2)
    assert sub.d == 5
    assert sub.subfield.card == 4
    assert len(sub.basis) == 2
    # sanity: members are exactly the fourth powers
    ctx = sub.ctx
    assert set(sub.spec.members.indices()) == {ctx.pow(x, 5) for x in range(1, 16)}


def test_subfield_guards():
    with pytest.raises(NotAProperDivisor):
        subfield_S_d(7, 2, 0)
    with pytest.raises(NotAProperDivisor):
        subfield_S_d(7, 2, 2)
    with pytest.raises(NotAProperDivisor):
        subfield_S_d(7, 3, 2)


@pytest.mark.parametrize("p,n,k", [(7, 2, 1), (11, 2, 1), (7, 3, 1), (13, 2, 1)])
def test_self_sum_chain(p, n, k):
    con = subfield_self_sum(p, n, k)
    assert con.d == (p**n - 1) // (p**k - 1)
    assert con.spec.family == A_PLUS_A and con.spec.k == k
    got = brute_sumset(con.ctx, con.parts)
    assert got == set(con.target.indices())
    assert con.parts[0].card == ((p + 1) // 2) ** k - 1
    # the pair this chain realizes fails every digit bullet
    assert not classify_pair(con.d, p**n).is_good


@pytest.mark.parametrize("p,n,k", [(5, 2, 1), (7, 2, 1), (11, 2, 1), (5, 3, 1)])
def test_ternary_chain(p, n, k):
    con = subfield_ternary(p, n, k)
    assert con.d == (p**n - 1) // (p**k - 1)
    got = brute_sumset(con.ctx, con.parts)
    assert got == set(con.target.indices())


def test_chain_witness_is_found_by_search():
    con = subfield_self_sum(7, 2, 1)
    a = tuple(sorted(con.parts[0].indices()))
    ctx = make_field(7, 2)
    key = canonical_binary_key(ctx, 8, a, a)
    res = search_binary(SearchTask(q=49, d=8))
    assert res.kind == "EXISTS" and res.complete
    keys = {w.canonical_key for w in res.witnesses}
    assert key in keys
    # at least one orbit admits an equal-parts representative
    assert any(w.canonical_key == key for w in res.witnesses)


def test_as_dict_payload():
    dd = subfield_self_sum(7, 2, 1).as_dict()
    assert dd["q"] == 49 and dd["d"] == 8 and dd["k"] == 1
    assert dd["sizes"] == [3, 3]
    assert dd["verified"] is True
    assert dd["parts"][0] == dd["parts"][1]
