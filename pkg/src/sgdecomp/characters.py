"""Multiplicative subgroups S_d and characters of order d.

S_d = {x^d : x in F_q^*} has (q-1)/d elements; membership is dlog(x) = 0
mod d.  A character of exact order d sends x to a d-th root of unity read
off the dlog residue, with chi(0) = 0.  Double sums over A + B are computed
exactly by bucketing pairs on that residue before any floating point enters.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    DegenerateD,
    HypothesisViolated,
    NotADivisor,
    TrivialCharacter,
)
from .field import DLOG_UNDEFINED, FieldCtx
from .subsets import FqSubset, _require_nonempty, _same_ctx, iter_bits, sumset


def _check_d(ctx: FieldCtx, d: int, allow_one: bool = True) -> None:
    if d < 1 or (d == 1 and not allow_one):
        raise DegenerateD(f"d={d} out of range")
    if (ctx.q - 1) % d != 0:
        raise NotADivisor(f"d={d} does not divide q-1={ctx.q - 1}")


@dataclass(frozen=True)
class SubgroupSpec:
    ctx: FieldCtx
    d: int
    order: int
    members: FqSubset


def subgroup(ctx: FieldCtx, d: int) -> SubgroupSpec:
    """The subgroup of d-th powers of F_q^*."""
    _check_d(ctx, d)
    bits = 0
    dlog = ctx.dlog
    for x in range(1, ctx.q):
        if dlog[x] % d == 0:
            bits |= 1 << x
    members = FqSubset(ctx, bits)
    order = (ctx.q - 1) // d
    if members.card != order:  # pragma: no cover - dlog is a bijection
        raise AssertionError("subgroup order mismatch")
    return SubgroupSpec(ctx, d, order, members)


@dataclass(frozen=True)
class Character:
    """Multiplicative character of exact order d: x -> root_table[dlog(x) % d]."""

    ctx: FieldCtx
    d: int
    root_table: tuple[complex, ...]

    def __call__(self, x: int) -> complex:
        if x == 0:
            return 0j
        return self.root_table[self.ctx.dlog[x] % self.d]


def character(ctx: FieldCtx, d: int, index: int = 1) -> Character:
    """Order-d character; index selects which primitive d-th root generates it."""
    _check_d(ctx, d)
    if math.gcd(index, d) != 1:
        raise TrivialCharacter(f"index {index} shares a factor with d={d}")
    table = tuple(cmath.exp(2j * math.pi * index * k / d) for k in range(d))
    return Character(ctx, d, table)


@dataclass(frozen=True)
class DoubleSumReport:
    value: complex
    bound: float
    tight_case: bool
    residue_counts: tuple[int, ...]  # pairs per dlog residue class mod d
    zero_pairs: int  # pairs with a + b = 0, contributing nothing


def double_char_sum(chi: Character, a: FqSubset, b: FqSubset,
                    tol: float = 1e-6) -> DoubleSumReport:
    """Exact sum of chi(x + y) over pairs, with the analytic modulus bound.

    The bound is sqrt(q |A| |B|) * sqrt(1 - |A|/q) * sqrt(1 - |B|/q); a
    nontrivial character can never exceed it, so exceeding it (beyond tol)
    means a bug.
    """
    ctx = _same_ctx(a, b)
    if chi.ctx.key != ctx.key:
        raise HypothesisViolated("character and sets from different fields")
    if chi.d < 2:
        raise TrivialCharacter("double sums need a nontrivial character")
    _require_nonempty(a, b)
    d = chi.d
    counts = [0] * d
    zero_pairs = 0
    dlog = ctx.dlog
    add = ctx.add
    for x in iter_bits(a.bits):
        for y in iter_bits(b.bits):
            t = dlog[add(x, y)]
            if t == DLOG_UNDEFINED:
                zero_pairs += 1
            else:
                counts[t % d] += 1
    value = sum(c * chi.root_table[k] for k, c in enumerate(counts) if c)
    q = ctx.q
    ca, cb = a.card, b.card
    bound = math.sqrt(q * ca * cb) * math.sqrt(1 - ca / q) * math.sqrt(1 - cb / q)
    tight = bound - abs(value) <= tol
    return DoubleSumReport(value, bound, tight, tuple(counts), zero_pairs)


@dataclass(frozen=True)
class ProductBoundReport:
    product: int
    q: int
    holds: bool


def product_bound_check(a: FqSubset, b: FqSubset, d: int) -> ProductBoundReport:
    """Verify |A||B| < q for sets whose sumset lies inside S_d.

    Raises HypothesisViolated when A + B leaves the subgroup; a False result
    on valid input would contradict the character-sum argument, so it is a
    bug indicator, not a mathematical possibility.
    """
    ctx = _same_ctx(a, b)
    _require_nonempty(a, b)
    spec = subgroup(ctx, d)
    s = sumset(a, b)
    if s.bits & ~spec.members.bits:
        raise HypothesisViolated("A + B is not contained in S_d")
    product = a.card * b.card
    return ProductBoundReport(product, ctx.q, product < ctx.q)
