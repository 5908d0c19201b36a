"""Exhaustive search for binary and ternary decompositions of S_d.

Symmetry reduction: a decomposition survives part permutation, simultaneous
translation with zero net shift, and simultaneous dilation by any lambda in
S_d.  Every binary orbit therefore has a representative with 0 in A, min(B)
= 1 and |B| <= |A|; every ternary orbit has one with 0 in A, 0 in B, min(C)
= 1 and |C| <= |B| <= |A|.  Only those representatives are enumerated, and
results are deduplicated by an explicit orbit-minimal canonical key.

Enumeration is cover-driven: parts are grown by branching on which element
covers the lowest uncovered target point, with tried branches barred from
later siblings so each solution is produced exactly once.  Size pairs are
prefiltered by theorem-backed pruning rules (each one toggleable so tests
can compare against an unpruned oracle):

  CAUCHY_DAVENPORT  min(p, |A|+|B|-1) <= |A+B|, so when p > |S_d| a
                    decomposition needs |A|+|B|-1 <= |S_d|;
  PRODUCT_LT_Q      A+B inside S_d forces |A||B| < q;
  HANSON_PETRIDIS   if C(|A|-1+|S_d|, |S_d|) is nonzero mod p then
                    |A||B| <= |S_d|, hence equality (a tiling);
  DISTINCT_SUMS     |S_d| <= 2p/3 forces |A||B| = |S_d| outright.

A budget caps visited nodes.  A truncated run never claims exhaustiveness:
with witnesses it reports EXISTS (complete=False), without any it reports
UNKNOWN, never NONE_EXHAUSTIVE.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .characters import subgroup
from .errors import DegenerateD, FieldTooLargeForExhaustive, NotADivisor
from .field import FieldCtx, lucas_binom_nonzero, make_field_q
from .subsets import FqSubset, iter_bits, sumset_many

EXISTS = "EXISTS"
NONE_EXHAUSTIVE = "NONE_EXHAUSTIVE"
UNKNOWN = "UNKNOWN"

CAUCHY_DAVENPORT = "CAUCHY_DAVENPORT"
PRODUCT_LT_Q = "PRODUCT_LT_Q"
HANSON_PETRIDIS = "HANSON_PETRIDIS"
DISTINCT_SUMS = "DISTINCT_SUMS"

DEFAULT_PRUNES = frozenset(
    {CAUCHY_DAVENPORT, PRODUCT_LT_Q, HANSON_PETRIDIS, DISTINCT_SUMS})

BINARY_Q_CAP = 4096
TERNARY_Q_CAP = 64


@dataclass(frozen=True)
class SearchTask:
    q: int
    d: int
    arity: int = 2
    min_part_size: int = 2
    budget: int | None = None
    prune_flags: frozenset = DEFAULT_PRUNES


@dataclass(frozen=True)
class DecompWitness:
    parts: tuple[tuple[int, ...], ...]
    canonical_key: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict:
        return {"parts": [list(p) for p in self.parts],
                "canonical_key": [list(p) for p in self.canonical_key]}


@dataclass(frozen=True)
class SearchResult:
    task: SearchTask
    kind: str
    witnesses: tuple[DecompWitness, ...]
    complete: bool
    nodes: int
    prune_counts: dict

    def as_dict(self) -> dict:
        return {
            "q": self.task.q,
            "d": self.task.d,
            "arity": self.task.arity,
            "min_part_size": self.task.min_part_size,
            "kind": self.kind,
            "complete": self.complete,
            "orbit_count": len(self.witnesses),
            "witnesses": [w.as_dict() for w in self.witnesses],
            "nodes": self.nodes,
            "prune_counts": {k: self.prune_counts[k]
                             for k in sorted(self.prune_counts)},
        }


class _BudgetExceeded(Exception):
    pass


class _Gas:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit):
        self.nodes = 0
        self.limit = limit

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _BudgetExceeded


@lru_cache(maxsize=None)
def _subgroup_elems(ctx: FieldCtx, d: int) -> tuple[int, ...]:
    return tuple(iter_bits(subgroup(ctx, d).members.bits))


def verify_witness(ctx: FieldCtx, parts, d: int, min_part_size: int = 2) -> bool:
    """Exact check: the parts sum to S_d and respect the size floor.

    Returns False on any mismatch instead of raising; d = 1 (the whole of
    F_q^*) is allowed here even though the searches exclude it.
    """
    try:
        subs = [FqSubset.from_indices(ctx, p) for p in parts]
    except Exception:
        return False
    if not subs or any(s.card < min_part_size for s in subs):
        return False
    if d < 1 or (ctx.q - 1) % d != 0:
        return False
    return sumset_many(subs).bits == subgroup(ctx, d).members.bits


def canonical_binary_key(ctx: FieldCtx, d: int, a_idx, b_idx):
    """Lexicographic minimum of (sorted A', sorted B') over the orbit."""
    dil = _subgroup_elems(ctx, d)
    best = None
    for lam in dil:
        xa = [ctx.mul(lam, a) for a in a_idx]
        xb = [ctx.mul(lam, b) for b in b_idx]
        for first, second in ((xa, xb), (xb, xa)):
            for t in first:
                cand = (tuple(sorted(ctx.sub(x, t) for x in first)),
                        tuple(sorted(ctx.add(y, t) for y in second)))
                if best is None or cand < best:
                    best = cand
    return best


def canonical_ternary_key(ctx: FieldCtx, d: int, parts):
    dil = _subgroup_elems(ctx, d)
    idx = [list(p) for p in parts]
    perms = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
    best = None
    for lam in dil:
        scaled = [[ctx.mul(lam, x) for x in part] for part in idx]
        for pm in perms:
            x1, x2, x3 = (scaled[i] for i in pm)
            for t1 in x1:
                r1 = tuple(sorted(ctx.sub(v, t1) for v in x1))
                for t2 in x2:
                    r2 = tuple(sorted(ctx.sub(v, t2) for v in x2))
                    shift = ctx.add(t1, t2)  # third shift restores the sum
                    r3 = tuple(sorted(ctx.add(v, shift) for v in x3))
                    cand = (r1, r2, r3)
                    if best is None or cand < best:
                        best = cand
    return best


@lru_cache(maxsize=None)
def _tiling_forced(size: int, order: int, p: int) -> bool:
    ok, _ = lucas_binom_nonzero(size - 1 + order, order, p)
    return ok


def _check_task(task: SearchTask, cap: int) -> FieldCtx:
    if task.q > cap:
        raise FieldTooLargeForExhaustive(
            f"exhaustive mode needs q <= {cap}, got {task.q}")
    ctx = make_field_q(task.q)
    if task.d < 2 or task.d >= task.q - 1:
        raise DegenerateD(f"d={task.d} out of range for q={task.q}")
    if (task.q - 1) % task.d != 0:
        raise NotADivisor(f"d={task.d} does not divide {task.q - 1}")
    return ctx


def _binary_size_pairs(q, p, order, min_sz, flags, counts):
    """Feasible (|B|, allowed |A| sizes) with |B| <= |A|, after pruning."""
    out = {}
    distinct = DISTINCT_SUMS in flags and 3 * order <= 2 * p
    for sb in range(min_sz, order + 1):
        allowed = []
        for sa in range(sb, order + 1):
            if sa * sb < order:
                continue  # cannot cover S_d
            if PRODUCT_LT_Q in flags and sa * sb >= q:
                counts[PRODUCT_LT_Q] += 1
                continue
            if CAUCHY_DAVENPORT in flags and p > order and sa + sb - 1 > order:
                counts[CAUCHY_DAVENPORT] += 1
                continue
            if distinct and sa * sb != order:
                counts[DISTINCT_SUMS] += 1
                continue
            if HANSON_PETRIDIS in flags and sa * sb != order and (
                    _tiling_forced(sa, order, p) or _tiling_forced(sb, order, p)):
                counts[HANSON_PETRIDIS] += 1
                continue
            allowed.append(sa)
        if allowed:
            out[sb] = allowed
    return out


def _cover_enum(ctx, other_bits, cand_bits, target_bits, forced_bits,
                sizes, gas, sink):
    """All X with forced <= X <= cand and X + other = target, |X| in sizes.

    Branches on the covering element of the lowest uncovered target point;
    tried candidates are barred from sibling subtrees, so every solution is
    emitted exactly once.  After full coverage, supersets are enumerated
    when larger sizes are allowed.
    """
    if forced_bits & ~cand_bits:
        return
    size_set = set(sizes)
    max_size = max(sizes)
    other = list(iter_bits(other_bits))
    m = len(other)

    covered = 0
    for a in iter_bits(forced_bits):
        covered |= ctx.translate_bits(other_bits, a)
    if covered & ~target_bits:
        return
    count = forced_bits.bit_count()

    def extras(chosen, avail, cnt):
        gas.tick()
        if cnt in size_set:
            sink(chosen)
        if cnt >= max_size:
            return
        rest = avail
        while rest:
            low = rest & -rest
            rest &= rest - 1
            extras(chosen | low, rest, cnt + 1)

    def rec(chosen, covered, avail, cnt):
        gas.tick()
        if covered == target_bits:
            extras(chosen, avail, cnt)
            return
        if cnt >= max_size:
            return
        uncovered = target_bits & ~covered
        if (max_size - cnt) * m < uncovered.bit_count():
            return
        s = (uncovered & -uncovered).bit_length() - 1
        cand = 0
        for b in other:
            cand |= 1 << ctx.sub(s, b)
        cand &= avail
        for a in iter_bits(cand):
            bit = 1 << a
            avail &= ~bit
            add = ctx.translate_bits(other_bits, a)
            if add & ~target_bits:
                continue
            rec(chosen | bit, covered | add, avail, cnt + 1)

    rec(forced_bits, covered, cand_bits & ~forced_bits, count)


def _enum_second_parts(ctx, target_bits, first_forced, first_pool,
                       size_pairs, gas, sink, shift_cache):
    """Grow the smaller part B (forced element first), then enumerate A.

    target_bits is what A + B must equal; B lives in first_pool and starts
    from first_forced (index 1 when the target is S_d, 0 for split targets).
    sink receives (a_bits, b_bits).
    """
    for sb in sorted(size_pairs):
        sizes_a = size_pairs[sb]
        min_a = min(sizes_a)

        def grow(b_bits, pool, cand_a, cnt):
            gas.tick()
            if cnt == sb:
                _cover_enum(ctx, b_bits, cand_a, target_bits, 1,
                            sizes_a, gas,
                            lambda a_bits: sink(a_bits, b_bits))
                return
            if pool.bit_count() < sb - cnt:
                return
            rest = pool
            while rest:
                low = rest & -rest
                b = low.bit_length() - 1
                rest &= rest - 1
                shifted = shift_cache.get(b)
                if shifted is None:
                    shifted = ctx.translate_bits(target_bits, ctx.neg(b))
                    shift_cache[b] = shifted
                nxt = cand_a & shifted
                if nxt.bit_count() < min_a:
                    continue
                grow(b_bits | low, rest, nxt, cnt + 1)

        start = first_forced
        start_bit = 1 << start
        base_cand = shift_cache.get(start)
        if base_cand is None:
            base_cand = ctx.translate_bits(target_bits, ctx.neg(start))
            shift_cache[start] = base_cand
        grow(start_bit, first_pool & ~((start_bit << 1) - 1), base_cand, 1)


def search_binary(task: SearchTask) -> SearchResult:
    """All S_d = A + B up to symmetry, or a certified absence.

    Representatives have 0 in A (so B lands inside S_d), min(B) = 1 via
    dilation, and |B| <= |A| via the swap.
    """
    ctx = _check_task(task, BINARY_Q_CAP)
    order = (task.q - 1) // task.d
    s_bits = subgroup(ctx, task.d).members.bits
    counts = {k: 0 for k in sorted(DEFAULT_PRUNES)}
    pairs = _binary_size_pairs(task.q, ctx.p, order, task.min_part_size,
                               task.prune_flags, counts)
    gas = _Gas(task.budget)
    found = {}

    def sink(a_bits, b_bits):
        a_idx = tuple(iter_bits(a_bits))
        b_idx = tuple(iter_bits(b_bits))
        key = canonical_binary_key(ctx, task.d, a_idx, b_idx)
        if key not in found:
            found[key] = DecompWitness(parts=(a_idx, b_idx), canonical_key=key)

    complete = True
    try:
        _enum_second_parts(ctx, s_bits, 1, s_bits, pairs, gas, sink, {})
    except _BudgetExceeded:
        complete = False

    witnesses = tuple(found[k] for k in sorted(found))
    kind = EXISTS if witnesses else (NONE_EXHAUSTIVE if complete else UNKNOWN)
    return SearchResult(task=task, kind=kind, witnesses=witnesses,
                        complete=complete, nodes=gas.nodes, prune_counts=counts)


def _intermediate_sizes(q, p, order, sc, min_sz, flags, counts):
    """Allowed |D| for D + C = S_d with |C| = sc, D an A+B sumset."""
    out = []
    distinct = DISTINCT_SUMS in flags and 3 * order <= 2 * p
    for sd in range(max(min_sz, (order + sc - 1) // sc), order + 1):
        if sd * sc < order:
            continue
        if PRODUCT_LT_Q in flags and sd * sc >= q:
            counts[PRODUCT_LT_Q] += 1
            continue
        if CAUCHY_DAVENPORT in flags and p > order and sd + sc - 1 > order:
            counts[CAUCHY_DAVENPORT] += 1
            continue
        if distinct and sd * sc != order:
            counts[DISTINCT_SUMS] += 1
            continue
        if HANSON_PETRIDIS in flags and sd * sc != order and (
                _tiling_forced(sd, order, p) or _tiling_forced(sc, order, p)):
            counts[HANSON_PETRIDIS] += 1
            continue
        out.append(sd)
    return out


def _split_size_pairs(q, p, order, d_size, sc, min_sz, flags, counts):
    """Feasible (|B|, allowed |A|) for A + B = D inside a ternary witness.

    The part-size ordering puts C lowest, so both split sizes are >= |C|.
    The subgroup-level bounds apply through the pairs (A, B+C) and
    (B, A+C), whose sumsets have size at least max of the other two parts.
    """
    out = {}
    distinct = DISTINCT_SUMS in flags and 3 * order <= 2 * p
    lo = max(min_sz, sc)
    for sb in range(lo, d_size + 1):
        allowed = []
        for sa in range(sb, d_size + 1):
            if sa * sb < d_size:
                continue
            if PRODUCT_LT_Q in flags and sa * sb >= q:
                counts[PRODUCT_LT_Q] += 1
                continue
            if CAUCHY_DAVENPORT in flags and p > order and sa + sb - 1 > order:
                counts[CAUCHY_DAVENPORT] += 1
                continue
            if distinct and sa * sb != d_size:
                counts[DISTINCT_SUMS] += 1
                continue
            if HANSON_PETRIDIS in flags and (
                    (_tiling_forced(sa, order, p) and sa * sb > order) or
                    (_tiling_forced(sb, order, p) and sb * sa > order)):
                counts[HANSON_PETRIDIS] += 1
                continue
            allowed.append(sa)
        if allowed:
            out[sb] = allowed
    return out


def search_ternary(task: SearchTask) -> SearchResult:
    """All S_d = A + B + C up to symmetry in a micro field (q <= 64).

    Enumerates C (min(C) = 1, the smallest part), then every D with
    D + C = S_d over the shrinking candidate set, then binary splits
    A + B = D with 0 in both A and B.
    """
    ctx = _check_task(task, TERNARY_Q_CAP)
    order = (task.q - 1) // task.d
    s_bits = subgroup(ctx, task.d).members.bits
    counts = {k: 0 for k in sorted(DEFAULT_PRUNES)}
    gas = _Gas(task.budget)
    found = {}
    min_sz = task.min_part_size

    def record(a_bits, b_bits, c_bits):
        parts = tuple(tuple(iter_bits(bits)) for bits in (a_bits, b_bits, c_bits))
        key = canonical_ternary_key(ctx, task.d, parts)
        if key not in found:
            found[key] = DecompWitness(parts=parts, canonical_key=key)

    def on_d(d_bits, c_bits, split_cache):
        d_size = d_bits.bit_count()
        pairs = split_cache.get(d_size)
        if pairs is None:
            pairs = _split_size_pairs(task.q, ctx.p, order, d_size,
                                      c_bits.bit_count(), min_sz,
                                      task.prune_flags, counts)
            split_cache[d_size] = pairs
        if not pairs:
            return
        _enum_second_parts(ctx, d_bits, 0, d_bits, pairs, gas,
                           lambda a_bits, b_bits: record(a_bits, b_bits, c_bits),
                           {})

    complete = True
    try:
        max_sc = order
        for sc in range(min_sz, max_sc + 1):
            d_sizes = _intermediate_sizes(task.q, ctx.p, order, sc, min_sz,
                                          task.prune_flags, counts)
            # both split parts are at least as large as C
            d_sizes = [sd for sd in d_sizes if sd >= max(min_sz, sc)]
            if not d_sizes:
                continue
            split_cache = {}
            shift_cache = {}

            def grow_c(c_bits, pool, cand_d, cnt):
                gas.tick()
                if cnt == sc:
                    _cover_enum(ctx, c_bits, cand_d, s_bits, 1, d_sizes, gas,
                                lambda d_bits: on_d(d_bits, c_bits, split_cache))
                    return
                if pool.bit_count() < sc - cnt:
                    return
                rest = pool
                while rest:
                    low = rest & -rest
                    c = low.bit_length() - 1
                    rest &= rest - 1
                    shifted = shift_cache.get(c)
                    if shifted is None:
                        shifted = ctx.translate_bits(s_bits, ctx.neg(c))
                        shift_cache[c] = shifted
                    nxt = cand_d & shifted
                    if nxt.bit_count() < min(d_sizes):
                        continue
                    grow_c(c_bits | low, rest, nxt, cnt + 1)

            base = ctx.translate_bits(s_bits, ctx.neg(1))
            shift_cache[1] = base
            grow_c(0b10, s_bits & ~0b11, base, 1)
    except _BudgetExceeded:
        complete = False

    witnesses = tuple(found[k] for k in sorted(found))
    kind = EXISTS if witnesses else (NONE_EXHAUSTIVE if complete else UNKNOWN)
    return SearchResult(task=task, kind=kind, witnesses=witnesses,
                        complete=complete, nodes=gas.nodes, prune_counts=counts)
