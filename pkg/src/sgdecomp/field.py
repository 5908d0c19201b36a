"""Small finite fields F_q, q = p^n <= 2^20, with full discrete-log tables.

Elements are plain integer indices in [0, q).  The little-endian base-p
digits of an index are the coefficients of the residue polynomial, so for
prime fields the index *is* the residue and index addition mod p agrees
with field addition.  The modulus is the lexicographically smallest monic
irreducible of degree n (coefficients compared low-degree first), and the
generator is the smallest-index primitive element, so a (p, n) pair always
produces the identical context.

The dlog table maps index -> discrete log base the generator; index 0 gets
the sentinel -1 (log undefined).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CompositeP, FieldTooLarge, NotAPrimePower

Q_CAP = 1 << 20

DLOG_UNDEFINED = -1


def is_prime(m: int) -> bool:
    """Deterministic trial division; fine for the sizes this library allows."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Sorted distinct prime factors of m >= 1."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def divisors(m: int) -> list[int]:
    """Sorted positive divisors of m >= 1."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    small, large = [], []
    f = 1
    while f * f <= m:
        if m % f == 0:
            small.append(f)
            if f != m // f:
                large.append(m // f)
        f += 1
    return small + large[::-1]


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, n) with q = p^n, or raise NotAPrimePower."""
    if q < 2:
        raise NotAPrimePower(f"q={q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise NotAPrimePower(f"q={q} has several prime factors {fs}")
    p = fs[0]
    n = 0
    m = q
    while m > 1:
        m //= p
        n += 1
    if p**n != q:
        raise NotAPrimePower(f"q={q} is not a power of {p}")
    return p, n


def prime_powers(limit: int) -> list[tuple[int, int, int]]:
    """All (q, p, n) with q = p^n <= limit, sorted by q."""
    out = []
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        q, n = p, 1
        while q <= limit:
            out.append((q, p, n))
            q *= p
            n += 1
    out.sort()
    return out


@dataclass(frozen=True)
class PExpansion:
    """Little-endian base-p digit expansion of a nonnegative integer."""

    base: int
    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.base + d
        return v

    def digit(self, j: int) -> int:
        """Digit at position j; positions past the top are zero."""
        return self.digits[j] if j < len(self.digits) else 0


def base_p_digits(m: int, p: int) -> PExpansion:
    """Base-p expansion of m >= 0.  No trailing zeros; 0 expands to (0,)."""
    if p < 2:
        raise ValueError(f"base must be >= 2, got {p}")
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if m == 0:
        return PExpansion(p, (0,))
    digs = []
    while m:
        digs.append(m % p)
        m //= p
    return PExpansion(p, tuple(digs))


@lru_cache(maxsize=None)
def _small_binom_table(p: int) -> tuple[tuple[int, ...], ...]:
    # Pascal triangle mod p for arguments < p
    rows = [[1]]
    for i in range(1, p):
        prev = rows[-1]
        row = [1]
        for j in range(1, i):
            row.append((prev[j - 1] + prev[j]) % p)
        row.append(1)
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def lucas_binom_nonzero(top: int, bottom: int, p: int) -> tuple[bool, int]:
    """Whether C(top, bottom) is nonzero mod p, and the residue.

    Computed digit by digit: the residue is the product of the digitwise
    binomials, which vanishes exactly when some digit of bottom exceeds the
    matching digit of top.
    """
    if not is_prime(p):
        raise CompositeP(f"p={p} is not prime")
    if top < 0 or bottom < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if bottom > top:
        return (False, 0)
    tbl = _small_binom_table(p)
    res = 1
    t, b = top, bottom
    while b:
        td, bd = t % p, b % p
        if bd > td:
            return (False, 0)
        res = (res * tbl[td][bd]) % p
        t //= p
        b //= p
    return (res != 0, res)


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    # schoolbook product then reduction by the monic modulus
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    deg_m = len(mod) - 1
    while len(out) > deg_m:
        lead = out.pop()
        if lead:
            off = len(out) - deg_m
            for j in range(deg_m):
                out[off + j] = (out[off + j] - lead * mod[j]) % p
    return _poly_trim(out)


def _polypow_x_mod(e: int, mod: list[int], p: int) -> list[int]:
    # x^e mod (mod, p) by square and multiply
    result = [1]
    base = [0, 1]
    deg_m = len(mod) - 1
    if deg_m == 1:
        base = [(-mod[0]) % p]
    while e:
        if e & 1:
            result = _polymul_mod(result, base, mod, p)
        base = _polymul_mod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # a mod b, b monic-ized on the fly
        inv_lead = pow(b[-1], p - 2, p)
        bb = [(c * inv_lead) % p for c in b]
        r = list(a)
        while len(r) >= len(bb) and r:
            lead = r[-1]
            if lead:
                off = len(r) - len(bb)
                for j in range(len(bb)):
                    r[off + j] = (r[off + j] - lead * bb[j]) % p
            r.pop()
            _poly_trim(r)
            if not r:
                break
        a, b = b, _poly_trim(r)
    return a


def _is_irreducible(coeffs: list[int], p: int, n: int) -> bool:
    """coeffs: monic, little-endian, degree n >= 2."""
    # cheap root screen first
    for c in range(p):
        acc = 0
        for a in reversed(coeffs):
            acc = (acc * c + a) % p
        if acc == 0:
            return False
    # x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for prime r | n
    xq = _polypow_x_mod(p**n, coeffs, p)
    if xq != [0, 1]:
        return False
    for r in prime_factors(n):
        xe = _polypow_x_mod(p ** (n // r), coeffs, p)
        diff = list(xe)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(coeffs, _poly_trim(diff), p)
        if len(g) > 1:
            return False
    return True


def _find_modulus(p: int, n: int) -> tuple[int, ...]:
    if n == 1:
        return (0, 1)
    # lexicographically smallest (c_0, ..., c_{n-1}), low-degree digit first
    for code in range(p**n):
        digs = []
        m = code
        for _ in range(n):
            digs.append(m % p)
            m //= p
        cand = list(reversed(digs))  # c_0 varies slowest
        if cand[0] == 0:
            continue  # root at zero
        coeffs = cand + [1]
        if _is_irreducible(coeffs, p, n):
            return tuple(coeffs)
    raise InternalError  # pragma: no cover - irreducibles always exist


class FieldCtx:
    """Arithmetic context for F_{p^n}.  Build through make_field()."""

    __slots__ = (
        "p", "n", "q", "modulus", "generator", "exp", "dlog", "key",
        "full_mask", "nonzero_mask", "_digit_masks",
    )

    def __init__(self, p: int, n: int):
        if not is_prime(p):
            raise CompositeP(f"p={p} is not prime")
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        q = p**n
        if q > Q_CAP:
            raise FieldTooLarge(f"q=p^n={q} exceeds the cap {Q_CAP}")
        self.p = p
        self.n = n
        self.q = q
        self.modulus = _find_modulus(p, n)
        self.key = (p, n, self.modulus)
        self.full_mask = (1 << q) - 1
        self.nonzero_mask = self.full_mask & ~1
        self._digit_masks = None
        self._build_tables()

    # --- index <-> digit coordinates -------------------------------------

    def digits(self, x: int) -> tuple[int, ...]:
        """Length-n little-endian base-p coordinates of element index x."""
        p = self.p
        out = []
        for _ in range(self.n):
            out.append(x % p)
            x //= p
        return tuple(out)

    def from_digits(self, digs) -> int:
        v = 0
        for d in reversed(tuple(digs)):
            v = v * self.p + d
        return v

    # --- raw polynomial arithmetic (no tables needed) ---------------------

    def _raw_mul(self, x: int, y: int) -> int:
        if self.n == 1:
            return (x * y) % self.p
        prod = _polymul_mod(list(self.digits(x)), list(self.digits(y)),
                            list(self.modulus), self.p)
        return self.from_digits(prod + [0] * (self.n - len(prod)))

    def _raw_pow(self, x: int, e: int) -> int:
        r = 1
        b = x
        while e:
            if e & 1:
                r = self._raw_mul(r, b)
            b = self._raw_mul(b, b)
            e >>= 1
        return r

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        rs = prime_factors(order) if order > 1 else []
        gen = None
        for cand in range(1, q):
            if all(self._raw_pow(cand, order // r) != 1 for r in rs):
                gen = cand
                break
        if gen is None:  # pragma: no cover - a generator always exists
            raise InternalError
        self.generator = gen
        exp = [0] * order
        dlog = [DLOG_UNDEFINED] * q
        acc = 1
        for k in range(order):
            exp[k] = acc
            if dlog[acc] != DLOG_UNDEFINED:  # pragma: no cover
                raise InternalError
            dlog[acc] = k
            acc = self._raw_mul(acc, gen)
        if acc != 1:  # pragma: no cover
            raise InternalError
        self.exp = exp
        self.dlog = dlog

    # --- public element arithmetic ----------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.n == 1:
            return (x + y) % self.p
        p = self.p
        out, pw = 0, 1
        for _ in range(self.n):
            out += ((x + y) % p) * pw
            x //= p
            y //= p
            pw *= p
        return out

    def neg(self, x: int) -> int:
        if self.n == 1:
            return (-x) % self.p
        p = self.p
        out, pw = 0, 1
        for _ in range(self.n):
            out += ((-x) % p) * pw
            x //= p
            pw *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp[(self.dlog[x] + self.dlog[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in a field")
        return self.exp[(-self.dlog[x]) % (self.q - 1)]

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0 if e else 1
        return self.exp[(self.dlog[x] * e) % (self.q - 1)]

    # --- bit-mask helpers used by the subset layer -------------------------

    def _ensure_digit_masks(self):
        if self._digit_masks is not None:
            return self._digit_masks
        p, n, q = self.p, self.n, self.q
        masks = []
        for j in range(n):
            block = p**j
            period = block * p
            ones = (1 << block) - 1
            per_level = []
            for v in range(p):
                m = ones << (v * block)
                span = period
                while span < q:
                    m |= m << span
                    span *= 2
                per_level.append(m & self.full_mask)
            masks.append(per_level)
        self._digit_masks = masks
        return masks

    def translate_bits(self, bits: int, t: int) -> int:
        """Image of a bit-mask set under x -> x + t."""
        if t == 0 or bits == 0:
            return bits
        if self.n == 1:
            p = self.p
            return ((bits << t) | (bits >> (p - t))) & self.full_mask
        masks = self._ensure_digit_masks()
        p = self.p
        block = 1
        for j in range(self.n):
            tv = t % p
            t //= p
            if tv:
                lvl = masks[j]
                acc = 0
                for v in range(p):
                    part = bits & lvl[v]
                    if part:
                        shift = (((v + tv) % p) - v) * block
                        acc |= (part << shift) if shift >= 0 else (part >> -shift)
                bits = acc
            block *= p
        return bits

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, n={self.n}, q={self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)


class InternalError(AssertionError):
    """Impossible state inside field construction."""


@lru_cache(maxsize=64)
def _cached_field(p: int, n: int) -> FieldCtx:
    return FieldCtx(p, n)


def make_field(p: int, n: int = 1) -> FieldCtx:
    """Deterministic context for F_{p^n}; repeated calls share the object."""
    return _cached_field(p, n)


def make_field_q(q: int) -> FieldCtx:
    """Context for F_q given the prime power q."""
    p, n = factor_prime_power(q)
    return make_field(p, n)
