"""Arithmetic in the binary fields GF(2^n) for even n between 4 and 20.

Field elements are plain Python ints in ``range(2**n)``: the integer's bits
are the coordinates of the element in the polynomial basis {1, x, ..., x^(n-1)}
modulo a fixed irreducible polynomial.  Every supported degree is pinned to one
modulus and one primitive element so that serialized results are reproducible
across runs and machines:

    n   modulus                     primitive
    4   x^4 + x + 1                 (0x13)      0x2
    6   x^6 + x + 1                 (0x43)      0x2
    8   x^8 + x^4 + x^3 + x + 1     (0x11b)     0x3
    10  x^10 + x^3 + 1              (0x409)     0x2
    12  x^12 + x^3 + 1              (0x1009)    0x3
    14  x^14 + x^5 + 1              (0x4021)    0x7
    16  x^16 + x^5 + x^3 + x + 1    (0x1002b)   0x3
    18  x^18 + x^3 + 1              (0x40009)   0xa
    20  x^20 + x^3 + 1              (0x100009)  0x2

The modulus is the irreducible trinomial with the smallest integer encoding,
falling back to the smallest pentanomial when no trinomial exists (n = 8, 16);
the primitive element is the smallest generator of the multiplicative group.

Scalar operations work bit by bit on ints.  Bulk operations (`mul_vec`,
`pow_vec`, ...) act on numpy uint32 arrays and are what make exhausting a
2^20-element domain affordable; they are cross-checked against the scalar
routines in the test suite.  No log/antilog tables are used anywhere, so the
cost of a field multiplication is the same whether or not the field fits in
cache.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

# n -> (irreducible modulus, least primitive element)
_PINNED = {
    4: (0x13, 0x2),
    6: (0x43, 0x2),
    8: (0x11B, 0x3),
    10: (0x409, 0x2),
    12: (0x1009, 0x3),
    14: (0x4021, 0x7),
    16: (0x1002B, 0x3),
    18: (0x40009, 0xA),
    20: (0x100009, 0x2),
}

SUPPORTED_N = tuple(sorted(_PINNED))

_SPREAD10 = None  # lazy 1024-entry table: bit i of the index moves to bit 2i


def _spread10() -> np.ndarray:
    """Table interleaving a zero bit after each of the 10 low bits."""
    global _SPREAD10
    if _SPREAD10 is None:
        x = np.arange(1024, dtype=np.uint32)
        x = (x | (x << 8)) & np.uint32(0x00FF00FF)
        x = (x | (x << 4)) & np.uint32(0x0F0F0F0F)
        x = (x | (x << 2)) & np.uint32(0x33333333)
        x = (x | (x << 1)) & np.uint32(0x55555555)
        _SPREAD10 = x
    return _SPREAD10


def canonical_exponent(k: int, n: int) -> int:
    """Reduce an exponent k >= 1 into [1, 2^n - 1] preserving x -> x^k on GF(2^n).

    The reduction is mod 2^n - 1 but maps multiples of 2^n - 1 to 2^n - 1
    itself rather than to 0, because x^0 and x^(2^n - 1) differ at x = 0.
    """
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    return (k - 1) % (2**n - 1) + 1


class FieldCtx:
    """GF(2^n) with a pinned modulus and primitive element.

    Use :func:`field_new` to construct one; instances are cheap and cache
    their numpy lookup tables lazily.
    """

    def __init__(self, n: int, irreducible: int, primitive: int):
        if n % 2 != 0 or not 4 <= n <= 20:
            raise ValueError(f"unsupported field degree n={n}: need even n with 4 <= n <= 20")
        self.n = n
        self.m = n // 2
        self.order = 1 << n
        self.mult_order = self.order - 1
        self.irreducible = irreducible
        self.primitive = primitive
        self._domain = None
        self._red = None
        self._trace_bits = None
        self._subfield_mask = None

    def __repr__(self) -> str:
        return f"FieldCtx(n={self.n}, irreducible=0x{self.irreducible:x})"

    def field_spec(self) -> dict:
        """JSON-ready description of the field, embedded in every report."""
        return {
            "n": self.n,
            "irreducible_hex": f"0x{self.irreducible:x}",
            "primitive_hex": f"0x{self.primitive:x}",
        }

    # -- scalar arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        """Shift-and-reduce product of two field elements."""
        p = 0
        top = 1 << self.n
        while b:
            if b & 1:
                p ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.irreducible
        return p

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def inv(self, a: int) -> int:
        """Multiplicative inverse, via a^(2^n - 2)."""
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.mult_order - 1)

    def pow(self, a: int, k: int) -> int:
        """a**k with exponents taken mod 2^n - 1 on nonzero elements.

        0**0 = 1, 0**k = 0 for k > 0, and negative k inverts first
        (so 0 with negative k is an error).
        """
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            return 0
        k %= self.mult_order
        result = 1
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def trace(self, a: int, sub_m: int = 1) -> int:
        """Trace from GF(2^n) onto the subfield GF(2^sub_m)."""
        if self.n % sub_m != 0:
            raise ValueError(f"sub_m={sub_m} does not divide n={self.n}")
        acc = a
        t = a
        for _ in range(self.n // sub_m - 1):
            for _ in range(sub_m):
                t = self.mul(t, t)
            acc ^= t
        return acc

    def enumerate(self):
        """All field elements in increasing integer order."""
        return range(self.order)

    # -- vectorized arithmetic on uint32 arrays ---------------------------

    def domain(self) -> np.ndarray:
        """The full field as a cached uint32 array [0, 1, ..., 2^n - 1]."""
        if self._domain is None:
            self._domain = np.arange(self.order, dtype=np.uint32)
        return self._domain

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of two arrays of field elements."""
        a = a.astype(np.uint32, copy=True)
        b = b.astype(np.uint32, copy=True)
        p = np.zeros_like(a)
        irr = np.uint32(self.irreducible)
        for _ in range(self.n):
            p ^= a * (b & np.uint32(1))
            b >>= np.uint32(1)
            a <<= np.uint32(1)
            a ^= ((a >> np.uint32(self.n)) & np.uint32(1)) * irr
        return p

    def scalar_mul_vec(self, c: int, arr: np.ndarray) -> np.ndarray:
        """c * arr for a single field element c (bit loop over c only)."""
        if c == 0:
            return np.zeros_like(arr)
        if c == 1:
            return arr.copy()
        a = arr.astype(np.uint32, copy=True)
        p = np.zeros_like(a)
        irr = np.uint32(self.irreducible)
        while c:
            if c & 1:
                p ^= a
            c >>= 1
            a <<= np.uint32(1)
            a ^= ((a >> np.uint32(self.n)) & np.uint32(1)) * irr
        return p

    def _red_table(self) -> np.ndarray:
        """RED[h] = (h << n) mod irreducible, for h below 2^(n-1)."""
        if self._red is None:
            n = self.n
            mask = self.order - 1
            # residues of x^(n+i) for i = 0 .. n-2
            r = self.irreducible & mask
            singles = [r]
            for _ in range(n - 2):
                r <<= 1
                if r & self.order:
                    r ^= self.irreducible
                singles.append(r)
            red = np.zeros(1 << (n - 1), dtype=np.uint32)
            for i, ri in enumerate(singles):
                red[1 << i : 2 << i] = red[: 1 << i] ^ np.uint32(ri)
            self._red = red
        return self._red

    def sqr_vec(self, arr: np.ndarray) -> np.ndarray:
        """Elementwise square: interleave zero bits, then table-reduce."""
        spread = _spread10()
        a = arr.astype(np.uint32, copy=False)
        sq = spread[a & np.uint32(0x3FF)].astype(np.uint64)
        sq |= spread[a >> np.uint32(10)].astype(np.uint64) << np.uint64(20)
        lo = (sq & np.uint64(self.mult_order)).astype(np.uint32)
        hi = (sq >> np.uint64(self.n)).astype(np.int64)
        return lo ^ self._red_table()[hi]

    def pow_vec(self, arr: np.ndarray, k: int) -> np.ndarray:
        """Elementwise arr**k for k >= 0 (same 0-versus-2^n-1 care as pow)."""
        if k < 0:
            raise ValueError("pow_vec requires k >= 0; reduce negative exponents first")
        if k == 0:
            return np.ones_like(arr)
        k = canonical_exponent(k, self.n)
        base = arr.astype(np.uint32, copy=False)
        result = None
        while k:
            if k & 1:
                result = base.copy() if result is None else self.mul_vec(result, base)
            k >>= 1
            if k:
                base = self.sqr_vec(base)
        return result

    def trace_bits(self) -> np.ndarray:
        """Cached uint8 array: absolute trace of every field element."""
        if self._trace_bits is None:
            t = self.domain().copy()
            acc = t.copy()
            for _ in range(self.n - 1):
                t = self.sqr_vec(t)
                acc ^= t
            self._trace_bits = acc.astype(np.uint8)
        return self._trace_bits

    def subfield_mask(self) -> np.ndarray:
        """Cached bool array marking the subfield GF(2^m) inside GF(2^n)."""
        if self._subfield_mask is None:
            t = self.domain().copy()
            for _ in range(self.m):
                t = self.sqr_vec(t)
            self._subfield_mask = t == self.domain()
        return self._subfield_mask


def field_new(n: int) -> FieldCtx:
    """Construct the pinned GF(2^n) context for even n in [4, 20]."""
    if n not in _PINNED:
        raise ValueError(f"unsupported field degree n={n}: need even n with 4 <= n <= 20")
    irreducible, primitive = _PINNED[n]
    return FieldCtx(n, irreducible, primitive)


@dataclass(frozen=True)
class SparsePoly:
    """Polynomial over GF(2^n) stored as a sorted tuple of (coeff, exponent).

    Exponents live in [1, 2^n - 1] (reduced by :func:`canonical_exponent`),
    repeated exponents are merged by XOR of coefficients, and zero
    coefficients are dropped, so equal maps built from different term lists
    compare equal.
    """

    ctx: FieldCtx
    terms: tuple

    @classmethod
    def make(cls, ctx: FieldCtx, terms) -> "SparsePoly":
        merged: dict[int, int] = {}
        for coeff, exp in terms:
            if not 0 <= coeff < ctx.order:
                raise ValueError(f"coefficient 0x{coeff:x} outside GF(2^{ctx.n})")
            e = canonical_exponent(exp, ctx.n)
            merged[e] = merged.get(e, 0) ^ coeff
        canon = tuple((c, e) for e, c in sorted(merged.items()) if c != 0)
        return cls(ctx, canon)

    @classmethod
    def from_spec(cls, ctx: FieldCtx, text: str) -> "SparsePoly":
        """Parse "coeff:exp,coeff:exp,..." with hex coefficients and decimal exponents."""
        terms = []
        for part in text.split(","):
            piece = part.strip()
            if not piece:
                raise ValueError(f"empty term in polynomial spec {text!r}")
            try:
                coeff_s, exp_s = piece.split(":")
                terms.append((int(coeff_s, 16), int(exp_s, 10)))
            except ValueError as exc:
                raise ValueError(
                    f"malformed term {piece!r}: expected hexcoeff:exponent"
                ) from exc
        if not terms:
            raise ValueError("polynomial spec has no terms")
        return cls.make(ctx, terms)

    def to_spec(self) -> str:
        return ",".join(f"{c:x}:{e}" for c, e in self.terms)

    def eval(self, x: int) -> int:
        return eval_sparse(self, x)

    def plus_x(self) -> "SparsePoly":
        """The map x -> f(x) + x, used for complete-permutation checks."""
        return SparsePoly.make(self.ctx, list(self.terms) + [(1, 1)])

    def exponents(self) -> tuple:
        return tuple(e for _, e in self.terms)

    def has_unit_pivot(self) -> bool:
        """True when some exponent is coprime to 2^n - 1."""
        return any(gcd(e, self.ctx.mult_order) == 1 for _, e in self.terms)


def eval_sparse(poly: SparsePoly, x: int) -> int:
    """Evaluate a sparse polynomial at one point with scalar ops."""
    ctx = poly.ctx
    acc = 0
    for coeff, exp in poly.terms:
        acc ^= ctx.mul(coeff, ctx.pow(x, exp))
    return acc
