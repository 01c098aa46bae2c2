"""Permutation verification engines for sparse polynomials over GF(2^n).

Three independent routes to the same yes/no question ("is f a permutation?"),
so each can serve as an oracle for the others:

* ``brute``            -- evaluate f on all 2^n points and look for a collision.
* ``charsum``          -- f permutes iff every nontrivial additive character
                          sums to zero over the image (sum over x of
                          (-1)^Tr(gamma*f(x)) = 0 for all gamma != 0).
* ``delta_criterion``  -- for f with a pivot exponent d1 coprime to 2^n - 1,
                          f permutes iff the character sum of
                          x^d1 + sum_i w_i(delta) x^d_i vanishes for every
                          delta != 0, where w_i(delta) = u_i delta^(d1 - d_i).
* ``niho``             -- when all exponents are congruent mod 2^m - 1, each
                          delta-criterion sum collapses to (N - 1) * 2^m with
                          N counted on the (2^m + 1)-point unit circle, and for
                          the paired-exponent binomials the count reduces
                          further to a closed-form unique-solution check.

The quadratic-cost engines (charsum, and the direct delta scan) refuse fields
above a size cap: 12 by default, overridable per call or via the
NIHO_PERM_MAX_N environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from time import perf_counter

import numpy as np

from .exponents import NihoParams
from .gf2n import FieldCtx, SparsePoly, canonical_exponent, field_new
from .unit_circle import UnitCircle, build_unit_circle

__all__ = [
    "DEFAULT_SIZE_CAP",
    "SparsePoly",
    "VerificationReport",
    "char_sum",
    "count_unit_circle_solutions",
    "effective_size_cap",
    "exp_sum_via_niho",
    "is_cpp",
    "is_permutation_brute",
    "is_pp_charsum",
    "is_pp_delta_criterion",
    "unique_solution_check",
]

DEFAULT_SIZE_CAP = 12


def effective_size_cap(explicit=None) -> int:
    """Largest n the quadratic engines accept: explicit arg, else the
    NIHO_PERM_MAX_N environment variable, else 12."""
    if explicit is not None:
        return explicit
    env = os.environ.get("NIHO_PERM_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"NIHO_PERM_MAX_N must be an integer, got {env!r}") from None
    return DEFAULT_SIZE_CAP


def _require_within_cap(ctx: FieldCtx, size_cap, engine: str) -> None:
    cap = effective_size_cap(size_cap)
    if ctx.n > cap:
        raise ValueError(
            f"{engine} engine scans 2^(2n) character values; n={ctx.n} exceeds the "
            f"size cap {cap} (pass size_cap or set NIHO_PERM_MAX_N to override)"
        )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one engine run: verdict plus a checkable witness on failure.

    ``witness`` is None on success, a failing element (gamma or delta) for the
    character engines, or a colliding input pair (x1, x2) for the brute
    engine.  ``elapsed`` is wall-clock seconds; it is serialized only when
    requested so that reports are byte-stable by default.
    """

    engine: str
    verdict: bool
    witness: object
    elapsed: float
    field: dict

    def witness_hex(self):
        if self.witness is None:
            return None
        if isinstance(self.witness, tuple):
            return ",".join(f"0x{w:x}" for w in self.witness)
        return f"0x{self.witness:x}"

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "engine": self.engine,
            "verdict": self.verdict,
            "witness": self.witness_hex(),
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000.0, 3)
        out["field"] = self.field
        return out


def _values_over_domain(poly: SparsePoly) -> np.ndarray:
    """f(x) for every x in the field, as a uint32 array indexed by x."""
    ctx = poly.ctx
    values = np.zeros(ctx.order, dtype=np.uint32)
    for coeff, exp in poly.terms:
        powers = ctx.pow_vec(ctx.domain(), exp)
        values ^= powers if coeff == 1 else ctx.scalar_mul_vec(coeff, powers)
    return values


def _first_collision(values: np.ndarray) -> tuple:
    """Lowest x2 such that values[x2] repeats an earlier value, with that x1.

    Matches a sequential scan that stops at the first repeated output.
    """
    order = np.argsort(values, kind="stable")
    sv = values[order]
    repeats = order[1:][sv[1:] == sv[:-1]]
    x2 = int(repeats.min())
    x1 = int(np.nonzero(values == values[x2])[0][0])
    return x1, x2


def is_permutation_brute(f: SparsePoly) -> VerificationReport:
    """Exhaustive bijection test; witness is the first colliding input pair."""
    t0 = perf_counter()
    ctx = f.ctx
    values = _values_over_domain(f)
    counts = np.bincount(values, minlength=ctx.order)
    if int(counts.max()) <= 1:
        verdict, witness = True, None
    else:
        verdict, witness = False, _first_collision(values)
    return VerificationReport("brute", verdict, witness, perf_counter() - t0, ctx.field_spec())


def char_sum(g: SparsePoly, gamma: int) -> int:
    """Sum over x of (-1)^Tr(gamma * g(x)); equals 2^n when gamma = 0."""
    ctx = g.ctx
    if not 0 <= gamma < ctx.order:
        raise ValueError(f"gamma 0x{gamma:x} outside GF(2^{ctx.n})")
    scaled = ctx.scalar_mul_vec(gamma, _values_over_domain(g))
    ones = int(ctx.trace_bits()[scaled].sum())
    return ctx.order - 2 * ones


def is_pp_charsum(g: SparsePoly, *, size_cap=None) -> VerificationReport:
    """Character-sum permutation test; witness is the first gamma that fails."""
    ctx = g.ctx
    _require_within_cap(ctx, size_cap, "charsum")
    t0 = perf_counter()
    values = _values_over_domain(g)
    tb = ctx.trace_bits()
    verdict, witness = True, None
    for gamma in range(1, ctx.order):
        ones = int(tb[ctx.scalar_mul_vec(gamma, values)].sum())
        if ctx.order != 2 * ones:
            verdict, witness = False, gamma
            break
    return VerificationReport("charsum", verdict, witness, perf_counter() - t0, ctx.field_spec())


def _pivot_and_rest(f: SparsePoly):
    """Split f into a monic pivot exponent (coprime to 2^n - 1) and the rest.

    Dividing by the pivot coefficient does not change whether f permutes.
    """
    ctx = f.ctx
    pivot = next(
        (i for i, (_, e) in enumerate(f.terms) if gcd(e, ctx.mult_order) == 1), None
    )
    if pivot is None:
        raise ValueError(
            "delta criterion needs a term with exponent coprime to 2^n - 1; "
            f"none found in {f.to_spec()!r}"
        )
    c1, d1 = f.terms[pivot]
    rest = [t for i, t in enumerate(f.terms) if i != pivot]
    if c1 != 1:
        ic = ctx.inv(c1)
        rest = [(ctx.mul(c, ic), e) for c, e in rest]
    return d1, rest


def is_pp_delta_criterion(
    f: SparsePoly, *, force_direct: bool = False, size_cap=None, circle: UnitCircle = None
) -> VerificationReport:
    """Delta-criterion permutation test; witness is the first delta that fails.

    When every exponent is congruent to the pivot mod 2^m - 1 the per-delta
    character sum is evaluated on the unit circle (engine "niho", cost about
    2^n * 2^m); otherwise, or under ``force_direct``, each sum is taken over
    the whole field (engine "delta_criterion", cost 2^(2n), size-capped).
    """
    t0 = perf_counter()
    ctx = f.ctx
    d1, rest = _pivot_and_rest(f)
    step = 2**ctx.m - 1
    use_circle = not force_direct and all((e - d1) % step == 0 for _, e in rest)
    if not use_circle:
        _require_within_cap(ctx, size_cap, "delta_criterion")

    # delta^(d1 - d_i) for every delta at once, one table per non-pivot term
    shifts = [
        ctx.pow_vec(ctx.domain(), (d1 - e) % ctx.mult_order) for _, e in rest
    ]
    coeffs = [c for c, _ in rest]

    if use_circle:
        engine = "niho"
        circle = circle or build_unit_circle(ctx)
        points = np.array(circle.elements, dtype=np.uint32)
        member = ctx.subfield_mask()
    else:
        engine = "delta_criterion"
        points = ctx.domain()
        tb = ctx.trace_bits()
    base = ctx.pow_vec(points, d1)
    parts = [ctx.pow_vec(points, e) for _, e in rest]

    verdict, witness = True, None
    if not rest:
        deltas = [1]  # all deltas give the same sum for a monomial
    else:
        deltas = range(1, ctx.order)
    for delta in deltas:
        h = base.copy()
        for c, shift, part in zip(coeffs, shifts, parts):
            h ^= ctx.scalar_mul_vec(ctx.mul(c, int(shift[delta])), part)
        if use_circle:
            ok = int(member[h].sum()) == 1
        else:
            ok = int(tb[h].sum()) * 2 == ctx.order
        if not ok:
            verdict, witness = False, delta
            break
    return VerificationReport(engine, verdict, witness, perf_counter() - t0, ctx.field_spec())


def _check_niho_shape(ctx: FieldCtx, d_list, w_list):
    if len(d_list) < 1:
        raise ValueError("need at least the leading exponent d1")
    if len(w_list) != len(d_list) - 1:
        raise ValueError(
            f"need one coefficient per trailing exponent: got {len(w_list)} "
            f"for {len(d_list) - 1}"
        )
    ds = [canonical_exponent(d, ctx.n) for d in d_list]
    step = 2**ctx.m - 1
    if any((d - ds[0]) % step != 0 for d in ds[1:]):
        raise ValueError(f"exponents {ds} are not all congruent mod 2^m - 1 = {step}")
    if gcd(ds[0], ctx.mult_order) != 1:
        raise ValueError(f"gcd(d1={ds[0]}, 2^n - 1) != 1")
    for w in w_list:
        if not 0 <= w < ctx.order:
            raise ValueError(f"coefficient 0x{w:x} outside GF(2^{ctx.n})")
    return ds


def count_unit_circle_solutions(ctx: FieldCtx, d_list, w_list, circle: UnitCircle = None) -> int:
    """N = #{lam on the unit circle : lam^d1 + sum w_i lam^d_i lies in GF(2^m)}.

    Defined for exponents all congruent mod 2^m - 1 with gcd(d1, 2^n - 1) = 1.
    """
    ds = _check_niho_shape(ctx, d_list, w_list)
    circle = circle or build_unit_circle(ctx)
    points = np.array(circle.elements, dtype=np.uint32)
    h = ctx.pow_vec(points, ds[0])
    for w, d in zip(w_list, ds[1:]):
        h ^= ctx.scalar_mul_vec(w, ctx.pow_vec(points, d))
    return int(ctx.subfield_mask()[h].sum())


def exp_sum_via_niho(ctx: FieldCtx, d_list, w_list, circle: UnitCircle = None) -> int:
    """The character sum of x^d1 + sum w_i x^d_i, as (N - 1) * 2^m.

    N is :func:`count_unit_circle_solutions`; the collapse from 2^n summands
    to a circle count is what makes Niho exponents tractable.
    """
    n_sol = count_unit_circle_solutions(ctx, d_list, w_list, circle)
    return (n_sol - 1) << ctx.m


@lru_cache(maxsize=128)
def _circle_tables(circle: UnitCircle, d1: int, d2: int):
    """Per-(circle, d1, d2) powers lam^d1, lam^d2, lam^(d1+d2) and a shared
    verdict cache for already-examined w values."""
    ctx = circle.ctx
    a = [ctx.pow(lam, d1) for lam in circle.elements]
    b = [ctx.pow(lam, d2) for lam in circle.elements]
    c = [ctx.mul(x, y) for x, y in zip(a, b)]
    return a, b, c, {}


def _unique_solution_at_w(circle: UnitCircle, w: int, tables, inv_exp: int) -> bool:
    """Check the factorized equation w*lam^d2 = lam^d1 or w*lam^(d1+d2) = 1.

    True iff the first factor has no root on the circle and the second has
    exactly one, located at w^(-inv_exp).
    """
    ctx = circle.ctx
    a, b, c, _ = tables
    for ai, bi in zip(a, b):
        if ctx.mul(w, bi) == ai:
            return False
    roots = [i for i, ci in enumerate(c) if ctx.mul(w, ci) == 1]
    if len(roots) != 1:
        return False
    expected = ctx.pow(w, circle.order - inv_exp)
    return circle.elements[roots[0]] == expected


def unique_solution_check(
    params: NihoParams, u: int, ctx: FieldCtx = None, circle: UnitCircle = None
) -> VerificationReport:
    """Verify x^d1 + u*x^d2 permutes by the unit-circle unique-root argument.

    For every delta != 0 the delta-criterion instance has coefficient
    w = u * delta^(d1 - d2), which stays on the unit circle; the instance
    passes iff lam = w^(-1/(d1 + d2)) is the only circle root of
    w*lam^d1 + lam^(-d2)... equivalently of the factorization
    (w*lam^d2 + lam^d1) * (w*lam^(d1+d2) + 1).  Witness on failure is the
    smallest power of the primitive element whose delta fails.

    Preconditions: gcd(d1, 2^n - 1) = 1, r = gcd(l, 2^m + 1) > 1,
    gcd(e + l - 2s, 2^m + 1) = 1, and u on the circle but not an r-th power.
    """
    t0 = perf_counter()
    if ctx is None:
        ctx = field_new(params.n)
    elif ctx.n != params.n:
        raise ValueError(f"field degree {ctx.n} does not match params n={params.n}")
    circle = circle or build_unit_circle(ctx)
    m_ord = circle.order  # 2^m + 1
    if not params.gcd_d1_one:
        raise ValueError(f"gcd(d1, 2^n - 1) != 1 for d1={params.d1}")
    r = gcd(params.l, m_ord)
    if r <= 1:
        raise ValueError(f"condition (i) fails: gcd(l={params.l}, 2^m + 1) = 1")
    if gcd(params.e + params.l - 2 * params.s, m_ord) != 1:
        raise ValueError("condition (ii) fails: gcd(e + l - 2s, 2^m + 1) > 1")
    iu = circle.index.get(u)
    if iu is None:
        raise ValueError(f"u = 0x{u:x} is not on the unit circle")
    if ctx.pow(u, m_ord // r) == 1:
        raise ValueError(f"u = 0x{u:x} is an r-th power on the circle (r = {r})")

    tables = _circle_tables(circle, params.d1, params.d2)
    w_ok = tables[3]
    inv_exp = pow(params.d1 + params.d2, -1, m_ord)  # exists by condition (ii)
    l_mod = params.l % m_ord

    # As delta runs over powers of the primitive element, w = u*delta^(d1-d2)
    # walks the coset u*U^r with index step gcd(l, 2^m + 1) = r, so checking
    # each coset member once covers every delta; the earliest failing delta
    # is recovered from the failing member's position in the walk.
    bad_j = None
    for t in range(m_ord // r):
        widx = (iu + t * r) % m_ord
        ok = w_ok.get(widx)
        if ok is None:
            ok = _unique_solution_at_w(circle, circle.elements[widx], tables, inv_exp)
            w_ok[widx] = ok
        if not ok:
            # smallest j >= 0 with j*l = t*r (mod 2^m + 1), i.e. delta = alpha^j
            # hits this coset member first
            j = t * pow(l_mod // r, -1, m_ord // r) % (m_ord // r) if l_mod else 0
            bad_j = j if bad_j is None else min(bad_j, j)
    if bad_j is None:
        verdict, witness = True, None
    else:
        verdict, witness = False, ctx.pow(ctx.primitive, bad_j)
    return VerificationReport("niho", verdict, witness, perf_counter() - t0, ctx.field_spec())


def is_cpp(f: SparsePoly) -> VerificationReport:
    """Complete-permutation test: both f and f + x must permute (brute force)."""
    t0 = perf_counter()
    first = is_permutation_brute(f)
    if not first.verdict:
        return VerificationReport(
            "brute", False, first.witness, perf_counter() - t0, f.ctx.field_spec()
        )
    second = is_permutation_brute(f.plus_x())
    return VerificationReport(
        "brute", second.verdict, second.witness, perf_counter() - t0, f.ctx.field_spec()
    )
