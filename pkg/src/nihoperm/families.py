"""Constructive families of permutation binomials and monomial CPPs.

Each generator turns a validated parameter tuple into concrete polynomial
instances over GF(2^n), n = 2m:

* theorem-1 binomials   x^d1 + u*x^d2 with d1 = s*(2^m-1)+e,
  d2 = (s-l)*(2^m-1)+e, gcd(d1, 2^n-1) = 1, r = gcd(l, 2^m+1) > 1,
  gcd(e+l-2s, 2^m+1) = 1, and u ranging over the non-r-th-powers of the
  unit circle;
* six explicit parameter cases (``prop1_params``) hitting those conditions
  with r = 3, driven by powers of two k1, k2, k3;
* the l = s, e = 1 specialization (``check_prop3``/``gen_prop3``) whose
  binomials are x^d1 + u*x, and its complete-permutation corollary
  u^(-1)*x^d1 (``gen_cpp_cor2``);
* six closed-form CPP classes (``cpp_class_params``) giving s directly;
* two trinomial shapes conjectured to permute for every odd m
  (``conjecture_trinomials``).

``scan_families`` sweeps parameter ranges, generates every instance, verifies
each claim by brute force, and reports (instance, report) pairs; identical
polynomials arising from different parameter tuples are verified once but
reported once per provenance.
"""

from __future__ import annotations

import csv
import json
import random
import zlib
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .exponents import NihoParams, make_niho
from .gf2n import FieldCtx, SparsePoly, field_new
from .spectra import VerificationReport, is_cpp, is_permutation_brute
from .unit_circle import UnitCircle, build_unit_circle, complement_coset

PP = "PP"
CPP = "CPP"

FAMILY_GROUPS = ("thm1", "prop1", "prop3", "cor2", "cpp-class", "conj")


@dataclass(frozen=True)
class Theorem1Conditions:
    """The three sufficient conditions for x^d1 + u*x^d2 to permute."""

    gcd_d1_ok: bool
    r: int
    r_ok: bool
    cond_ii_ok: bool
    eligible_u_count: int

    @property
    def all_ok(self) -> bool:
        return self.gcd_d1_ok and self.r_ok and self.cond_ii_ok


@dataclass(frozen=True)
class FamilyInstance:
    """One concrete polynomial with its construction provenance and claims."""

    family_id: str
    m: int
    poly: SparsePoly
    claims: frozenset
    u: int = None
    niho: NihoParams = None
    k1: int = None
    k2: int = None
    k3: int = None


def check_theorem1(p: NihoParams) -> Theorem1Conditions:
    """Evaluate gcd(d1, 2^n - 1) = 1, r = gcd(l, 2^m + 1) > 1, and
    gcd(e + l - 2s, 2^m + 1) = 1 for an exponent pair."""
    m_ord = 2**p.m + 1
    r = gcd(p.l, m_ord)
    cond_ii = gcd(p.e + p.l - 2 * p.s, m_ord) == 1
    return Theorem1Conditions(
        gcd_d1_ok=p.gcd_d1_one,
        r=r,
        r_ok=r > 1,
        cond_ii_ok=cond_ii,
        eligible_u_count=m_ord - m_ord // r,
    )


def _theorem1_failure(cond: Theorem1Conditions, p: NihoParams, prop3: bool = False) -> str:
    if not cond.gcd_d1_ok:
        return f"gcd(d1,2^n-1)=1 failed (d1={p.d1}, n={p.n})"
    if not cond.r_ok:
        if prop3:
            return f"condition (i) r:=gcd(s,2^m+1)>1 failed (s={p.s}, r={cond.r})"
        return f"condition (i) r:=gcd(l,2^m+1)>1 failed (l={p.l}, r={cond.r})"
    if prop3:
        return f"condition (ii) gcd(s-1,2^m+1)=1 failed (s={p.s})"
    return f"condition (ii) gcd(e+l-2s,2^m+1)=1 failed (e={p.e}, l={p.l}, s={p.s})"


def _field_for(p: NihoParams, ctx: FieldCtx) -> FieldCtx:
    if ctx is None:
        return field_new(p.n)
    if ctx.n != p.n:
        raise ValueError(f"field degree {ctx.n} does not match params n={p.n}")
    return ctx


def gen_theorem1(p: NihoParams, ctx: FieldCtx = None, circle: UnitCircle = None) -> list:
    """All binomials x^d1 + u*x^d2 that the three conditions certify for this pair."""
    cond = check_theorem1(p)
    if not cond.all_ok:
        raise ValueError(_theorem1_failure(cond, p))
    ctx = _field_for(p, ctx)
    circle = circle or build_unit_circle(ctx)
    out = []
    for u in complement_coset(circle, cond.r):
        poly = SparsePoly.make(ctx, [(1, p.d1), (u, p.d2)])
        out.append(
            FamilyInstance("THM1", p.m, poly, frozenset({PP}), u=u, niho=p)
        )
    return out


_CASE_PARITY = {1: 1, 2: 0, 3: 1, 4: 0, 5: 1, 6: 0}


def prop1_params(case: int, m: int, k1: int, k2: int = None, k3: int = None) -> NihoParams:
    """Exponent parameters for the six explicit r = 3 cases.

    Case table (all with odd m and nonnegative k's; parities alternate):
      1: e = 2^k3 + 1,     s = 2^(k3-1) - 2^(k2-1) + 1,  l = 2^k1 + 1
      2: e = 2^k3 + 1,     s = 2^(k3-1) - 2^(k2-1),      l = 2^k1 - 1
      3: e = 2^(k1+1) + 1, s = 2^k1 + 1,                 l = 2^k1 + 1
      4: e = 2^(k1+1) + 1, s = 2^k1,                     l = 2^k1 - 1
      5: e = 2^(k1+1) - 1, s = 2^k1,                     l = 2^k1 + 1
      6: e = 2^(k1+1) - 1, s = 2^k1 - 1,                 l = 2^k1 - 1
    Odd cases need odd k1 (cases 1-2 also matching-parity k2); cases 1-4 need
    gcd(k1, m) = 1, cases 5-6 gcd(k1*(k1+1), m) = 1.  s must come out a
    nonnegative integer (rules out e.g. case 1 with k3 = 0).
    """
    if case not in _CASE_PARITY:
        raise ValueError(f"case must be 1..6, got {case}")
    if m % 2 == 0:
        raise ValueError(f"m must be odd, got {m}")
    if k1 < 0:
        raise ValueError(f"k1 must be nonnegative, got {k1}")
    parity = _CASE_PARITY[case]
    parity_name = "odd" if parity else "even"
    if k1 % 2 != parity:
        raise ValueError(f"case {case} requires {parity_name} k1, got {k1}")
    if case in (1, 2):
        if k2 is None or k3 is None:
            raise ValueError(f"case {case} requires k2 and k3")
        if k2 < 0 or k3 < 0:
            raise ValueError(f"k2 and k3 must be nonnegative, got k2={k2}, k3={k3}")
        if k2 % 2 != parity:
            raise ValueError(f"case {case} requires {parity_name} k2, got {k2}")
        e = 2**k3 + 1
        s = Fraction(2**k3, 2) - Fraction(2**k2, 2) + (1 if case == 1 else 0)
        l = 2**k1 + 1 if case == 1 else 2**k1 - 1
    elif case in (3, 4):
        e = 2 ** (k1 + 1) + 1
        s = Fraction(2**k1 + 1) if case == 3 else Fraction(2**k1)
        l = 2**k1 + 1 if case == 3 else 2**k1 - 1
    else:
        e = 2 ** (k1 + 1) - 1
        s = Fraction(2**k1) if case == 5 else Fraction(2**k1 - 1)
        l = 2**k1 + 1 if case == 5 else 2**k1 - 1
    if case in (1, 2, 3, 4):
        if gcd(k1, m) != 1:
            raise ValueError(f"case {case} requires gcd(k1,m)=1, got gcd({k1},{m})={gcd(k1, m)}")
    else:
        if gcd(k1 * (k1 + 1), m) != 1:
            raise ValueError(
                f"case {case} requires gcd(k1(k1+1),m)=1, got "
                f"gcd({k1 * (k1 + 1)},{m})={gcd(k1 * (k1 + 1), m)}"
            )
    if s.denominator != 1 or s < 0:
        raise ValueError(f"case {case} needs a nonnegative integer s, got {s}")
    params = make_niho(m, int(s), l, e)
    cond = check_theorem1(params)
    if not cond.all_ok or cond.r != 3:
        raise RuntimeError(
            f"case {case} parameters unexpectedly fail the r=3 conditions: {cond}"
        )
    return params


def gen_prop1(
    case: int, m: int, k1: int, k2: int = None, k3: int = None,
    ctx: FieldCtx = None, circle: UnitCircle = None,
) -> list:
    """Binomial instances x^d1 + u*x^d2, u non-cube on the circle, for one case."""
    params = prop1_params(case, m, k1, k2, k3)
    base = gen_theorem1(params, ctx, circle)
    return [
        FamilyInstance(
            f"PROP1_CASE{case}", m, inst.poly, inst.claims,
            u=inst.u, niho=params, k1=k1, k2=k2, k3=k3,
        )
        for inst in base
    ]


def check_prop3(m: int, s: int) -> Theorem1Conditions:
    """Conditions for x^(s*(2^m-1)+1) + u*x: the l = s, e = 1 specialization."""
    return check_theorem1(make_niho(m, s, s, 1))


def gen_prop3(m: int, s: int, ctx: FieldCtx = None, circle: UnitCircle = None) -> list:
    """Binomials x^d1 + u*x with d1 = s*(2^m-1)+1, u a non-r-th-power."""
    params = make_niho(m, s, s, 1)
    cond = check_theorem1(params)
    if not cond.all_ok:
        raise ValueError(_theorem1_failure(cond, params, prop3=True))
    ctx = _field_for(params, ctx)
    circle = circle or build_unit_circle(ctx)
    out = []
    for u in complement_coset(circle, cond.r):
        poly = SparsePoly.make(ctx, [(1, params.d1), (u, 1)])
        out.append(FamilyInstance("PROP3", m, poly, frozenset({PP}), u=u, niho=params))
    return out


def gen_cpp_cor2(m: int, s: int, ctx: FieldCtx = None, circle: UnitCircle = None) -> list:
    """Monomial complete permutations u^(-1)*x^d1 from the same conditions."""
    params = make_niho(m, s, s, 1)
    cond = check_theorem1(params)
    if not cond.all_ok:
        raise ValueError(_theorem1_failure(cond, params, prop3=True))
    ctx = _field_for(params, ctx)
    circle = circle or build_unit_circle(ctx)
    out = []
    for u in complement_coset(circle, cond.r):
        poly = SparsePoly.make(ctx, [(ctx.inv(u), params.d1)])
        out.append(FamilyInstance("COR2_CPP", m, poly, frozenset({CPP}), u=u, niho=params))
    return out


def cpp_class_params(cls: int, m: int, k: int = None) -> tuple:
    """(s, r) for the six closed-form CPP classes; u must avoid U^r.

      1: s = 2^k + 1, m and k odd, r = 2^gcd(m,k) + 1
      2: s = 2^k + 1, m and k even with k/gcd and m/gcd odd, r likewise
      3: s = 6, m odd with 5 not dividing m, r = 3
      4: s = 15, m odd, r = 3
      5: s = 63, m odd, r = 3
      6: s = 2^m - 2, m odd, r = 3
    """
    if cls not in (1, 2, 3, 4, 5, 6):
        raise ValueError(f"class must be 1..6, got {cls}")
    if cls == 1:
        if k is None:
            raise ValueError("class 1 requires k")
        if m % 2 == 0 or k % 2 == 0:
            raise ValueError(f"class 1 requires odd m and k, got m={m}, k={k}")
        t = gcd(m, k)
        s, r = 2**k + 1, 2**t + 1
    elif cls == 2:
        if k is None:
            raise ValueError("class 2 requires k")
        if m % 2 == 1 or k % 2 == 1 or k < 2:
            raise ValueError(f"class 2 requires even m and even k >= 2, got m={m}, k={k}")
        t = gcd(m, k)
        if (k // t) % 2 == 0 or (m // t) % 2 == 0:
            raise ValueError(
                f"class 2 requires k/gcd(m,k) and m/gcd(m,k) odd, got k={k}, m={m}"
            )
        s, r = 2**k + 1, 2**t + 1
    else:
        if m % 2 == 0:
            raise ValueError(f"class {cls} requires odd m, got {m}")
        if cls == 3 and m % 5 == 0:
            raise ValueError(f"class 3 requires 5 ∤ m, got m={m}")
        s = {3: 6, 4: 15, 5: 63, 6: 2**m - 2}[cls]
        r = 3
    cond = check_prop3(m, s)
    if not cond.all_ok:
        raise RuntimeError(f"class {cls} parameters unexpectedly fail conditions: {cond}")
    return s, r


def gen_cpp_class(
    cls: int, m: int, k: int = None, ctx: FieldCtx = None, circle: UnitCircle = None
) -> list:
    """Monomial CPP instances u^(-1)*x^d1 for one closed-form class."""
    s, r = cpp_class_params(cls, m, k)
    params = make_niho(m, s, s, 1)
    ctx = _field_for(params, ctx)
    circle = circle or build_unit_circle(ctx)
    out = []
    for u in complement_coset(circle, r):
        poly = SparsePoly.make(ctx, [(ctx.inv(u), params.d1)])
        out.append(
            FamilyInstance(f"CPP_CLASS{cls}", m, poly, frozenset({CPP}), u=u, niho=params, k1=k)
        )
    return out


def conjecture_trinomials(m: int, ctx: FieldCtx = None) -> tuple:
    """The two trinomials conjectured to permute GF(2^(2m)) for every odd m."""
    if m % 2 == 0 or m < 3:
        raise ValueError(f"m must be odd and >= 3, got {m}")
    if ctx is None:
        ctx = field_new(2 * m)
    elif ctx.n != 2 * m:
        raise ValueError(f"field degree {ctx.n} does not match n={2 * m}")
    f = SparsePoly.make(
        ctx, [(1, 2**m + 4), (1, 2 ** (m + 1) + 3), (1, 2 ** (m + 2) + 1)]
    )
    g = SparsePoly.make(
        ctx, [(1, 2**m), (1, 2 ** (m + 1) - 1), (1, 2 ** (2 * m) - 2**m + 1)]
    )
    return f, g


def gen_conjecture(m: int, ctx: FieldCtx = None) -> list:
    f, g = conjecture_trinomials(m, ctx)
    return [
        FamilyInstance("CONJ_F", m, f, frozenset({PP})),
        FamilyInstance("CONJ_G", m, g, frozenset({PP})),
    ]


# -- parameter sweeps ------------------------------------------------------


def _thm1_sweep(m, s_range, l_range, e_range):
    out = []
    for s in range(s_range[0], s_range[1] + 1):
        for l in range(l_range[0], l_range[1] + 1):
            for e in range(max(e_range[0], 1), e_range[1] + 1):
                p = make_niho(m, s, l, e)
                if check_theorem1(p).all_ok:
                    out.append(p)
    return out


def _prop1_sweep(m, k_max):
    out = []
    ks = range(k_max + 1)
    for case in (1, 2):
        for k1, k2, k3 in product(ks, repeat=3):
            try:
                out.append((case, k1, k2, k3, prop1_params(case, m, k1, k2, k3)))
            except ValueError:
                continue
    for case in (3, 4, 5, 6):
        for k1 in ks:
            try:
                out.append((case, k1, None, None, prop1_params(case, m, k1)))
            except ValueError:
                continue
    return out


def _prop3_sweep(m, s_range):
    return [s for s in range(s_range[0], s_range[1] + 1) if check_prop3(m, s).all_ok]


def _cpp_class_sweep(m, k_max):
    out = []
    for cls in (1, 2):
        for k in range(k_max + 1):
            try:
                cpp_class_params(cls, m, k)
                out.append((cls, k))
            except ValueError:
                continue
    for cls in (3, 4, 5, 6):
        try:
            cpp_class_params(cls, m)
            out.append((cls, None))
        except ValueError:
            continue
    return out


def _sample_tuples(tuples, group, m, budget, seed):
    """Deterministically subsample beyond the budget (m = 3 stays exhaustive)."""
    if budget is None or m <= 3 or len(tuples) <= budget:
        return tuples
    rng = random.Random(seed * 1000003 + zlib.crc32(f"{group}:{m}".encode()))
    keep = sorted(rng.sample(range(len(tuples)), budget))
    return [tuples[i] for i in keep]


def scan_families(
    m_range,
    budget: int = None,
    *,
    families=None,
    s_range=(0, 9),
    l_range=(0, 9),
    e_range=(0, 9),
    k_max: int = 6,
    seed: int = 0,
) -> list:
    """Generate and brute-force-verify every family instance in range.

    Returns (FamilyInstance, VerificationReport) pairs in canonical order:
    m as given, then family group, then parameter order.  Polynomials that
    coincide after canonicalization are verified once; every parameter
    provenance still gets its own row.  A False verdict anywhere falsifies
    a construction's claim and is surfaced by the callers.
    """
    groups = FAMILY_GROUPS if families is None else tuple(families)
    for g in groups:
        if g not in FAMILY_GROUPS:
            raise ValueError(f"unknown family group {g!r}: pick from {FAMILY_GROUPS}")
    records = []
    for m in m_range:
        ctx = field_new(2 * m)
        circle = build_unit_circle(ctx)
        cache = {}

        def verified(inst):
            wants_cpp = CPP in inst.claims
            key = (inst.poly.terms, wants_cpp)
            rep = cache.get(key)
            if rep is None:
                rep = is_cpp(inst.poly) if wants_cpp else is_permutation_brute(inst.poly)
                cache[key] = rep
            return inst, rep

        if "thm1" in groups:
            tuples = _sample_tuples(_thm1_sweep(m, s_range, l_range, e_range),
                                    "thm1", m, budget, seed)
            for p in tuples:
                records.extend(verified(i) for i in gen_theorem1(p, ctx, circle))
        if "prop1" in groups and m % 2 == 1:
            tuples = _sample_tuples(_prop1_sweep(m, k_max), "prop1", m, budget, seed)
            for case, k1, k2, k3, _ in tuples:
                records.extend(
                    verified(i) for i in gen_prop1(case, m, k1, k2, k3, ctx, circle)
                )
        if "prop3" in groups:
            tuples = _sample_tuples(_prop3_sweep(m, s_range), "prop3", m, budget, seed)
            for s in tuples:
                records.extend(verified(i) for i in gen_prop3(m, s, ctx, circle))
        if "cor2" in groups:
            tuples = _sample_tuples(_prop3_sweep(m, s_range), "cor2", m, budget, seed)
            for s in tuples:
                records.extend(verified(i) for i in gen_cpp_cor2(m, s, ctx, circle))
        if "cpp-class" in groups:
            tuples = _sample_tuples(_cpp_class_sweep(m, k_max), "cpp-class", m, budget, seed)
            for cls, k in tuples:
                records.extend(verified(i) for i in gen_cpp_class(cls, m, k, ctx, circle))
        if "conj" in groups and m % 2 == 1 and m >= 3:
            records.extend(verified(i) for i in gen_conjecture(m, ctx))
    return records


# -- serialization ----------------------------------------------------------

CSV_COLUMNS = [
    "family_id", "m", "s", "l", "e", "k1", "k2", "k3",
    "u_hex", "d1", "d2", "claim", "verdict", "elapsed_ms",
]


def _claim_str(claims) -> str:
    return "+".join(c for c in (PP, CPP) if c in claims)


def _blank_if_none(v):
    return "" if v is None else v


def csv_rows_header() -> list:
    return list(CSV_COLUMNS)


def instance_row(inst: FamilyInstance, rep: VerificationReport = None,
                 timing: bool = False) -> list:
    """One CSV row; verdict and elapsed stay blank without a report/timing."""
    p = inst.niho
    return [
        inst.family_id,
        inst.m,
        _blank_if_none(p.s if p else None),
        _blank_if_none(p.l if p else None),
        _blank_if_none(p.e if p else None),
        _blank_if_none(inst.k1),
        _blank_if_none(inst.k2),
        _blank_if_none(inst.k3),
        f"0x{inst.u:x}" if inst.u is not None else "",
        _blank_if_none(p.d1 if p else None),
        _blank_if_none(p.d2 if p else None),
        _claim_str(inst.claims),
        ("true" if rep.verdict else "false") if rep is not None else "",
        f"{rep.elapsed * 1000:.3f}" if rep is not None and timing else "",
    ]


def instance_to_obj(inst: FamilyInstance) -> dict:
    """JSON-ready provenance for one instance (report attached by callers)."""
    p = inst.niho
    return {
        "family_id": inst.family_id,
        "m": inst.m,
        "params": (
            {"s": p.s, "l": p.l, "e": p.e, "d1": p.d1, "d2": p.d2} if p else None
        ),
        "k1": inst.k1,
        "k2": inst.k2,
        "k3": inst.k3,
        "u": f"0x{inst.u:x}" if inst.u is not None else None,
        "poly": inst.poly.to_spec(),
        "claims": [c for c in (PP, CPP) if c in inst.claims],
    }


def scan_to_csv(records, stream, timing: bool = False) -> None:
    """Write scan records as CSV; elapsed_ms stays blank unless timing is on."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for inst, rep in records:
        writer.writerow(instance_row(inst, rep, timing=timing))


def scan_to_jsonl(records, stream, timing: bool = False) -> None:
    """One JSON object per record, embedding the full verification report."""
    for inst, rep in records:
        obj = instance_to_obj(inst)
        obj["report"] = rep.to_json(timing=timing)
        stream.write(json.dumps(obj) + "\n")
