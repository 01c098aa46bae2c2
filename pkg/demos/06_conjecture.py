"""Two trinomial shapes that appear to permute GF(2^(2m)) for every odd m.

    f(x) = x^(2^m + 4) + x^(2^(m+1) + 3) + x^(2^(m+2) + 1)
    g(x) = x^(2^m)     + x^(2^(m+1) - 1) + x^(2^(2m) - 2^m + 1)

No proof is known; this script reproduces the exhaustive verification for
m = 3, 5, 7, 9 (fields up to 2^18 elements) and shows how far the witnesses
machinery gets when a shape is perturbed.
"""

from time import perf_counter

from nihoperm import (
    SparsePoly,
    conjecture_trinomials,
    field_new,
    is_permutation_brute,
)

for m in (3, 5, 7, 9):
    ctx = field_new(2 * m)
    f, g = conjecture_trinomials(m, ctx)
    t0 = perf_counter()
    rep_f = is_permutation_brute(f)
    rep_g = is_permutation_brute(g)
    dt = perf_counter() - t0
    print(f"m={m} (GF(2^{2 * m}), {ctx.order} points, {dt * 1000:.0f} ms)")
    print(f"  f exponents {f.exponents()}: PP = {rep_f.verdict}")
    print(f"  g exponents {g.exponents()}: PP = {rep_g.verdict}")

# nudging one exponent breaks the pattern immediately
ctx = field_new(6)
f, _ = conjecture_trinomials(3, ctx)
coeffs = [(c, e) for c, e in f.terms]
coeffs[0] = (coeffs[0][0], coeffs[0][1] + 1)
broken = SparsePoly.make(ctx, coeffs)
rep = is_permutation_brute(broken)
print(f"\nperturbed {broken.to_spec()}: PP = {rep.verdict}, "
      f"witness = {rep.witness_hex()}")

# even m is structurally excluded (the shapes need m odd)
try:
    conjecture_trinomials(4)
except ValueError as exc:
    print(f"m = 4 rejected: {exc}")
