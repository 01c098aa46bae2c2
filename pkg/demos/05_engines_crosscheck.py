"""Three ways to decide "does f permute GF(2^n)?", cross-checked.

* brute:    evaluate everywhere, look for a collision (the ground truth);
* charsum:  all nontrivial additive character sums must vanish;
* delta:    one character sum per delta after normalizing by a pivot
            exponent -- collapsing to the unit circle when the exponents
            are congruent mod 2^m - 1.

On failure each engine returns a witness in its own language: a colliding
input pair, a bad gamma, or a bad delta.
"""

import random

from nihoperm import (
    SparsePoly,
    char_sum,
    field_new,
    is_permutation_brute,
    is_pp_charsum,
    is_pp_delta_criterion,
)

ctx = field_new(6)
rng = random.Random(12)

print("random sparse polynomials over GF(2^6), three verdicts each:")
print(f"{'poly':<18} {'brute':<6} {'charsum':<8} {'delta':<6} witnesses")
for _ in range(8):
    exps = rng.sample(range(1, ctx.mult_order + 1), rng.randint(1, 3))
    f = SparsePoly.make(ctx, [(rng.randint(1, ctx.order - 1), e) for e in exps])
    b = is_permutation_brute(f)
    c = is_pp_charsum(f)
    try:
        d = is_pp_delta_criterion(f)
        d_txt, d_wit = str(d.verdict), d.witness_hex()
    except ValueError:
        d_txt, d_wit = "n/a", None  # no exponent coprime to 2^n - 1
    wits = [w for w in (b.witness_hex(), c.witness_hex(), d_wit) if w]
    print(f"{f.to_spec():<18} {str(b.verdict):<6} {str(c.verdict):<8} "
          f"{d_txt:<6} {' '.join(wits)}")
    assert c.verdict == b.verdict

# witnesses are checkable, not just decorative: a failing gamma really does
# give a non-vanishing character sum
f = SparsePoly.make(ctx, [(1, 9)])  # gcd(9, 63) = 9, not a permutation
rep = is_pp_charsum(f)
gamma = rep.witness
print(f"\n{f.to_spec()} fails; first bad gamma = 0x{gamma:x}, "
      f"char sum there = {char_sum(f, gamma)} (zero everywhere before it)")
assert all(char_sum(f, g) == 0 for g in range(1, gamma))

# the brute witness is the first colliding pair in scan order
rep = is_permutation_brute(f)
x1, x2 = rep.witness
print(f"brute witness: f(0x{x1:x}) = f(0x{x2:x}) = 0x{f.eval(x1):x}")

# the delta engine runs on the unit circle (2^m + 1 points instead of 2^n)
# whenever the exponents allow it, and reports which path it took
g = SparsePoly.make(ctx, [(1, 10), (0x15, 52)])
fast = is_pp_delta_criterion(g)
slow = is_pp_delta_criterion(g, force_direct=True)
print(f"\n{g.to_spec()}: circle path engine={fast.engine}, "
      f"direct path engine={slow.engine}, same verdict: "
      f"{fast.verdict == slow.verdict}")
