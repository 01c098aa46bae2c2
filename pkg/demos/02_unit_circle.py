"""The unit circle of GF(2^(2m)): the subgroup of (2^m + 1)-st roots of unity.

Every nonzero x factors uniquely as x = lambda * y with lambda on the circle
and y in the subfield GF(2^m)*; this "polar" view is what turns permutation
questions about Niho-type exponents into counting problems on 2^m + 1 points.
"""

from nihoperm import (
    build_unit_circle,
    complement_coset,
    field_new,
    polar_decompose,
    power_subgroup,
)

ctx = field_new(8)
m = ctx.m
circle = build_unit_circle(ctx)
print(f"GF(2^{ctx.n}): unit circle has {circle.order} elements (2^{m} + 1)")
print("first few:", ", ".join(f"0x{u:x}" for u in circle.elements[:6]), "...")

# membership is just lambda^(2^m + 1) == 1
u = circle.elements[5]
print(f"0x{u:x} on circle: {u in circle}, "
      f"0x{u:x}^{2**m + 1} = 0x{ctx.pow(u, 2**m + 1):x}")

# polar decomposition: reassemble every nonzero element exactly once
pairs = {polar_decompose(ctx, x) for x in range(1, ctx.order)}
print(f"polar decomposition hits {len(pairs)} distinct (lambda, y) pairs "
      f"for {ctx.order - 1} nonzero elements")
lam, y = polar_decompose(ctx, 0xA7)
print(f"0xa7 = lambda * y with lambda = 0x{lam:x} (on circle), y = 0x{y:x} "
      f"(in GF(2^{m})*): recombined 0x{ctx.mul(lam, y):x}")

# r-th powers form a subgroup; its complement is where the binomial
# coefficients u must live
r = 17  # 2^4 + 1 divides the circle order here
cubes = power_subgroup(circle, r)
rest = complement_coset(circle, r)
print(f"r = {r}: |U^r| = {len(cubes)}, |U \\ U^r| = {len(rest)}, "
      f"disjoint: {set(cubes).isdisjoint(rest)}")

# on a field with odd m the classical choice is r = 3
ctx6 = field_new(6)
circle6 = build_unit_circle(ctx6)
noncubes = complement_coset(circle6, 3)
print(f"GF(2^6): circle order {circle6.order}, non-cubes on the circle: "
      + ", ".join(f"0x{u:x}" for u in noncubes))
