"""A quick tour of GF(2^n) arithmetic with plain-integer field elements.

Elements are ints whose bits are coordinates in the polynomial basis, so 0x2c
is x^5 + x^3 + x^2.  Addition is XOR; everything else comes from the field
context, which carries a pinned irreducible modulus per degree.
"""

from nihoperm import field_new

ctx = field_new(6)
print(f"field: GF(2^{ctx.n}), modulus 0x{ctx.irreducible:x}, "
      f"primitive element 0x{ctx.primitive:x}")

# addition is XOR, multiplication reduces modulo the pinned polynomial
a, b = 0x2C, 0x1B
print(f"a = 0x{a:x}, b = 0x{b:x}")
print(f"a + b   = 0x{a ^ b:x}")
print(f"a * b   = 0x{ctx.mul(a, b):x}")
print(f"a^-1    = 0x{ctx.inv(a):x}, check a * a^-1 = 0x{ctx.mul(a, ctx.inv(a)):x}")
print(f"a^62    = 0x{ctx.pow(a, 62):x}  (exponents reduce mod 2^n - 1 = {ctx.mult_order})")

# the multiplicative group is cyclic of order 63; the primitive element runs it
alpha = ctx.primitive
seen = {1}
x = alpha
while x != 1:
    seen.add(x)
    x = ctx.mul(x, alpha)
print(f"powers of 0x{alpha:x} cover {len(seen)} of {ctx.order - 1} nonzero elements")

# the absolute trace is F_2-linear and balanced: half zeros, half ones
ones = sum(ctx.trace(x) for x in range(ctx.order))
print(f"trace takes value 1 on {ones}/{ctx.order} elements")

# trace onto the subfield GF(2^m): t = x + x^(2^m) always lands in GF(2^m)
m = ctx.m
in_subfield = all(
    ctx.pow(t, 2**m - 1) in (0, 1)
    for t in (ctx.trace(x, sub_m=m) for x in range(ctx.order))
)
print(f"relative trace onto GF(2^{m}) stays in the subfield: {in_subfield}")

# the same operations exist as numpy kernels over the whole domain at once
xs = ctx.domain()
squares = ctx.sqr_vec(xs)
cubes = ctx.mul_vec(squares, xs)
print(f"x^3 vectorized over all {len(xs)} points; x=5 gives 0x{int(cubes[5]):x}, "
      f"scalar check 0x{ctx.pow(5, 3):x}")

# sparse polynomials canonicalize terms and evaluate anywhere
from nihoperm import SparsePoly

f = SparsePoly.make(ctx, [(1, 10), (0x2C, 52)])
print(f"f = {f.to_spec()} (coeff hex : exponent decimal), f(0x3) = 0x{f.eval(3):x}")
