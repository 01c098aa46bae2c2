"""Monomial complete permutation polynomials u^(-1) * x^d.

A complete permutation polynomial (CPP) permutes the field and so does
f(x) + x.  Taking l = s and e = 1 in the binomial construction makes
x^d1 + u*x a permutation for every non-r-th-power u on the unit circle,
which is exactly the statement that u^(-1) * x^d1 is a CPP.  Six closed-form
choices of s come with their r precomputed.
"""

from nihoperm import (
    check_prop3,
    cpp_class_params,
    field_new,
    gen_cpp_class,
    gen_cpp_cor2,
    is_cpp,
    make_niho,
)

# the l = s specialization: d1 = s*(2^m - 1) + 1
m, s = 3, 6
cond = check_prop3(m, s)
d1 = make_niho(m, s, s, 1).d1
print(f"m={m}, s={s}: d1 = {d1}, r = {cond.r}, conditions ok = {cond.all_ok}")

insts = gen_cpp_cor2(m, s)
print(f"{len(insts)} monomial CPPs over GF(2^{2 * m}):")
for inst in insts:
    rep = is_cpp(inst.poly)
    print(f"  u = 0x{inst.u:x}: {inst.poly.to_spec():<8} is_cpp = {rep.verdict}")

# the closed-form classes package the same thing per (class, m[, k])
print("\nclosed-form classes at m = 3:")
for cls, k in ((1, 1), (3, None), (4, None), (5, None), (6, None)):
    s, r = cpp_class_params(cls, m, k)
    count = len(gen_cpp_class(cls, m, k))
    label = f"class {cls}" + (f" (k={k})" if k is not None else "")
    print(f"  {label}: s = {s}, r = {r}, instances = {count}")

# class 2 wants even m; it is the only class reachable there
insts = gen_cpp_class(2, 4, 4)
print(f"\nclass 2 at m=4, k=4: {len(insts)} CPPs over GF(2^8), "
      f"all verified: {all(is_cpp(i.poly).verdict for i in insts)}")

# class 3 (s = 6) carries a divisibility caveat on m
try:
    cpp_class_params(3, 5)
except ValueError as exc:
    print(f"class 3 at m=5 rejected: {exc}")
