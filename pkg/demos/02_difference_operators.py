"""Difference operators and the monomial degree pattern they follow.

The difference of x^n drops to degree p^s * (m - 1) where n = p^s * m with
m coprime to p; in particular differences of p-th-power monomials are
constant.  The nonzero coefficients come from base-p digit domination.
"""

from planarlab import (
    Poly,
    delta,
    double_delta,
    make_field,
    nonzero_support,
    predicted_delta_degree,
    preimage_degrees,
)

f25 = make_field(5, 2)

print("degree of the difference of x^n over GF(25), shift a = 1:")
print(" n   predicted   actual")
for n in range(1, 16):
    d = delta(Poly.monomial(f25, n), 1)
    got = d.degree() if d.degree() is not None else "-inf"
    print(f"{n:>2}   {predicted_delta_degree(n, 5):>9}   {got}")

print()
print("x^5 and x^25 are additive, so their differences are constants:")
for n in (5, 25):
    print(f"  delta(x^{n}, a=7) =", delta(Poly.monomial(f25, n), 7))

print()
print("which monomial degrees can produce a difference of degree 5*l?")
for s, l in [(0, 2), (1, 1), (1, 2)]:
    print(f"  s={s}, l={l}: degrees {sorted(preimage_degrees(s, l, 5))}")

print()
print("digit domination drives the expansion: binom(n, k) != 0 mod 5 for")
for n in (25, 26, 27):
    print(f"  n={n}: k in {sorted(nonzero_support(n, 5))}")

print()
f3 = make_field(3)
print("over GF(3) the second difference at shifts (1, 1) always satisfies")
print("DD(0) = DD(1), so it is never a bijection; e.g. for x^2 + 2*x:")
dd = double_delta(Poly(f3, {2: 1, 1: 2}), 1, 1)
print("  DD =", dd, "->", [dd(x).enc for x in range(3)])
