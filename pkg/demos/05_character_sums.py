"""Exact character-sum magnitudes: the square root shows up only for planar
exponent polynomials, and the arithmetic never touches floating point."""

from planarlab import Poly, char_sum, mag_sq, make_field, parse_poly

f5 = make_field(5)

for text in ["x^2", "x", "x^3", "0"]:
    f = parse_poly(text, f5)
    vec = char_sum(f5, f)
    res = mag_sq(vec)
    value = res.value if res.is_rational_integer else f"not integral, d={res.autocorrelation}"
    print(f"f = {text!s:<4} counts {vec.counts}  |S|^2 = {value}")

print()
print("planar exponents give |S|^2 = q on every field:")
for p, r in [(3, 1), (3, 2), (5, 2), (7, 2), (11, 1)]:
    field = make_field(p, r)
    res = mag_sq(char_sum(field, Poly.monomial(field, 2)))
    print(f"  GF({field.q}): |S|^2 = {res.value} (q = {field.q})")

print()
print("the counts vector lives in Z[w]; the squared magnitude is the integer")
print("d_0 - d_1 whenever the autocorrelation tail d_1..d_{p-1} is constant:")
vec = char_sum(f5, parse_poly("x^2", f5))
res = mag_sq(vec)
print(f"  counts {vec.counts} -> d = {res.autocorrelation} -> {res.value}")
