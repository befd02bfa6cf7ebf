"""Tour of GF(p^r) arithmetic: canonical moduli, encodings, trace, Frobenius."""

from planarlab import make_field

# Fields are deterministic: same (p, r) always gives the same modulus,
# chosen as the smallest-encoding monic irreducible.
for p, r in [(5, 1), (3, 2), (3, 3), (5, 2), (7, 2)]:
    f = make_field(p, r)
    print(f"{f!r}: q = {f.q}, modulus coefficients (low->high) = {list(f.modulus)}")

print()

# Elements are integers in [0, q): the digits base p are the coefficients
# on the polynomial basis.
f9 = make_field(3, 2)
alpha = f9.element(3)  # coefficient vector (0, 1): the image of x
print("alpha          =", alpha, "coeffs", alpha.coeffs)
print("alpha^2        =", alpha * alpha, "(equals -1: the modulus is x^2 + 1)")
print("alpha^8        =", alpha**8, "(multiplicative order divides q - 1)")
print("1/alpha        =", alpha.inverse())
print("alpha * 1/alpha =", alpha * alpha.inverse())

print()

# Trace maps onto the prime subfield, hitting every residue equally often.
print("traces over GF(9):", [f9.trace(a) for a in range(9)])
print("trace is additive:",
      all(f9.trace(f9.add(a, b)) == (f9.trace(a) + f9.trace(b)) % 3
          for a in range(9) for b in range(9)))

# Frobenius x -> x^p is a field automorphism of order r.
print("frobenius orbit of alpha:", [alpha.frobenius(k) for k in range(3)])
