"""Classifying polynomial functions: planar, Alltop, and exhaustive censuses."""

from planarlab import (
    FamilySpec,
    Poly,
    is_alltop,
    is_do_monomial_planar,
    is_planar,
    make_field,
    parse_poly,
    run_search,
    verify_alltop_hits_cubic,
    verify_char3_no_alltop,
)

f5 = make_field(5)
print("x^2 over GF(5): planar =", is_planar(parse_poly("x^2", f5)))
print("x^3 over GF(5): planar =", is_planar(parse_poly("x^3", f5)),
      " alltop =", is_alltop(parse_poly("x^3", f5)))

print()
print("planarity of x^(p^k+1) follows the odd-quotient rule r/gcd(r,k):")
for p, r in [(3, 2), (3, 3), (5, 2), (7, 3)]:
    field = make_field(p, r)
    for k in range(r):
        rule = is_do_monomial_planar(p, r, k)
        direct = is_planar(Poly.monomial(field, p**k + 1))
        print(f"  GF({field.q}), k={k}: rule says {rule}, direct check says {direct}")

print()
print("census of all 3125 reduced polynomials over GF(5):")
report = run_search(f5, FamilySpec("all-reduced", 4), "alltop")
print(f"  tested {report.tested}, Alltop hits {len(report.hit_texts)}")
print("  (exactly the polynomials with zero x^4 term and nonzero x^3 term)")

print()
print("characteristic 3 admits no Alltop functions at all:")
ok, rep = verify_char3_no_alltop(make_field(3), FamilySpec("all-reduced", 2))
print(f"  GF(3), all 27 functions: zero hits -> {ok}")
ok, rep = verify_char3_no_alltop(make_field(3, 3), FamilySpec("monomials"))
print(f"  GF(27), all monomials:   zero hits -> {ok}")

print()
print("over GF(25) the monomial Alltop hits are x^3 and its Frobenius twist:")
ok, scope = verify_alltop_hits_cubic(make_field(5, 2), FamilySpec("monomials"))
print("  hits:", scope.search.hit_texts)
print("  all cubic-shaped:", ok, "-> out-of-scope hits:", scope.violations)
