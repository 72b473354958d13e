"""Alexander polynomials of Berge knots, computed exactly.

Everything is integer Laurent-polynomial arithmetic -- no floats anywhere.
Run:  python3 demos/01_alexander_polynomials.py
"""
from bergeknots import LaurentPoly, StandardParam, alexander_berge, alexander_torus, doteq_eq, genus_berge
from bergeknots.exact_poly import cyclotomic_poly, div_exact

# a Laurent polynomial is a sparse {exponent: coefficient} map
t = LaurentPoly.monomial(1)
f = t**3 - t**-1
print("f =", f, "  span:", f.degree_span())

# exact division: t^6 - 1 = Phi_1 Phi_2 Phi_3 Phi_6
print("(t^6-1)/Phi_6 =", div_exact(t**6 - 1, cyclotomic_poly(6)))

# the smallest hyperbolic Berge knot of type VII: b+(2,3), 19-surgery gives a lens space
par = StandardParam.parse("+,2,3")
delta = alexander_berge(par)
print(par, "Delta =", delta)
print("genus", genus_berge(par), "= half the degree span", delta.degree_span() // 2)

# the m = 1 members of each family are torus knots
for n in range(2, 6):
    plus, minus = StandardParam(1, 1, n), StandardParam(-1, 1, n)
    print(f"b+(1,{n}) = T({n},{n + 1}):", doteq_eq(alexander_berge(plus), alexander_torus(n, n + 1)),
          f"   b-(1,{n}) = T({n + 1},{n + 2}):", doteq_eq(alexander_berge(minus), alexander_torus(n + 1, n + 2)))
