"""Which p are surgery coefficients of Berge knots?  Ask the factorization.

b+(m,n) has p = m^2 + mn + n^2, the norm of m + n w in Z[w], w^2 = w - 1;
b-(m,n) has p = m^2 + 3mn + n^2, a norm in the golden ring Z[w], w^2 = w + 1.
Primitive elements of norm p exist exactly when each prime factor splits, and
there are 2^(r-1) of them up to units and conjugation (r = number of primes).
Run:  python3 demos/05_realizability.py
"""
from bergeknots import QuadInt, berge_realizable, canonical_rep, enumerate_preimages
from bergeknots.quadratic import factorize, unit_pow_omega

for p in [19, 91, 209, 217, 23]:
    for sign in "+-":
        res = berge_realizable(p, sign)
        print(f"p={p:>3} {sign}: factors {factorize(p).factors}, count {res.count},"
              f" preimages {enumerate_preimages(p, sign)}")

# an arbitrary associate of 8 + 9w still reduces to (8, 9)
x = QuadInt("plus", 8, 9) * unit_pow_omega("plus", 5)
print(x, "->", canonical_rep(x))
