"""Exploration: is there a closed formula for k in the b- family?

For b+(m, n) the dual class is k = -n (m+n)^-1 mod p.  For b-(m, n) no
formula is assumed: list the k that reproduce the polynomial and try a few
natural guesses against them.  (Observed: the b+ formula hits every time,
here and in tests/test_dual.py up to p = 2000 -- an observation, not a proof.)
Run:  python3 demos/07_minus_family_k_pattern.py
"""
from bergeknots import find_saito_parameters
from bergeknots.lens import map_F
from bergeknots.tables import berge_params

GUESSES = {
    "-n/(m+n)": lambda m, n, p: -n * pow(m + n, -1, p),
    "n/(m+2n)": lambda m, n, p: n * pow(m + 2 * n, -1, p),
    "-n/(2m+n)": lambda m, n, p: -n * pow(2 * m + n, -1, p),
    "m/(m+n)": lambda m, n, p: m * pow(m + n, -1, p),
}

hits = dict.fromkeys(GUESSES, 0)
params = [par for par in berge_params(300) if par.sign < 0]
for par in params:
    p = map_F(par)[0]
    ks = find_saito_parameters(par)
    line = []
    for name, guess in GUESSES.items():
        try:
            ok = guess(par.m, par.n, p) % p in ks
        except ValueError:  # not invertible mod p
            ok = False
        hits[name] += ok
        line.append(f"{name}:{'y' if ok else '.'}")
    print(f"{str(par):>12} p={p:>3} k in {ks[:4]}{'...' if len(ks) > 4 else ''}  " + " ".join(line))

print("\nguess hit rates over", len(params), "b- parameters:")
for name, count in hits.items():
    print(f"  {name:>10}: {count}/{len(params)}")
