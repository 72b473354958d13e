"""The Alexander polynomial seen from the lens space side.

The core of the surgery solid torus is a knot K' in L(p, q); the original
knot's Alexander polynomial can be read off from (p, q, k), where k is the
homology class of K'.
Run:  python3 demos/06_dual_knot.py
"""
from bergeknots import SaitoDescription, StandardParam, alexander_berge, alexander_dual, find_saito_parameters
from bergeknots.dual import dual_exponents, dual_presentation_q, saito_k_for_berge_plus

# the trefoil: 7-surgery gives L(7, 2), with the dual class k = 4
print("exponents:", dual_exponents(7, 2, 4))
print("trefoil:  ", alexander_dual(SaitoDescription(7, 2, 4)))

par = StandardParam(1, 2, 3)
k = saito_k_for_berge_plus(par.m, par.n)
desc = SaitoDescription(19, dual_presentation_q(par), k)
print(f"{par}: k = {k}, dual formula {alexander_dual(desc)}")
print(f"{'':9}  direct        {alexander_berge(par)}")
print("all k that work:", find_saito_parameters(par))
