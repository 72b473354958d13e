"""Recover a Berge knot from (p, genus) or from its lens space.

Run:  python3 demos/04_identification.py
Shell:  bergeknots identify --p 19 --g 5   /   bergeknots identify --p 19 --q 13
"""
from bergeknots import LensSpace, StandardParam, identify_from_lens, identify_from_pg, lens_from_berge, map_F

par = StandardParam(1, 8, 9)
p, two_g = map_F(par)
print(f"{par}: p = {p}, 2g = {two_g}, lens space {lens_from_berge(par)}")
print("back from (p, 2g):", identify_from_pg(p, two_g))

# p = 217 has two type-VII knots; the lens spaces tell them apart
for par in [StandardParam(1, 3, 13), StandardParam(1, 8, 9)]:
    lens = lens_from_berge(par)
    print(f"{par} -> {lens} -> {identify_from_lens(lens)}")

# L(19, 13) comes from the torus knot T(4,5) = b-(1,3)
print("L(19,13):", identify_from_lens(LensSpace(19, 13)))
