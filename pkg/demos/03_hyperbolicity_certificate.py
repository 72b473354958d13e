"""Why b+(2,3) is hyperbolic: a certificate that checks every alternative.

A knot in S^3 with a lens space surgery is a torus knot, a cable of a torus
knot, or hyperbolic.  The certificate lists every torus knot / cable with the
same p and the invariant that tells it apart (genus, Franz torsion,
lens space, congruences, ...).
Run:  python3 demos/03_hyperbolicity_certificate.py
"""
from bergeknots import StandardParam, alexander_certificate, verify_hyperbolic

for text in ["+,2,3", "-,2,3", "+,5,6"]:
    par = StandardParam.parse(text)
    cert = verify_hyperbolic(par)
    print("torsion:  ", cert.summary())
    print("alexander:", alexander_certificate(par).summary())
    print()

# every candidate in a certificate carries its reasons
cert = verify_hyperbolic(StandardParam.parse("+,2,3"))
for cand in cert.candidates():
    print(f"  {cand.label():>10}  ruled out by {', '.join(cand.reasons)}")
