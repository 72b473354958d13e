"""Exact computations for Berge knots of types VII and VIII, b^+-(m, n).

Alexander polynomials and genera, the lens spaces given by their
p-surgeries, Reidemeister-torsion certificates of hyperbolicity,
identification of a knot from (p, g) or from its lens space, and the
quadratic-ring arithmetic that decides which p occur.
"""

from .dual import SaitoDescription, alexander_dual, find_saito_parameters
from .errors import BergeError
from .exact_poly import LaurentPoly, doteq_eq, normalize_doteq
from .hyperbolicity import HyperbolicityCertificate, alexander_certificate, verify_hyperbolic
from .knots import StandardParam, alexander_berge, alexander_torus, genus_berge
from .lens import LensSpace, identify_from_lens, identify_from_pg, lens_from_berge, map_F
from .quadratic import QuadInt, berge_realizable, canonical_rep, enumerate_preimages
from .tables import TableRow, berge_table, genus_collisions

__version__ = "0.1.0"

__all__ = [
    "BergeError",
    "HyperbolicityCertificate",
    "LaurentPoly",
    "LensSpace",
    "QuadInt",
    "SaitoDescription",
    "StandardParam",
    "TableRow",
    "alexander_berge",
    "alexander_certificate",
    "alexander_dual",
    "alexander_torus",
    "berge_realizable",
    "berge_table",
    "canonical_rep",
    "doteq_eq",
    "enumerate_preimages",
    "find_saito_parameters",
    "genus_berge",
    "genus_collisions",
    "identify_from_lens",
    "identify_from_pg",
    "lens_from_berge",
    "map_F",
    "normalize_doteq",
    "verify_hyperbolic",
]
