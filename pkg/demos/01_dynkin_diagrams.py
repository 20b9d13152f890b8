"""
ADE diagrams and their intersection forms
=========================================

Build the canonical configurations of (-2)-curves, look at the
intersection matrix, and check negative definiteness exactly.
"""

import numpy as np

from flopcycles import ADEType, build_ade, classify_tree, intersection_matrix, is_negative_definite
from flopcycles.dynkin import CurveConfiguration, NotADEError, determinant
from flopcycles.formats import describe

# E8 in the canonical labeling: a chain 1..7 with vertex 8 hanging off vertex 3.
e8 = build_ade(ADEType("E", 8))
print("E8 edges:", e8.edges)
for v, where in describe(e8).items():
    print(f"  {v}: {where}")

# The intersection matrix has -2 on the diagonal and 1 for every edge.
m = intersection_matrix(e8)
print(m)

# det(-M) is the order of the discriminant group: n+1 for A_n, 4 for D_n, 3/2/1 for E6/E7/E8.
for name in ["A4", "D7", "E6", "E7", "E8"]:
    t = ADEType.parse(name)
    print(name, "det(-M) =", determinant(-intersection_matrix(build_ade(t))))

# Leading principal minors decide definiteness without floating point;
# numpy's eigenvalues agree.
print("negative definite:", is_negative_definite(e8), "max eigenvalue:", np.linalg.eigvalsh(m).max())

# Add one vertex to the long arm and the form degenerates: this is the affine E8 diagram.
affine = CurveConfiguration.from_edges(range(1, 10), list(e8.edges) + [(7, 9)])
print("affine E8 negative definite:", is_negative_definite(affine))
try:
    classify_tree(affine)
except NotADEError as exc:
    print("classify_tree:", exc)
