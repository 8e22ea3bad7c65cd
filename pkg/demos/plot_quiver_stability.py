"""
Structure sheaves as quiver representations
===========================================

The structure sheaf of an exceptional curve becomes a thin representation of
the cyclic quiver.  It satisfies the preprojective relations and is stable
for the stability vector of the symmetric polarization.
"""

import sympy

from mckay_workbench import QuiverRep, is_preprojective, structure_sheaf_rep, thin_semistability

N, l = 5, 2
rep = structure_sheaf_rep(N, l)
print("dimension vector:", rep.dims)
print("preprojective:", is_preprojective(rep))

zeta = [1] * (N - 1) + [2 - N]
v = thin_semistability(rep, zeta)
print("verdict:", v.verdict.value, " most destabilizing subset:", v.witness)

###############################################################################
# Turning on the reverse map of an identity breaks the moment map relation.

x = dict(rep.x)
x[N] = sympy.Matrix([[1]])
broken = QuiverRep(rep.quiver, rep.dims, x, rep.y)
print("after perturbation:", is_preprojective(broken))
