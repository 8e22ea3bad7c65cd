"""
Stable classes for the symmetric polarization
=============================================

With every exceptional curve given degree one, slope-one stable sheaves are
exactly the degree-zero line bundles on the single curves, and they link into
one long chain.
"""

from mckay_workbench import (
    Polarization,
    chain_partition,
    enumerate_stable_classes,
    omega_to_zeta,
    yangian_factorization,
)

N = 5
omega = Polarization.symmetric(N)

# the quiver stability parameter seen by these sheaves
print("zeta =", [str(z) for z in omega_to_zeta(omega, 1)])

classes = enumerate_stable_classes(omega, 1)
for c in classes:
    print(f"C_{c.i}..C_{c.j}  e={c.e}  chi={c.chi}  d={c.dimvec}")

# consecutive supports join up into chains, one Yangian factor per chain
partition = chain_partition(classes)
print("chain lengths:", partition.lam)
print("factors:", [f.label for f in yangian_factorization(partition)])
