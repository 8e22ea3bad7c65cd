"""
Slope one half
==============

Halving the slope pushes the stable sheaves onto pairs of adjacent curves.
Their left endpoints are all distinct, so they still split into chains, now
two interleaved ones.
"""

from fractions import Fraction

from mckay_workbench import Polarization, chain_partition, enumerate_stable_classes, positive_roots

omega = Polarization.symmetric(7)
mu = Fraction(1, 2)

classes = enumerate_stable_classes(omega, mu)
for c in classes:
    print(f"({c.i},{c.j})  e={c.e}")

partition = chain_partition(classes)
for n, chain in enumerate(partition.chains, start=1):
    print(f"chain {n}:", [(c.i, c.j) for c in chain.classes])

# every chain of length s carries the s(s+1)/2 positive roots of type A_s
roots = positive_roots(partition)
print(len(roots), "positive roots")

###############################################################################
# Dropping the exact sub-chain test leaves the raw inequality solutions.
# Some of these are only semistable, and they collide at their endpoints;
# the library warns about that.

import warnings

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    raw = enumerate_stable_classes(omega, mu, exact=False)
print(len(raw), "raw candidates,", len(caught), "collision warnings")
