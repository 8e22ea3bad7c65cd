"""
Reading Betti numbers off a plethystic exponential
==================================================

The generating series is Exp applied to q/(q-1) times the sum of z^gamma over
the positive roots.  Expanding q/(q-1) in inverse powers of q gives
nonnegative integer predictions.
"""

from mckay_workbench import (
    Polarization,
    betti_series,
    chain_partition,
    enumerate_stable_classes,
    positive_roots,
)

N = 3
classes = enumerate_stable_classes(Polarization.symmetric(N), 1)
roots = positive_roots(chain_partition(classes))

series, predictions = betti_series(N, roots, trunc_z=2, trunc_q=6)
for p in predictions:
    gamma = tuple(int(v) for v in p.gamma.compact_vector)
    betti = [str(p.betti[i]) for i in sorted(p.betti, reverse=True)]
    print(f"gamma={gamma}  <gamma,gamma>={p.self_pairing}  b_2i, i descending: {' '.join(betti)}")

###############################################################################
# For twice a single curve the numbers count partitions into at most two
# parts: 1, 1, 2, 2, 3, 3, 4, ...
