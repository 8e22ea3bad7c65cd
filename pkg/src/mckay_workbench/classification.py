"""Stable one-dimensional sheaf classes of fixed slope, their chains and root data.

A stable class of slope ``mu`` is supported on a reduced chain
``C_{i,j} = C_i + ... + C_j`` and is recorded by the degree sequence
``e = (e_i, ..., e_j)`` of its successive kernels ``F_l`` (so ``O_{C_{i,j}}``
has ``e = (-1, ..., -1, 0)`` and ``chi = sum(e_l + 1)``).
"""

from __future__ import annotations

import math
import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .dictionary import chern_to_dimvec, parse_mu, INF
from .quiver import Quiver
from .toric import DivisorClass, Polarization, curve, intersection, interval_divisor, interval_pairing, tilting_divisor

__all__ = [
    "StableClass",
    "Chain",
    "ChainPartition",
    "RootDatum",
    "YangianFactor",
    "ExtTable",
    "EndpointCollisionWarning",
    "enumerate_stable_classes",
    "inequality_solutions",
    "is_stable_on_chain",
    "ext_table",
    "chain_partition",
    "yangian_factorization",
    "positive_roots",
    "twisting_line_bundle",
    "twisted_degrees",
]


class EndpointCollisionWarning(UserWarning):
    """Two emitted classes share a left or a right endpoint."""


@dataclass(frozen=True, order=True)
class StableClass:
    i: int
    j: int
    e: tuple[int, ...]
    N: int
    determinacy: str = "determined"

    def __post_init__(self):
        object.__setattr__(self, "e", tuple(int(v) for v in self.e))
        if not 1 <= self.i <= self.j <= self.N - 1:
            raise ValueError(f"malformed interval ({self.i}, {self.j}) for N = {self.N}")
        if len(self.e) != self.j - self.i + 1:
            raise ValueError("degree sequence length must equal the interval length")

    @property
    def key(self) -> tuple:
        return (self.i, self.j, self.e)

    @property
    def chi(self) -> int:
        return sum(v + 1 for v in self.e)

    @property
    def m(self) -> tuple[int, ...]:
        return tuple(int(self.i <= k <= self.j) for k in range(1, self.N))

    @property
    def ch1(self) -> DivisorClass:
        return interval_divisor(self.N, self.i, self.j)

    @property
    def dimvec(self) -> tuple[int, ...]:
        return chern_to_dimvec(self.m, self.chi)

    def restriction_degrees(self) -> tuple[int, ...]:
        """Degrees of the underlying line bundle on each curve of the chain."""
        return tuple(v + 1 for v in self.e[:-1]) + (self.e[-1],)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "e": list(self.e),
            "chi": self.chi,
            "dimvec": list(self.dimvec),
            "determinacy": self.determinacy,
        }


def _open_interval_ints(lo: Fraction, hi: Fraction) -> range:
    return range(math.floor(lo) + 1, math.ceil(hi))


def inequality_solutions(omega: Polarization, mu, i: int, j: int) -> list[tuple[int, ...]]:
    """Integer degree sequences on ``C_{i,j}`` meeting the tail/middle bounds and ``chi = mu * omega.C_{i,j}``."""
    zeta = omega.zeta_compact
    total = mu * sum(zeta[i - 1 : j], Fraction(0))
    if total.denominator != 1:
        return []
    chi = int(total)
    if i == j:
        e = chi - 1
        return [(e,)] if e >= 0 else []
    ranges = []
    for l in range(i, j + 1):
        a = zeta[l - 1] * mu
        if l == i:
            ranges.append(_open_interval_ints(a - 2, a - 1))
        elif l == j:
            ranges.append(_open_interval_ints(a - 1, a))
        else:
            ranges.append(_open_interval_ints(a - 2, a))
    target = chi - len(ranges)  # sum of e_l

    # suffix bounds prune the product search
    lo_suffix = [0] * (len(ranges) + 1)
    hi_suffix = [0] * (len(ranges) + 1)
    for k in range(len(ranges) - 1, -1, -1):
        r = ranges[k]
        if not r:
            return []
        lo_suffix[k] = lo_suffix[k + 1] + r[0]
        hi_suffix[k] = hi_suffix[k + 1] + r[-1]

    out: list[tuple[int, ...]] = []

    def walk(k: int, acc: int, prefix: list[int]):
        if k == len(ranges):
            if acc == target:
                out.append(tuple(prefix))
            return
        for v in ranges[k]:
            rest = target - acc - v
            if lo_suffix[k + 1] <= rest <= hi_suffix[k + 1]:
                prefix.append(v)
                walk(k + 1, acc + v, prefix)
                prefix.pop()

    walk(0, 0, [])
    return out


def is_stable_on_chain(omega: Polarization, mu, i: int, j: int, e: Sequence[int]) -> bool:
    """Slope test against every quotient ``E|_{C_{a,b}}`` for proper sub-chains ``[a, b]``.

    ``E`` is a line bundle on the reduced chain ``C_{i,j}``; its pure quotients
    are restrictions to subcurves, and a disconnected subcurve passes as soon as
    each of its connected pieces does.
    """
    zeta = omega.zeta_compact
    r = dict(zip(range(i, j + 1), tuple(v + 1 for v in e[:-1]) + (e[-1],)))
    for a in range(i, j + 1):
        for b in range(a, j + 1):
            if (a, b) == (i, j):
                continue
            chi_q = sum(r[l] for l in range(a, b + 1)) + 1
            if chi_q <= mu * sum(zeta[a - 1 : b], Fraction(0)):
                return False
    return True


def enumerate_stable_classes(omega: Polarization, mu, *, exact: bool = True) -> list[StableClass]:
    """All stable classes of slope ``mu`` for the polarization ``omega``.

    With ``exact=False`` every solution of the tail/middle inequalities is
    emitted; these are necessary conditions only, so the output may contain
    strictly semistable classes and colliding endpoints.  ``exact=True`` adds
    the sub-chain quotient test.  Classes are flagged ``candidate`` when more
    than one sequence survives for the same interval, and endpoint collisions
    raise an :class:`EndpointCollisionWarning`.
    """
    mu = parse_mu(mu)
    if mu == INF:
        raise ValueError("one-dimensional classes need a finite slope; mu = inf selects zero-dimensional sheaves")
    N = omega.N
    found: list[StableClass] = []
    for i in range(1, N):
        for j in range(i, N):
            sols = inequality_solutions(omega, mu, i, j)
            if exact:
                sols = [e for e in sols if is_stable_on_chain(omega, mu, i, j, e)]
            flag = "determined" if len(sols) == 1 else "candidate"
            found.extend(StableClass(i, j, e, N, flag) for e in sols)
    found.sort(key=lambda c: c.key)
    _warn_collisions(found)
    return found


def _endpoint_collisions(classes: Iterable[StableClass]) -> list[str]:
    classes = list(classes)
    msgs = []
    for name, counts in (
        ("left", Counter(c.i for c in classes)),
        ("right", Counter(c.j for c in classes)),
    ):
        for endpoint, n in sorted(counts.items()):
            if n > 1:
                msgs.append(f"{n} classes share the {name} endpoint {endpoint}")
    return msgs


def _warn_collisions(classes):
    for msg in _endpoint_collisions(classes):
        warnings.warn(
            f"{msg}; stable classes are determined by their endpoints", EndpointCollisionWarning, stacklevel=3
        )


@dataclass(frozen=True)
class ExtTable:
    classes: tuple[StableClass, ...]
    hom: tuple[tuple[int, ...], ...]
    ext1: tuple[tuple[int, ...], ...]
    ext2: tuple[tuple[int, ...], ...]

    def euler(self, a: int, b: int) -> int:
        return self.hom[a][b] - self.ext1[a][b] + self.ext2[a][b]

    def to_json(self) -> dict:
        return {"hom": [list(r) for r in self.hom], "ext1": [list(r) for r in self.ext1], "ext2": [list(r) for r in self.ext2]}


def _linked(a: StableClass, b: StableClass) -> bool:
    return b.i == a.j + 1 or a.i == b.j + 1


def ext_table(classes: Sequence[StableClass]) -> ExtTable:
    classes = tuple(classes)
    keys = [c.key for c in classes]
    if len(set(keys)) != len(keys):
        raise ValueError("ext table needs pairwise distinct classes")
    n = len(classes)
    hom = tuple(tuple(int(a == b) for b in range(n)) for a in range(n))
    ext1 = tuple(tuple(int(_linked(classes[a], classes[b])) for b in range(n)) for a in range(n))
    return ExtTable(classes, hom, ext1, hom)


@dataclass(frozen=True)
class Chain:
    classes: tuple[StableClass, ...]

    @property
    def length(self) -> int:
        return len(self.classes)

    @property
    def support(self) -> tuple[int, int]:
        return self.classes[0].i, self.classes[-1].j


@dataclass(frozen=True)
class ChainPartition:
    chains: tuple[Chain, ...]

    @property
    def lam(self) -> tuple[int, ...]:
        return tuple(c.length for c in self.chains)

    @property
    def classes(self) -> tuple[StableClass, ...]:
        return tuple(a for c in self.chains for a in c.classes)

    def indices(self, classes: Sequence[StableClass]) -> list[list[int]]:
        pos = {c.key: k for k, c in enumerate(classes)}
        return [[pos[a.key] for a in ch.classes] for ch in self.chains]


def chain_partition(classes: Iterable[StableClass]) -> ChainPartition:
    """Split classes into maximal chains linked by ``i_next = j_prev + 1``."""
    classes = sorted(classes, key=lambda c: c.key)
    if _endpoint_collisions(classes):
        raise ValueError("input violates stable-class endpoint uniqueness")
    by_left = {c.i: c for c in classes}
    has_pred = {c.j + 1 for c in classes}
    chains = []
    for c in classes:
        if c.i in has_pred:
            continue
        run = [c]
        while run[-1].j + 1 in by_left:
            run.append(by_left[run[-1].j + 1])
        chains.append(Chain(tuple(run)))
    chains.sort(key=lambda ch: ch.classes[0].i)
    return ChainPartition(tuple(chains))


@dataclass(frozen=True)
class YangianFactor:
    rank: int
    label: str
    quiver: Quiver

    def to_json(self) -> dict:
        return {"rank": self.rank, "label": self.label, "quiver": self.quiver.kind}


def yangian_factorization(p: ChainPartition) -> list[YangianFactor]:
    """One positive-half Yangian ``Y+(sl(s+1))`` per chain of length ``s``."""
    return [YangianFactor(s, f"Y+(sl({s + 1}))", Quiver.linear(s)) for s in p.lam]


@dataclass(frozen=True)
class RootDatum:
    chain: int
    start: int
    end: int
    ch1_image: DivisorClass
    dim_image: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "chain": self.chain,
            "start": self.start,
            "end": self.end,
            "ch1": list(int(v) for v in self.ch1_image.compact_vector),
            "dimvec": list(self.dim_image),
        }


def positive_roots(p: ChainPartition) -> list[RootDatum]:
    """Positive roots ``alpha_{c,s} + ... + alpha_{c,t}`` of each type-A chain."""
    roots = []
    for c, chain in enumerate(p.chains, start=1):
        cls = chain.classes
        for s in range(len(cls)):
            for t in range(s, len(cls)):
                ch1 = cls[s].ch1
                dim = list(cls[s].dimvec)
                for a in cls[s + 1 : t + 1]:
                    ch1 = ch1 + a.ch1
                    dim = [u + v for u, v in zip(dim, a.dimvec)]
                roots.append(RootDatum(c, s + 1, t + 1, ch1, tuple(dim)))
    return roots


def _class_twist(c: StableClass) -> DivisorClass:
    L = DivisorClass.zero(c.N)
    for l, e in zip(range(c.i, c.j), c.e[:-1]):
        L = L + (-1 - e) * tilting_divisor(c.N, l)
    return L + (-c.e[-1]) * tilting_divisor(c.N, c.j)


def twisting_line_bundle(obj: Chain | StableClass) -> DivisorClass:
    """Divisor of the line bundle ``L`` with ``E (x) L = O_{C_{i,j}}``; summed over a chain."""
    if isinstance(obj, StableClass):
        return _class_twist(obj)
    if not obj.classes:
        raise ValueError("malformed chain: no classes")
    for a, b in zip(obj.classes, obj.classes[1:]):
        if b.i != a.j + 1:
            raise ValueError("malformed chain: consecutive supports are not linked")
    total = _class_twist(obj.classes[0])
    for c in obj.classes[1:]:
        total = total + _class_twist(c)
    return total


def twisted_degrees(c: StableClass, L: DivisorClass) -> tuple[Fraction, ...]:
    """Kernel degrees of ``E (x) L``; equals ``(-1, ..., -1, 0)`` for the right twist."""
    return tuple(e + intersection(L, curve(c.N, l)) for l, e in zip(range(c.i, c.j + 1), c.e))


def euler_from_pairing(a: StableClass, b: StableClass) -> int:
    return -interval_pairing(a.i, a.j, b.i, b.j)
