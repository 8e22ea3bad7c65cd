"""Translation between the sheaf side (omega, mu, ch_1, chi) and the quiver side (zeta, d)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ._rational import INF, as_fraction, fmt
from .toric import Polarization

__all__ = [
    "INF",
    "SheafClass",
    "SimpleObject",
    "parse_mu",
    "omega_to_zeta",
    "zeta_to_omega",
    "chern_to_dimvec",
    "dimvec_to_chern",
    "zeta_degree_of_sheaf",
    "zeta_degree_perverse",
    "slope_omega",
    "simple_object_dictionary",
]


@dataclass(frozen=True)
class SheafClass:
    """Numerical class: ``ch_1 = sum m_i C_i`` and ``chi(O_Y, E) = chi``."""

    m: tuple[int, ...]
    chi: int

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(int(v) for v in self.m))
        object.__setattr__(self, "chi", int(self.chi))

    @property
    def N(self) -> int:
        return len(self.m) + 1


def parse_mu(mu):
    """Normalize a slope to a positive Fraction or the ``INF`` token."""
    if isinstance(mu, str) and mu.strip().lower() in ("inf", "infinity", "∞"):
        return INF
    if isinstance(mu, float):
        if math.isinf(mu) and mu > 0:
            return INF
        raise TypeError("finite slopes must be exact rationals, not floats")
    if mu is INF:
        return INF
    mu = as_fraction(mu)
    if mu <= 0:
        raise ValueError(f"slope must be positive, got {mu}")
    return mu


def omega_to_zeta(omega: Polarization, mu) -> tuple[Fraction, ...]:
    """Stability vector matching ``omega``-semistable sheaves of slope ``mu``.

    ``zeta_i = <omega, C_i>`` for ``i < N`` and ``zeta_N = 1/mu - sum zeta_i``
    (``-sum zeta_i`` for ``mu = inf``).
    """
    mu = parse_mu(mu)
    compact = omega.zeta_compact
    total = sum(compact, Fraction(0))
    last = -total if mu == INF else 1 / mu - total
    return (*compact, last)


def zeta_to_omega(zeta: Sequence):
    """Inverse of :func:`omega_to_zeta`: returns ``(omega, mu)``."""
    zeta = tuple(as_fraction(z) for z in zeta)
    omega = Polarization(zeta[:-1])
    total = sum(zeta, Fraction(0))
    if total < 0:
        raise ValueError("sum of zeta is negative: no slope mu > 0 corresponds to it")
    return omega, (INF if total == 0 else 1 / total)


def chern_to_dimvec(m: Sequence[int], n: int) -> tuple[int, ...]:
    """``d_k = n - m_k`` for ``k < N`` and ``d_N = n``."""
    d = tuple(int(n) - int(mk) for mk in m) + (int(n),)
    if any(v < 0 for v in d):
        raise ValueError(f"class not represented by a module of Π_Q (dimension vector {d})")
    return d


def dimvec_to_chern(d: Sequence[int]) -> tuple[tuple[int, ...], int]:
    d = tuple(int(v) for v in d)
    n = d[-1]
    return tuple(n - dk for dk in d[:-1]), n


def zeta_degree_of_sheaf(zeta: Sequence, s: SheafClass) -> Fraction:
    """``n * sum(zeta) - omega . ch_1`` with ``omega = sum_{i<N} zeta_i D_i``."""
    zeta = tuple(as_fraction(z) for z in zeta)
    if len(zeta) != s.N:
        raise ValueError(f"stability vector of length {len(zeta)} for N = {s.N}")
    pairing = sum((z * mk for z, mk in zip(zeta, s.m)), Fraction(0))
    return s.chi * sum(zeta, Fraction(0)) - pairing


def zeta_degree_perverse(zeta: Sequence, d_N: int, ch1_minus1: Sequence[int], ch1_0: Sequence[int]) -> Fraction:
    """Degree of a two-term perverse object from ``d_N`` and the ``ch_1`` of both cohomology sheaves."""
    zeta = tuple(as_fraction(z) for z in zeta)
    omega_dot = lambda m: sum((z * int(mk) for z, mk in zip(zeta, m)), Fraction(0))  # noqa: E731
    return d_N * sum(zeta, Fraction(0)) + omega_dot(ch1_minus1) - omega_dot(ch1_0)


def slope_omega(omega: Polarization, s: SheafClass) -> Fraction:
    denom = omega.degree(s.m)
    if denom == 0:
        raise ValueError("zero-dimensional class has slope ∞")
    return Fraction(s.chi) / denom


@dataclass(frozen=True)
class SimpleObject:
    vertex: int
    dimvec: tuple[int, ...]
    m: tuple[int, ...]
    chi: int
    shift: int
    description: str

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "dimvec": list(self.dimvec),
            "m": list(self.m),
            "chi": self.chi,
            "shift": self.shift,
            "sheaf": self.description,
        }


def simple_object_dictionary(N: int, i: int) -> SimpleObject:
    """Sheaf-side description of the simple module at vertex ``i``."""
    if N < 2:
        raise ValueError("singularity type requires N ≥ 2")
    if not 1 <= i <= N:
        raise ValueError(f"vertex {i} outside 1..{N}")
    unit = tuple(int(v == i) for v in range(1, N + 1))
    if i == N:
        m, chi, shift, desc = (1,) * (N - 1), 1, 0, f"O_(C_1+...+C_{N - 1})"
    else:
        m = tuple(-int(k == i) for k in range(1, N))
        chi, shift, desc = 0, 1, f"O_C_{i}(-1)[1]"
    return SimpleObject(i, unit, m, chi, shift, desc)


def zeta_json(zeta: Sequence, mu) -> dict:
    mu = parse_mu(mu)
    return {"zeta": [fmt(z) for z in zeta], "mu": INF if mu == INF else fmt(mu)}
