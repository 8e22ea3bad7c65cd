"""Toric model of the minimal resolution Y of C^2/Z_N.

Curves are indexed ``0..N``.  ``C_1, ..., C_{N-1}`` are the exceptional
(-2)-curves; ``C_0`` and ``C_N`` are the non-compact boundary curves of the
fan.  The boundary curves carry no self-intersection number, so pairings are
only defined when at least one argument is supported on the exceptional locus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ._rational import as_fraction, fmt

__all__ = [
    "ResolutionGeometry",
    "DivisorClass",
    "Polarization",
    "build_resolution",
    "curve",
    "intersection",
    "intersection_matrix",
    "tilting_divisor",
    "interval_divisor",
    "interval_pairing",
]

E1 = (1, 0)
E2 = (0, 1)


@dataclass(frozen=True)
class ResolutionGeometry:
    N: int
    rays: tuple[tuple[int, int], ...]

    @property
    def curve_count(self) -> int:
        return self.N + 1

    @property
    def compact_indices(self) -> range:
        return range(1, self.N)

    @property
    def cones(self) -> tuple[tuple[int, int], ...]:
        """Two-dimensional cones as pairs of consecutive ray indices."""
        return tuple((i - 1, i) for i in range(1, self.N + 1))

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "rays": [list(v) for v in self.rays],
            "cones": [list(c) for c in self.cones],
            "cartan": intersection_matrix(self.N),
        }


def build_resolution(N: int) -> ResolutionGeometry:
    """Fan of the resolution: rays ``v_i = i*e1 - (i-1)*e2`` for ``0 <= i <= N``."""
    if not isinstance(N, int) or N < 2:
        raise ValueError("singularity type requires N ≥ 2")
    rays = tuple(
        (i * E1[0] - (i - 1) * E2[0], i * E1[1] - (i - 1) * E2[1]) for i in range(N + 1)
    )
    return ResolutionGeometry(N=N, rays=rays)


@dataclass(frozen=True)
class DivisorClass:
    """A Q-linear combination of the curves ``C_0, ..., C_N``."""

    N: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.N + 1:
            raise ValueError(f"expected {self.N + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))

    @classmethod
    def from_mapping(cls, N: int, coeffs: Mapping[int, object]) -> DivisorClass:
        values = [Fraction(0)] * (N + 1)
        for idx, c in coeffs.items():
            idx = int(idx)
            if not 0 <= idx <= N:
                raise ValueError(f"curve index {idx} outside 0..{N}")
            values[idx] += as_fraction(c)
        return cls(N, tuple(values))

    @classmethod
    def zero(cls, N: int) -> DivisorClass:
        return cls(N, (Fraction(0),) * (N + 1))

    @classmethod
    def compact(cls, m) -> DivisorClass:
        """The class ``sum m_i C_i`` from the vector ``(m_1, ..., m_{N-1})``."""
        return cls(len(m) + 1, (Fraction(0), *map(as_fraction, m), Fraction(0)))

    @property
    def compact_only(self) -> bool:
        return self.coeffs[0] == 0 and self.coeffs[self.N] == 0

    @property
    def compact_vector(self) -> tuple[Fraction, ...]:
        """Coefficients at ``C_1..C_{N-1}``."""
        return self.coeffs[1 : self.N]

    def __getitem__(self, idx: int) -> Fraction:
        return self.coeffs[idx]

    def _check(self, other: DivisorClass):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.N != self.N:
            raise ValueError(f"divisors live on different resolutions (N={self.N}, N={other.N})")
        return None

    def __add__(self, other: DivisorClass) -> DivisorClass:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(self.N, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return DivisorClass(self.N, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.N, tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar) -> DivisorClass:
        s = as_fraction(scalar)
        return DivisorClass(self.N, tuple(s * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": {str(i): fmt(c) for i, c in enumerate(self.coeffs) if c != 0}}

    @classmethod
    def from_json(cls, N: int, data: dict) -> DivisorClass:
        return cls.from_mapping(N, {int(k): v for k, v in data["coeffs"].items()})

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            parts.append(f"C_{i}" if c == 1 else f"{c}*C_{i}")
        return " + ".join(parts) or "0"


def curve(N: int, i: int) -> DivisorClass:
    if not 0 <= i <= N:
        raise ValueError(f"curve index {i} outside 0..{N}")
    return DivisorClass.from_mapping(N, {i: 1})


def _curve_pairing(N: int, i: int, j: int) -> int:
    if i == j:
        if not 1 <= i <= N - 1:
            raise ValueError(f"self-intersection of boundary curve C_{i} is undefined")
        return -2
    return 1 if abs(i - j) == 1 else 0


def intersection(a: DivisorClass, b: DivisorClass) -> Fraction:
    """Bilinear extension of the (extended) Cartan pairing of the A_{N-1} chain."""
    if a.N != b.N:
        raise ValueError("divisors live on different resolutions")
    if not (a.compact_only or b.compact_only):
        raise ValueError("pairing undefined without a compact argument")
    total = Fraction(0)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in (i - 1, i, i + 1):
            if 0 <= j <= a.N and b.coeffs[j] != 0:
                total += ai * b.coeffs[j] * _curve_pairing(a.N, i, j)
    return total


def intersection_matrix(N: int) -> list[list[int]]:
    """``(C_i . C_j)`` for ``1 <= i, j <= N-1``: minus the Cartan matrix of A_{N-1}."""
    return [[_curve_pairing(N, i, j) for j in range(1, N)] for i in range(1, N)]


def tilting_divisor(geom: ResolutionGeometry | int, i: int) -> DivisorClass:
    """``D_i = sum_{j=0}^{N-i} j * C_{i+j}``, defined for ``1 <= i <= N``.

    These satisfy ``D_k . C_i = delta_{ki}`` on the exceptional curves.
    """
    N = geom if isinstance(geom, int) else geom.N
    if not 1 <= i <= N:
        raise ValueError(f"tilting divisor index {i} outside 1..{N}")
    return DivisorClass.from_mapping(N, {i + j: j for j in range(N - i + 1)})


def interval_divisor(N: int, i: int, j: int) -> DivisorClass:
    """``C_{i,j} = C_i + ... + C_j`` (zero when ``i > j``)."""
    if not (1 <= i <= N - 1 and 1 <= j <= N - 1):
        raise ValueError(f"interval endpoints ({i}, {j}) outside 1..{N - 1}")
    return DivisorClass.from_mapping(N, {k: 1 for k in range(i, j + 1)})


def interval_pairing(i: int, j: int, l: int, m: int) -> int:
    """``C_{i,j} . C_{l,m}`` from the four-case table (equal, one shared end, linked, else)."""
    if not (1 <= i <= j and 1 <= l <= m):
        raise ValueError(f"malformed intervals ({i},{j}), ({l},{m})")
    if (i, j) == (l, m):
        return -2
    if i == l or j == m:
        return -1
    if l == j + 1 or i == m + 1:
        return 1
    return 0


@dataclass(frozen=True)
class Polarization:
    """A rational polarization recorded through its degrees ``zeta_i = <omega, C_i>``."""

    zeta_compact: tuple[Fraction, ...]

    def __post_init__(self):
        zeta = tuple(as_fraction(z) for z in self.zeta_compact)
        if not zeta:
            raise ValueError("singularity type requires N ≥ 2")
        for k, z in enumerate(zeta, start=1):
            if z <= 0:
                raise ValueError(f"not a polarization: <omega, C_{k}> = {z} is not positive")
        object.__setattr__(self, "zeta_compact", zeta)

    @property
    def N(self) -> int:
        return len(self.zeta_compact) + 1

    @property
    def divisor_form(self) -> DivisorClass:
        """``omega = sum_i zeta_i D_i``."""
        total = DivisorClass.zero(self.N)
        for k, z in enumerate(self.zeta_compact, start=1):
            total = total + z * tilting_divisor(self.N, k)
        return total

    @classmethod
    def symmetric(cls, N: int) -> Polarization:
        return cls((Fraction(1),) * (N - 1))

    @classmethod
    def from_divisor(cls, omega: DivisorClass) -> Polarization:
        N = omega.N
        return cls(tuple(intersection(omega, curve(N, k)) for k in range(1, N)))

    def degree(self, m) -> Fraction:
        """``omega . sum m_k C_k``."""
        return sum((as_fraction(mk) * z for mk, z in zip(m, self.zeta_compact)), Fraction(0))

    def scaled(self, c) -> Polarization:
        c = as_fraction(c)
        return Polarization(tuple(c * z for z in self.zeta_compact))
