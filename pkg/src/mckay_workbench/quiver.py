"""Quivers, doubled representations, preprojective relations and slope stability.

Vertices and arrows are labelled from 1, following the affine quiver
``A_{N-1}^{(1)}`` with arrows ``a_k: k -> k+1`` and ``a_N: N -> 1``.  A
representation of the doubled quiver stores ``x[k]`` for ``a_k`` and ``y[k]``
for the reversed arrow ``a_k^*``.  Dimension vectors are plain tuples, so
``dims[v - 1]`` is the dimension at vertex ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import sympy

from ._rational import as_fraction, fmt

__all__ = [
    "Quiver",
    "QuiverRep",
    "Verdict",
    "StabilityVerdict",
    "CertificateVerdict",
    "CertificateResult",
    "ringel_pairing",
    "euler_pairing",
    "zeta_degree",
    "zeta_slope",
    "in_slope_monoid",
    "moment_map_defect",
    "is_preprojective",
    "structure_sheaf_rep",
    "thin_semistability",
    "verify_subrep_certificate",
    "direct_sum",
]


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[int, int], ...]
    kind: str

    @classmethod
    def affine_cycle(cls, N: int) -> Quiver:
        if N < 2:
            raise ValueError("singularity type requires N ≥ 2")
        arrows = tuple((k, k % N + 1) for k in range(1, N + 1))
        return cls(N, arrows, f"affine-cycle({N})")

    @classmethod
    def linear(cls, s: int) -> Quiver:
        if s < 1:
            raise ValueError("linear quiver needs at least one vertex")
        return cls(s, tuple((k, k + 1) for k in range(1, s)), f"linear({s})")

    def source(self, a: int) -> int:
        return self.arrows[a - 1][0]

    def target(self, a: int) -> int:
        return self.arrows[a - 1][1]

    @property
    def arrow_labels(self) -> range:
        return range(1, len(self.arrows) + 1)


def _check_dims(Q: Quiver, d: Sequence[int], name: str = "dimension vector") -> tuple[int, ...]:
    d = tuple(int(v) for v in d)
    if len(d) != Q.vertex_count:
        raise ValueError(f"{name} has length {len(d)}, quiver has {Q.vertex_count} vertices")
    return d


def ringel_pairing(Q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """``(d, e) = sum_i d_i e_i - sum_a d_{s(a)} e_{t(a)}``."""
    d = _check_dims(Q, d)
    e = _check_dims(Q, e)
    total = sum(a * b for a, b in zip(d, e))
    for s, t in Q.arrows:
        total -= d[s - 1] * e[t - 1]
    return total


def euler_pairing(Q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    return ringel_pairing(Q, d, e) + ringel_pairing(Q, e, d)


def zeta_degree(zeta: Sequence, d: Sequence[int]) -> Fraction:
    if len(zeta) != len(d):
        raise ValueError(f"stability vector has length {len(zeta)}, dimension vector {len(d)}")
    return sum((as_fraction(z) * int(n) for z, n in zip(zeta, d)), Fraction(0))


def zeta_slope(zeta: Sequence, d: Sequence[int]) -> Fraction:
    total = sum(int(n) for n in d)
    if total == 0:
        raise ValueError("slope of the zero dimension vector is undefined")
    return zeta_degree(zeta, d) / total


def in_slope_monoid(zeta: Sequence, theta, d: Sequence[int]) -> bool:
    """Membership of ``d`` in the monoid of vectors that are zero or of slope ``theta``."""
    if not any(d):
        return True
    return zeta_slope(zeta, d) == as_fraction(theta)


def _to_matrix(value, rows: int, cols: int, label: str) -> sympy.Matrix:
    if value is None:
        return sympy.zeros(rows, cols)
    if isinstance(value, sympy.MatrixBase):
        M = sympy.Matrix(value)
    else:
        rows_in = [list(r) for r in value]
        if rows == 0 or cols == 0:
            if any(rows_in) or (rows_in and len(rows_in) != rows):
                raise ValueError(f"{label}: expected a {rows}x{cols} matrix")
            return sympy.zeros(rows, cols)
        M = sympy.Matrix([[sympy.Rational(str(as_fraction(v))) for v in r] for r in rows_in])
    if M.shape != (rows, cols):
        raise ValueError(f"{label}: expected shape {rows}x{cols}, got {M.shape[0]}x{M.shape[1]}")
    return M


@dataclass(frozen=True, eq=False)
class QuiverRep:
    """A representation of the doubled quiver.

    ``x[a]`` has shape ``d_{t(a)} x d_{s(a)}`` and ``y[a]`` the transposed shape.
    Missing arrows are zero maps.
    """

    quiver: Quiver
    dims: tuple[int, ...]
    x: dict = field(default_factory=dict)
    y: dict = field(default_factory=dict)

    def __post_init__(self):
        dims = _check_dims(self.quiver, self.dims)
        if any(v < 0 for v in dims):
            raise ValueError("dimension vector entries must be nonnegative")
        object.__setattr__(self, "dims", dims)
        xs, ys = {}, {}
        for a in self.quiver.arrow_labels:
            s, t = self.quiver.source(a), self.quiver.target(a)
            ds, dt = dims[s - 1], dims[t - 1]
            xs[a] = _to_matrix(self.x.get(a), dt, ds, f"x[{a}]")
            ys[a] = _to_matrix(self.y.get(a), ds, dt, f"y[{a}]")
        extra = (set(self.x) | set(self.y)) - set(self.quiver.arrow_labels)
        if extra:
            raise ValueError(f"unknown arrow labels {sorted(extra)}")
        object.__setattr__(self, "x", xs)
        object.__setattr__(self, "y", ys)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, n in enumerate(self.dims, start=1) if n > 0)

    def is_thin(self) -> bool:
        return all(n in (0, 1) for n in self.dims)

    def maps(self):
        """Yield ``(source, target, matrix)`` for every arrow of the doubled quiver."""
        for a in self.quiver.arrow_labels:
            s, t = self.quiver.source(a), self.quiver.target(a)
            yield s, t, self.x[a]
            yield t, s, self.y[a]

    def to_json(self) -> dict:
        def enc(ms):
            return {
                str(a): [[fmt(as_fraction(v)) for v in M.tolist()[r]] for r in range(M.rows)]
                for a, M in ms.items()
                if M.rows and M.cols and any(M)
            }

        out = {"dims": list(self.dims), "x": enc(self.x), "y": enc(self.y)}
        if not self.quiver.kind.startswith("affine"):
            out["kind"] = "linear"
        return out

    @classmethod
    def from_json(cls, data: dict) -> QuiverRep:
        dims = [int(v) for v in data["dims"]]
        kind = data.get("kind", "affine")
        Q = Quiver.linear(len(dims)) if kind == "linear" else Quiver.affine_cycle(len(dims))
        x = {int(k): v for k, v in data.get("x", {}).items()}
        y = {int(k): v for k, v in data.get("y", {}).items()}
        return cls(Q, tuple(dims), x, y)


def moment_map_defect(rep: QuiverRep) -> list[sympy.Matrix]:
    """Per-vertex value of ``sum_{t(a)=v} x_a y_a - sum_{s(a)=v} y_a x_a``.

    On the affine cycle this is ``x_{k-1} y_{k-1} - y_k x_k`` at vertex ``k``.
    """
    Q = rep.quiver
    out = [sympy.zeros(n, n) for n in rep.dims]
    for a in Q.arrow_labels:
        s, t = Q.source(a), Q.target(a)
        out[t - 1] += rep.x[a] * rep.y[a]
        out[s - 1] -= rep.y[a] * rep.x[a]
    return out


def is_preprojective(rep: QuiverRep) -> bool:
    return all(M.is_zero_matrix for M in moment_map_defect(rep))


def structure_sheaf_rep(N: int, l: int) -> QuiverRep:
    """Module over the preprojective algebra attached to ``O_{C_l}``.

    Thin, with ``V_l = 0``; identities along ``V_{l-1} -> ... -> V_1 -> V_N``
    (reversed arrows) and ``V_{l+1} -> ... -> V_{N-1} -> V_N`` (forward arrows).
    """
    if N < 2:
        raise ValueError("singularity type requires N ≥ 2")
    if not 1 <= l <= N - 1:
        raise ValueError(f"curve index {l} outside 1..{N - 1}")
    dims = tuple(0 if v == l else 1 for v in range(1, N + 1))
    one = [[1]]
    x = {k: one for k in range(l + 1, N)}
    y = {k: one for k in range(1, l - 1)}
    if l >= 2:
        y[N] = one
    return QuiverRep(Quiver.affine_cycle(N), dims, x, y)


class StabilityVerdict(str, Enum):
    STABLE = "stable"
    SEMISTABLE = "semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class Verdict:
    verdict: StabilityVerdict
    witness: tuple[int, ...]
    slope: Fraction
    witness_slope: Fraction | None

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "witness": list(self.witness)}


def _closed_subsets(rep: QuiverRep):
    support = rep.support
    edges = [(s, t) for s, t, M in rep.maps() if M.rows and M.cols and not M.is_zero_matrix]
    for r in range(1, len(support) + 1):
        for S in combinations(support, r):
            members = set(S)
            if all(t in members for s, t in edges if s in members):
                yield S


def thin_semistability(rep: QuiverRep, zeta: Sequence) -> Verdict:
    """Decide zeta-(semi)stability of a thin representation by subset closure.

    For a thin representation the subrepresentations are exactly the vertex
    subsets of the support closed under the nonzero arrows.  The witness is a
    nonzero proper closed subset of maximal slope (smallest first on ties),
    or empty when there is none.
    """
    if not rep.is_thin():
        raise ValueError("thin enumeration unsound for d_i > 1; use verify_subrep_certificate")
    zeta = tuple(as_fraction(z) for z in zeta)
    if len(zeta) != rep.quiver.vertex_count:
        raise ValueError("stability vector length does not match the quiver")
    support = rep.support
    if not support:
        raise ValueError("stability is defined for nonzero representations only")
    slope = sum(zeta[v - 1] for v in support) / len(support)

    best, best_slope = (), None
    for S in _closed_subsets(rep):
        if len(S) == len(support):
            continue
        s = sum(zeta[v - 1] for v in S) / len(S)
        if best_slope is None or s > best_slope:
            best, best_slope = S, s
    if best_slope is None or best_slope < slope:
        v = StabilityVerdict.STABLE
    elif best_slope == slope:
        v = StabilityVerdict.SEMISTABLE
    else:
        v = StabilityVerdict.UNSTABLE
    return Verdict(v, best, slope, best_slope)


class CertificateVerdict(str, Enum):
    DESTABILIZER = "accepted_destabilizer"
    COMPATIBLE = "accepted_compatible"
    REJECTED = "rejected"


@dataclass(frozen=True)
class CertificateResult:
    verdict: CertificateVerdict
    reason: str = ""
    sub_slope: Fraction | None = None
    rep_slope: Fraction | None = None
    refutes_stability: bool = False


def _basis_matrix(vectors, n: int, v: int) -> sympy.Matrix:
    cols = []
    for b in vectors:
        b = list(b)
        if len(b) != n:
            raise ValueError(f"basis vector at vertex {v} has length {len(b)}, expected {n}")
        cols.append([sympy.Rational(str(as_fraction(c))) for c in b])
    M = sympy.Matrix(cols).T if cols else sympy.zeros(n, 0)
    if M.rank() != len(cols):
        raise ValueError(f"basis vectors at vertex {v} are linearly dependent")
    return M


def verify_subrep_certificate(rep: QuiverRep, subspaces: Sequence, zeta: Sequence) -> CertificateResult:
    """Check a proposed subrepresentation and compare its slope with ``rep``.

    ``subspaces[v-1]`` lists basis vectors of the subspace at vertex ``v``.
    An invariant subspace of larger slope refutes semistability; one of equal
    slope that is proper refutes stability.
    """
    if len(subspaces) != rep.quiver.vertex_count:
        raise ValueError("need one basis list per vertex")
    zeta = tuple(as_fraction(z) for z in zeta)
    bases = [_basis_matrix(vs, n, v) for v, (vs, n) in enumerate(zip(subspaces, rep.dims), start=1)]
    for s, t, M in rep.maps():
        Bs, Bt = bases[s - 1], bases[t - 1]
        if Bs.cols == 0:
            continue
        image = M * Bs
        if Bt.cols == 0:
            if not image.is_zero_matrix:
                return CertificateResult(CertificateVerdict.REJECTED, f"not invariant under {s}->{t}")
            continue
        if Bt.row_join(image).rank() != Bt.cols:
            return CertificateResult(CertificateVerdict.REJECTED, f"not invariant under {s}->{t}")
    sub_dims = [B.cols for B in bases]
    if not any(sub_dims):
        return CertificateResult(CertificateVerdict.REJECTED, "zero subrepresentation has no slope")
    sub_slope = zeta_slope(zeta, sub_dims)
    rep_slope = zeta_slope(zeta, rep.dims)
    proper = sub_dims != list(rep.dims)
    if sub_slope > rep_slope:
        return CertificateResult(CertificateVerdict.DESTABILIZER, "", sub_slope, rep_slope, True)
    return CertificateResult(
        CertificateVerdict.COMPATIBLE, "", sub_slope, rep_slope, proper and sub_slope == rep_slope
    )


def direct_sum(a: QuiverRep, b: QuiverRep) -> QuiverRep:
    if a.quiver != b.quiver:
        raise ValueError("direct sum needs representations of the same quiver")
    dims = tuple(p + q for p, q in zip(a.dims, b.dims))
    x = {k: sympy.diag(a.x[k], b.x[k]) for k in a.quiver.arrow_labels}
    y = {k: sympy.diag(a.y[k], b.y[k]) for k in a.quiver.arrow_labels}
    return QuiverRep(a.quiver, dims, x, y)
