"""Closed-form cohomology and Ext dimensions for chains of (-2)-curves.

Values are returned as ``(h0, h1, h2)``.  ``k`` is the number of curves in the
ambient chain ``C_1, ..., C_k``; ``s`` is the length of an exceptional
sequence ``L_0, ..., L_s`` of line bundles attached to a chain of stable
classes, and ``E_0 = L_0``.
"""

from __future__ import annotations

from typing import NamedTuple

from .toric import DivisorClass, intersection

__all__ = [
    "CohVector",
    "h_structure",
    "h_self_intersection_twist",
    "h_shift_twist",
    "h_ambient",
    "exceptional_seq_ext",
    "exceptional_vs_simple_ext",
    "euler_char_pair",
]


class CohVector(NamedTuple):
    h0: int
    h1: int
    h2: int

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2


def _check_interval(i: int, j: int, k: int | None, lower: int = 1):
    if not lower <= i <= j or (k is not None and j > k):
        raise ValueError(f"interval ({i}, {j}) outside the chain 1..{k}")


def h_structure(i: int, j: int, k: int | None = None) -> CohVector:
    """``H^*(O_{C_{i,j}})``."""
    _check_interval(i, j, k)
    return CohVector(1, 0, 0)


def h_self_intersection_twist(i: int, j: int, k: int | None = None) -> CohVector:
    """``H^*(O_{C_{i,j}}(C_{i,j}))``."""
    _check_interval(i, j, k)
    return CohVector(0, 1, 0)


def h_shift_twist(i: int, j: int, k: int | None = None) -> CohVector:
    """``H^*(O_{C_{i,j}}(C_{i-1,j}))``; needs ``i > 1``."""
    _check_interval(i, j, k, lower=2)
    return CohVector(0, 0, 0)


def h_ambient(i: int, j: int, sign: str, k: int | None = None) -> CohVector:
    """``H^*(O_S(+C_{i,j}))`` for ``sign='+'`` and ``H^*(O_S(-C_{i,j}))`` for ``sign='-'``."""
    _check_interval(i, j, k)
    if sign in ("+", 1, "plus"):
        return CohVector(1, 1, 0)
    if sign in ("-", -1, "minus"):
        return CohVector(0, 0, 0)
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def _check_seq(t: int, u: int, s: int):
    if not (0 <= t <= s and 0 <= u <= s):
        raise ValueError(f"indices ({t}, {u}) outside 0..{s}")


def exceptional_seq_ext(t: int, u: int, s: int) -> CohVector:
    """``Ext^*(L_t, L_u)`` in the exceptional sequence ``L_0, ..., L_s``."""
    _check_seq(t, u, s)
    if t == u:
        return CohVector(1, 0, 0)
    if u < t:
        return CohVector(0, 0, 0)
    return CohVector(1, 1, 0)


def exceptional_vs_simple_ext(t: int, u: int, s: int) -> CohVector:
    """``Ext^*(L_t, E_u)``: ``Hom`` only on the diagonal, ``Ext^1`` only for ``u = t + 1``."""
    _check_seq(t, u, s)
    return CohVector(int(t == u), int(u == t + 1), 0)


def euler_char_pair(a: DivisorClass, b: DivisorClass) -> int:
    """``chi(O_a, O_b) = -a.b`` for compactly supported classes."""
    if not (a.compact_only and b.compact_only):
        raise ValueError("Euler pairing needs compact classes on both sides")
    value = -intersection(a, b)
    if value.denominator != 1:
        raise ValueError("Euler pairing of non-integral classes")
    return int(value)
